"""Text file formats.

Digraph format: first significant line is ``n m``, followed by ``m`` lines
``u v`` (one arc each, 0-indexed). Lines starting with ``#`` are comments.
Duplicate arcs are tolerated on read; writing emits arcs sorted
lexicographically, UTF-8, LF line endings.

List-assignment format: one line per vertex, ``v k c_1 ... c_k``.
Coloring format: one line per vertex, ``v color``.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import Iterable, TextIO

from .digraph import Digraph
from .errors import DicolorError, ParseError


def _significant_lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(fields: list[str], lineno: int) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", lineno)


def parse_digraph(text: str) -> Digraph:
    lines = iter(_significant_lines(text))
    try:
        lineno, fields = next(lines)
    except StopIteration:
        raise ParseError("empty digraph file")
    header = _ints(fields, lineno)
    if len(header) != 2:
        raise ParseError("header must be 'n m'", lineno)
    n, m = header
    arcs = []
    for lineno, fields in lines:
        pair = _ints(fields, lineno)
        if len(pair) != 2:
            raise ParseError("arc line must be 'u v'", lineno)
        arcs.append(((pair[0], pair[1]), lineno))
    if len(arcs) != m:
        raise ParseError(f"header announces {m} arcs but {len(arcs)} lines follow")
    try:
        return Digraph(n, (a for a, _ in arcs))
    except DicolorError as exc:
        raise ParseError(str(exc)) from exc


def format_digraph(digraph: Digraph) -> str:
    out = io.StringIO()
    out.write(f"{digraph.n} {digraph.m}\n")
    for u, v in sorted(digraph.arcs):
        out.write(f"{u} {v}\n")
    return out.getvalue()


def parse_lists(text: str, n: int) -> dict[int, tuple[int, ...]]:
    lists: dict[int, tuple[int, ...]] = {}
    for lineno, fields in _significant_lines(text):
        values = _ints(fields, lineno)
        if len(values) < 2:
            raise ParseError("list line must be 'v k c_1 ... c_k'", lineno)
        v, k, colors = values[0], values[1], values[2:]
        if len(colors) != k:
            raise ParseError(f"vertex {v} announces {k} colors but lists {len(colors)}", lineno)
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} outside 0..{n - 1}", lineno)
        if v in lists:
            raise ParseError(f"duplicate list for vertex {v}", lineno)
        lists[v] = tuple(sorted(set(colors)))
    return lists


def format_lists(lists: dict[int, tuple[int, ...]]) -> str:
    out = io.StringIO()
    for v in sorted(lists):
        colors = " ".join(str(c) for c in lists[v])
        out.write(f"{v} {len(lists[v])} {colors}\n")
    return out.getvalue()


def parse_coloring(text: str, n: int) -> dict[int, int]:
    coloring: dict[int, int] = {}
    for lineno, fields in _significant_lines(text):
        values = _ints(fields, lineno)
        if len(values) != 2:
            raise ParseError("coloring line must be 'v color'", lineno)
        v, color = values
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} outside 0..{n - 1}", lineno)
        if v in coloring:
            raise ParseError(f"duplicate color for vertex {v}", lineno)
        coloring[v] = color
    return coloring


def format_coloring(coloring: dict[int, int]) -> str:
    out = io.StringIO()
    for v in sorted(coloring):
        out.write(f"{v} {coloring[v]}\n")
    return out.getvalue()


# -- path-level helpers ------------------------------------------------------

def read_digraph(path: str | Path | TextIO) -> Digraph:
    return parse_digraph(_read_text(path))

def write_digraph(digraph: Digraph, path: str | Path) -> None:
    Path(path).write_text(format_digraph(digraph), encoding="utf-8")

def read_lists(path: str | Path | TextIO, n: int) -> dict[int, tuple[int, ...]]:
    return parse_lists(_read_text(path), n)

def write_lists(lists: dict[int, tuple[int, ...]], path: str | Path) -> None:
    Path(path).write_text(format_lists(lists), encoding="utf-8")

def read_coloring(path: str | Path | TextIO, n: int) -> dict[int, int]:
    return parse_coloring(_read_text(path), n)

def write_coloring(coloring: dict[int, int], path: str | Path) -> None:
    Path(path).write_text(format_coloring(coloring), encoding="utf-8")


def _read_text(path: str | Path | TextIO) -> str:
    if hasattr(path, "read"):
        return path.read()
    return Path(path).read_text(encoding="utf-8")
