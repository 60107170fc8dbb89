"""Seeded, deterministic instance generators.

Each generator is a pure function of its parameters and seed: the same
call always returns the same digraph. Rejection sampling caps out with
RetryExhausted instead of looping forever.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Sequence

from .digraph import Digraph
from .errors import BudgetExceeded, RetryExhausted

_RETRY_CAP = 10_000


@dataclass(frozen=True)
class GenSpec:
    """Family tag plus parameters; identical spec means identical output."""

    family: str
    params: dict[str, Any] = field(default_factory=dict)

    def build(self) -> Digraph:
        return generate(self)


def generate(spec: GenSpec) -> Digraph:
    families = {
        "dicycle": gen_dicycle,
        "symmetric-cycle": gen_symmetric_cycle,
        "complete-symmetric": gen_complete_symmetric,
        "gallai-tree": gen_gallai_tree,
        "eulerian-regular": gen_eulerian_regular,
        "cayley-ball": gen_cayley_ball,
        "bounded-random": gen_bounded_degree_random,
    }
    if spec.family not in families:
        raise ValueError(f"unknown family {spec.family!r}")
    return families[spec.family](**spec.params)


def gen_dicycle(n: int) -> Digraph:
    """Directed cycle 0 -> 1 -> ... -> n-1 -> 0."""
    if n < 2:
        raise ValueError("a dicycle needs at least 2 vertices")
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_symmetric_cycle(n: int) -> Digraph:
    """Cycle with every edge replaced by a digon."""
    if n < 3:
        raise ValueError("a symmetric cycle needs at least 3 vertices")
    arcs = []
    for i in range(n):
        arcs.append((i, (i + 1) % n))
        arcs.append(((i + 1) % n, i))
    return Digraph(n, arcs)


def gen_complete_symmetric(n: int) -> Digraph:
    """All ordered pairs: the symmetrization of the complete graph."""
    if n < 1:
        raise ValueError("need at least 1 vertex")
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


# -- Gallai trees ---------------------------------------------------------------

_BLOCK_KINDS = ("digon", "dicycle", "odd-cycle", "complete")


def gen_gallai_tree(
    blocks: Sequence[tuple], seed: int = 0
) -> Digraph:
    """Glue blocks at cut vertices so every block is of a Gallai kind.

    Each entry is ``(kind, size)`` or ``(kind, size, attach)`` with kind in
    {digon, dicycle, odd-cycle, complete}. The first block starts the
    digraph; later blocks share exactly the attach vertex with what was
    built so far (a seeded random choice when attach is omitted).
    """
    if not blocks:
        raise ValueError("need at least one block")
    rng = random.Random(seed)
    arcs: list[tuple[int, int]] = []
    n = 0
    for item in blocks:
        kind, size = item[0], item[1]
        attach = item[2] if len(item) > 2 else None
        if kind not in _BLOCK_KINDS:
            raise ValueError(f"unknown block kind {kind!r}")
        if kind == "digon" and size != 2:
            raise ValueError("a digon block has size 2")
        if kind == "dicycle" and size < 2:
            raise ValueError("a dicycle block needs size >= 2")
        if kind == "odd-cycle" and (size < 3 or size % 2 == 0):
            raise ValueError("an odd symmetric cycle block needs odd size >= 3")
        if kind == "complete" and size < 2:
            raise ValueError("a complete symmetric block needs size >= 2")
        if n == 0:
            members = list(range(size))
            n = size
        else:
            if attach is None:
                attach = rng.randrange(n)
            elif not 0 <= attach < n:
                raise ValueError(f"attach vertex {attach} does not exist yet")
            members = [attach] + list(range(n, n + size - 1))
            n += size - 1
        arcs.extend(_block_arcs(kind, members))
    return Digraph(n, arcs)


def _block_arcs(kind: str, members: list[int]) -> list[tuple[int, int]]:
    k = len(members)
    if kind == "digon":
        u, v = members
        return [(u, v), (v, u)]
    if kind == "dicycle":
        return [(members[i], members[(i + 1) % k]) for i in range(k)]
    arcs = []
    if kind == "odd-cycle":
        for i in range(k):
            u, v = members[i], members[(i + 1) % k]
            arcs.append((u, v))
            arcs.append((v, u))
        return arcs
    # complete
    for u in members:
        for v in members:
            if u != v:
                arcs.append((u, v))
    return arcs


# -- random families --------------------------------------------------------------

def gen_eulerian_regular(n: int, d: int, seed: int = 0) -> Digraph:
    """Union of d fixed-point-free permutations with no repeated arcs, so
    every vertex has in- and out-degree exactly d."""
    if not 0 < d < n:
        raise ValueError(f"need 0 < d < n, got d={d}, n={n}")
    rng = random.Random(seed)
    images: list[list[int]] = [[] for _ in range(n)]
    perms = 0
    tries = 0
    while perms < d:
        tries += 1
        if tries > _RETRY_CAP:
            raise RetryExhausted(
                f"no admissible permutation after {_RETRY_CAP} tries (n={n}, d={d})"
            )
        perm = list(range(n))
        rng.shuffle(perm)
        if any(perm[v] == v or perm[v] in images[v] for v in range(n)):
            continue
        for v in range(n):
            images[v].append(perm[v])
        perms += 1
    return Digraph(n, [(v, w) for v in range(n) for w in images[v]])


def gen_bounded_degree_random(
    n: int, d: int, p_digon: float, seed: int = 0
) -> Digraph:
    """Random digraph with every maximum degree at most d.

    Repeatedly proposes a non-adjacent vertex pair; with probability
    p_digon inserts a digon, otherwise a single arc in a random direction,
    skipping proposals that would push a degree over d.
    """
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    rng = random.Random(seed)
    d_out = [0] * n
    d_in = [0] * n
    adjacent: set[tuple[int, int]] = set()
    arcs: list[tuple[int, int]] = []
    for _ in range(8 * n * d):
        if n < 2:
            break
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v or (min(u, v), max(u, v)) in adjacent:
            continue
        if rng.random() < p_digon:
            if (
                d_out[u] < d and d_in[u] < d and d_out[v] < d and d_in[v] < d
            ):
                arcs += [(u, v), (v, u)]
                d_out[u] += 1; d_in[u] += 1; d_out[v] += 1; d_in[v] += 1
                adjacent.add((min(u, v), max(u, v)))
        else:
            if rng.random() < 0.5:
                u, v = v, u
            if d_out[u] < d and d_in[v] < d:
                arcs.append((u, v))
                d_out[u] += 1; d_in[v] += 1
                adjacent.add((min(u, v), max(u, v)))
    return Digraph(n, arcs)


# -- Cayley balls -------------------------------------------------------------------

_Word = tuple[tuple[int, int], ...]  # syllables (generator index, exponent 1..3)


def _word_length(word: _Word) -> int:
    return sum(min(e, 4 - e) for _, e in word)


def _left_multiply(gen: int, word: _Word) -> _Word:
    """Left-multiply by one generator of order 4."""
    if word and word[0][0] == gen:
        exponent = (word[0][1] + 1) % 4
        if exponent == 0:
            return word[1:]
        return ((gen, exponent),) + word[1:]
    return ((gen, 1),) + word


def gen_cayley_ball(d: int, radius: int, max_vertices: int = 5000) -> Digraph:
    """Ball of the generator digraph of the free product of d copies of the
    cyclic group of order 4.

    Vertices are reduced words of length at most the radius; there is an
    arc from w to g*w for each of the d generators g whenever both words
    lie in the ball. The result has no digons and no odd cycles.
    """
    if d < 1 or radius < 1:
        raise ValueError("need d >= 1 and radius >= 1")
    words: set[_Word] = {()}
    frontier: list[_Word] = [()]
    while frontier:
        word = frontier.pop()
        for gen in range(d):
            for factor in (1, 3):  # multiply by each generator and its inverse
                nxt = word
                for _ in range(factor):
                    nxt = _left_multiply(gen, nxt)
                if _word_length(nxt) <= radius and nxt not in words:
                    words.add(nxt)
                    frontier.append(nxt)
                    if len(words) > max_vertices:
                        raise BudgetExceeded(
                            f"ball exceeds {max_vertices} vertices"
                        )
    ordered = sorted(words, key=lambda w: (_word_length(w), w))
    ids = {w: i for i, w in enumerate(ordered)}
    arcs = []
    for word in ordered:
        for gen in range(d):
            image = _left_multiply(gen, word)
            if image in ids:
                arcs.append((ids[word], ids[image]))
    return Digraph(len(ordered), arcs)
