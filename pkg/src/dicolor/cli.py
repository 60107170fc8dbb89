"""Command-line interface.

Subcommands: analyze, color, verify, exact, gen, bench. Exit codes:
0 success/valid, 1 invalid coloring, 2 hypothesis violation, 3 parse or
I/O error, 4 budget exceeded. Reports on stdout are deterministic for
fixed inputs and seed; timings go to stderr.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from . import fileio
from .coloring import (
    brooks_dicolor,
    constant_lists,
    degree_list_dicolor,
    greedy_list_dicolor,
    max_degree_lists,
    min_degree_lists,
    verify_dicoloring,
    verify_list_dicoloring,
)
from .digraph import Digraph
from .errors import (
    BudgetError,
    DicolorError,
    HypothesisError,
    ParseError,
    PartialColoring,
)
from .generators import GenSpec, generate
from .oracle import DEFAULT_BUDGET, OracleBudget, exact_dichromatic_number, exact_list_dicolorable
from .structure import (
    block_decomposition,
    classify_block,
    find_complete_symmetric_subgraph,
    is_gallai_tree,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_HYPOTHESIS = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4


def _degree_histogram(digraph: Digraph) -> str:
    counts: dict[int, int] = {}
    for v in range(digraph.n):
        counts[digraph.max_degree(v)] = counts.get(digraph.max_degree(v), 0) + 1
    return " ".join(f"{d}:{counts[d]}" for d in sorted(counts))


def _summary(digraph: Digraph) -> str:
    return (
        f"n={digraph.n} m={digraph.m} "
        f"max-degree-histogram[{_degree_histogram(digraph)}]"
    )


def cmd_analyze(args) -> int:
    digraph = fileio.read_digraph(args.digraph)
    print(_summary(digraph))
    for ci, comp in enumerate(digraph.components()):
        print(f"component {ci}: vertices {' '.join(map(str, comp))}")
        sub, ids = digraph.induced(comp)
        decomp = block_decomposition(sub)
        for block in decomp.blocks:
            original = tuple(ids[v] for v in block)
            cls = classify_block(digraph, original)
            print(f"  block {' '.join(map(str, original))}: {cls.kind.value}")
        cuts = [ids[v] for v in decomp.cut_vertices]
        print(f"  cut vertices: {' '.join(map(str, sorted(cuts))) or '-'}")
        print(f"  gallai-tree: {'yes' if is_gallai_tree(digraph, comp) else 'no'}")
        balanced = all(
            digraph.degrees(v).out == digraph.degrees(v).in_ for v in comp
        )
        print(f"  eulerian: {'yes' if balanced else 'no'}")
    if args.d is not None:
        witness = find_complete_symmetric_subgraph(digraph, args.d + 1)
        if witness is None:
            print(f"complete symmetric digraph on {args.d + 1} vertices: absent")
        else:
            print(
                f"complete symmetric digraph on {args.d + 1} vertices: "
                f"{' '.join(map(str, witness))}"
            )
    return EXIT_OK


def cmd_color(args) -> int:
    digraph = fileio.read_digraph(args.digraph)
    lists = None
    if args.lists:
        lists = fileio.read_lists(args.lists, digraph.n)
    started = time.perf_counter()
    if args.mode == "greedy":
        if lists is None:
            lists = min_degree_lists(digraph)
        order = list(range(digraph.n))
        if args.seed is not None:
            random.Random(args.seed).shuffle(order)
        coloring = greedy_list_dicolor(digraph, lists, order)
    elif args.mode == "brooks":
        if args.d is None:
            print("error: --mode brooks requires --d", file=sys.stderr)
            return EXIT_PARSE
        coloring = brooks_dicolor(digraph, args.d)
        lists = constant_lists(digraph, args.d)
    else:  # degree-list
        if lists is None:
            lists = max_degree_lists(digraph)
        coloring = degree_list_dicolor(digraph, lists)
    elapsed = time.perf_counter() - started

    ok, witness = verify_list_dicoloring(digraph, coloring, lists)
    if not ok:
        print("error: produced coloring failed self-verification", file=sys.stderr)
        if witness:
            print(f"witness dicycle: {' '.join(map(str, witness))}", file=sys.stderr)
        return EXIT_INVALID
    if args.output:
        fileio.write_coloring(coloring, args.output)
    else:
        sys.stdout.write(fileio.format_coloring(coloring))
    colors_used = len(set(coloring.values())) if coloring else 0
    print(f"{_summary(digraph)} mode={args.mode} colors-used={colors_used} verified=yes")
    print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    digraph = fileio.read_digraph(args.digraph)
    coloring = fileio.read_coloring(args.coloring, digraph.n)
    try:
        if args.lists:
            lists = fileio.read_lists(args.lists, digraph.n)
            ok, witness = verify_list_dicoloring(digraph, coloring, lists)
        else:
            ok, witness = verify_dicoloring(digraph, coloring)
    except PartialColoring as exc:
        print(f"invalid: {exc}")
        return EXIT_INVALID
    if ok:
        print("valid")
        return EXIT_OK
    if witness:
        print(f"invalid; witness dicycle: {' '.join(map(str, witness))}")
    else:
        print("invalid: some vertex's color is outside its list")
    return EXIT_INVALID


def cmd_exact(args) -> int:
    digraph = fileio.read_digraph(args.digraph)
    budget = OracleBudget(args.max_vertices, args.max_colors, args.time_cap)
    number = exact_dichromatic_number(digraph, budget)
    print(f"dichromatic number: {number}")
    _, witness = exact_list_dicolorable(digraph, constant_lists(digraph, number), budget)
    assert witness is not None
    sys.stdout.write(fileio.format_coloring(witness))
    return EXIT_OK


def cmd_gen(args) -> int:
    params: dict = {}
    if args.family in ("dicycle", "symmetric-cycle", "complete-symmetric"):
        params["n"] = _require(args.n, "--n")
    elif args.family == "eulerian-regular":
        params = {"n": _require(args.n, "--n"), "d": _require(args.d, "--d"), "seed": args.seed}
    elif args.family == "bounded-random":
        params = {
            "n": _require(args.n, "--n"),
            "d": _require(args.d, "--d"),
            "p_digon": args.p_digon,
            "seed": args.seed,
        }
    elif args.family == "cayley-ball":
        params = {"d": _require(args.d, "--d"), "radius": _require(args.radius, "--radius")}
    elif args.family == "gallai-tree":
        blocks = []
        for spec in args.block or []:
            fields = spec.split(":")
            if len(fields) not in (2, 3):
                raise ParseError(f"block spec must be kind:size[:attach], got {spec!r}")
            kind = fields[0]
            try:
                numbers = [int(f) for f in fields[1:]]
            except ValueError:
                raise ParseError(f"non-integer block spec field in {spec!r}")
            blocks.append((kind, *numbers))
        if not blocks:
            raise ParseError("--family gallai-tree needs at least one --block kind:size")
        params = {"blocks": blocks, "seed": args.seed}
    digraph = generate(GenSpec(args.family, params))
    text = fileio.format_digraph(digraph)
    if args.output:
        from pathlib import Path

        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _require(value, flag: str):
    if value is None:
        raise ParseError(f"this family requires {flag}")
    return value


def cmd_bench(args) -> int:
    from .generators import gen_eulerian_regular

    rows = []
    sizes = (12, 40, 120) if args.suite == "small" else (12, 60, 200, 400)
    for n in sizes:
        digraph = gen_eulerian_regular(n, 3, seed=args.seed)
        t0 = time.perf_counter()
        greedy_list_dicolor(digraph, min_degree_lists(digraph))
        t_greedy = time.perf_counter() - t0
        t0 = time.perf_counter()
        try:
            brooks_dicolor(digraph, 3)
            t_brooks = time.perf_counter() - t0
            brooks_note = f"{t_brooks * 1000:8.1f}"
        except DicolorError as exc:
            brooks_note = f"({type(exc).__name__})"
        if n <= DEFAULT_BUDGET.max_vertices:
            t0 = time.perf_counter()
            exact_dichromatic_number(digraph)
            oracle_note = f"{(time.perf_counter() - t0) * 1000:8.1f}"
        else:
            oracle_note = "       -"
        rows.append((n, t_greedy * 1000, brooks_note, oracle_note))
    print(f"{'n':>6} {'greedy_ms':>10} {'brooks_ms':>10} {'oracle_ms':>10}")
    for n, greedy_ms, brooks_note, oracle_note in rows:
        print(f"{n:>6} {greedy_ms:>10.1f} {brooks_note:>10} {oracle_note:>10}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dicolor", description="Dicoloring toolkit for finite digraphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="blocks, Gallai and Eulerian verdicts")
    p.add_argument("digraph")
    p.add_argument("--d", type=int, help="also search for a complete symmetric digraph on d+1 vertices")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("color", help="compute a dicoloring")
    p.add_argument("digraph")
    p.add_argument("--mode", choices=("greedy", "brooks", "degree-list"), required=True)
    p.add_argument("--d", type=int, help="color count for brooks mode")
    p.add_argument("--lists", help="list assignment file: per line 'v k c_1 ... c_k'")
    p.add_argument("--seed", type=int, help="shuffle the greedy coloring order")
    p.add_argument("-o", "--output", help="write the coloring here instead of stdout")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring file")
    p.add_argument("digraph")
    p.add_argument("coloring")
    p.add_argument("--lists")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="exact dichromatic number with witness")
    p.add_argument("digraph")
    p.add_argument("--max-vertices", type=int, default=DEFAULT_BUDGET.max_vertices)
    p.add_argument("--max-colors", type=int, default=DEFAULT_BUDGET.max_colors)
    p.add_argument("--time-cap", type=float, default=DEFAULT_BUDGET.time_cap)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("gen", help="generate an instance in the text format")
    p.add_argument(
        "--family",
        required=True,
        choices=(
            "dicycle",
            "symmetric-cycle",
            "complete-symmetric",
            "gallai-tree",
            "eulerian-regular",
            "cayley-ball",
            "bounded-random",
        ),
    )
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--radius", type=int)
    p.add_argument("--p-digon", type=float, default=0.5)
    p.add_argument("--block", action="append", help="gallai-tree block, kind:size[:attach]")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="timing table over scaled families")
    p.add_argument("--suite", choices=("small", "large"), default="small")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except HypothesisError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except DicolorError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS


if __name__ == "__main__":
    sys.exit(main())
