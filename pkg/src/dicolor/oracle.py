"""Exact, exponential-time ground truth for desk-scale validation.

Every solver here refuses inputs above its budget instead of running
unboundedly. Searches are plain backtracking over color choices with one
prune: adding a vertex to a color class must not close a directed cycle
inside that class.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Mapping, Sequence

from .digraph import Digraph, UndirectedGraph
from .errors import BudgetExceeded, NoExtension


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 12
    max_colors: int = 6
    time_cap: float = 10.0  # seconds per call


DEFAULT_BUDGET = OracleBudget()

_CHECK_EVERY = 2048


class _Deadline:
    def __init__(self, seconds: float):
        self.expires = time.monotonic() + seconds
        self.ticks = 0

    def poll(self) -> None:
        self.ticks += 1
        if self.ticks % _CHECK_EVERY == 0 and time.monotonic() > self.expires:
            raise BudgetExceeded("time cap exceeded")


def _closes_class_cycle(digraph: Digraph, members: set[int], v: int) -> bool:
    """Would adding v to this color class create a dicycle inside it?"""
    stack = [w for w in digraph.out_neighbors(v) if w in members]
    seen = set(stack)
    while stack:
        u = stack.pop()
        if digraph.has_arc(u, v):
            return True
        for w in digraph.out_neighbors(u):
            if w in members and w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def exact_dichromatic_number(
    digraph: Digraph, budget: OracleBudget = DEFAULT_BUDGET
) -> int:
    """Least number of colors in any dicoloring, by exact search."""
    if digraph.n > budget.max_vertices:
        raise BudgetExceeded(f"{digraph.n} vertices exceed the budget of {budget.max_vertices}")
    if digraph.n == 0:
        return 0
    deadline = _Deadline(budget.time_cap)
    for k in range(1, min(digraph.n, budget.max_colors) + 1):
        if _search_k_dicoloring(digraph, k, deadline) is not None:
            return k
    raise BudgetExceeded(
        f"dichromatic number exceeds the color budget of {budget.max_colors}"
    )


def _search_k_dicoloring(
    digraph: Digraph, k: int, deadline: _Deadline
) -> dict[int, int] | None:
    """First k-dicoloring in lexicographic order with class symmetry
    breaking (vertex v may open at most one fresh color)."""
    n = digraph.n
    assignment: dict[int, int] = {}
    classes: list[set[int]] = [set() for _ in range(k)]

    def backtrack(v: int, used: int) -> bool:
        deadline.poll()
        if v == n:
            return True
        for color in range(min(used + 1, k)):
            if _closes_class_cycle(digraph, classes[color], v):
                continue
            classes[color].add(v)
            assignment[v] = color
            if backtrack(v + 1, max(used, color + 1)):
                return True
            classes[color].discard(v)
            del assignment[v]
        return False

    return dict(assignment) if backtrack(0, 0) else None


def exact_list_dicolorable(
    digraph: Digraph,
    lists: Mapping[int, Sequence[int]],
    budget: OracleBudget = DEFAULT_BUDGET,
) -> tuple[bool, dict[int, int] | None]:
    """Exhaustive search for an L-dicoloring; returns (found, witness)."""
    if digraph.n > budget.max_vertices:
        raise BudgetExceeded(f"{digraph.n} vertices exceed the budget of {budget.max_vertices}")
    lst = {v: tuple(sorted(set(colors))) for v, colors in lists.items()}
    for v in range(digraph.n):
        if not lst.get(v):
            return False, None
    deadline = _Deadline(budget.time_cap)
    assignment: dict[int, int] = {}
    classes: dict[int, set[int]] = {}

    def backtrack(v: int) -> bool:
        deadline.poll()
        if v == digraph.n:
            return True
        for color in lst[v]:
            members = classes.setdefault(color, set())
            if _closes_class_cycle(digraph, members, v):
                continue
            members.add(v)
            assignment[v] = color
            if backtrack(v + 1):
                return True
            members.discard(v)
            del assignment[v]
        return False

    if backtrack(0):
        return True, dict(assignment)
    return False, None


def exhaustive_cycle_recolor(
    digraph: Digraph,
    coloring: Mapping[int, int],
    lists: Mapping[int, Sequence[int]],
    region: Sequence[int],
    budget: OracleBudget = DEFAULT_BUDGET,
) -> dict[int, int]:
    """First list-respecting recoloring of the region (in lexicographic
    order) that is valid together with the unchanged complement.

    The complement of the region keeps its colors from ``coloring``; region
    vertices are reassigned from scratch, whether or not they were colored.
    """
    todo = sorted(set(region))
    if len(todo) > budget.max_vertices:
        raise BudgetExceeded(
            f"region of {len(todo)} vertices exceeds the budget of {budget.max_vertices}"
        )
    lst = {v: tuple(sorted(set(colors))) for v, colors in lists.items()}
    for v in todo:
        if not lst.get(v):
            raise NoExtension(f"vertex {v} has an empty list")
    fixed = {v: c for v, c in coloring.items() if v not in set(todo)}
    # A monochromatic dicycle in the fixed part can never be repaired.
    from .coloring import find_monochromatic_dicycle

    if find_monochromatic_dicycle(digraph, fixed) is not None:
        raise NoExtension("the fixed part of the coloring is already invalid")
    deadline = _Deadline(budget.time_cap)
    classes: dict[int, set[int]] = {}
    for v, c in fixed.items():
        classes.setdefault(c, set()).add(v)
    result = dict(fixed)

    def backtrack(i: int) -> bool:
        deadline.poll()
        if i == len(todo):
            return True
        v = todo[i]
        for color in lst[v]:
            members = classes.setdefault(color, set())
            if _closes_class_cycle(digraph, members, v):
                continue
            members.add(v)
            result[v] = color
            if backtrack(i + 1):
                return True
            members.discard(v)
            del result[v]
        return False

    if backtrack(0):
        return result
    raise NoExtension("no list-respecting recoloring of the region works")


def undirected_chromatic_number(
    graph: UndirectedGraph, budget: OracleBudget = DEFAULT_BUDGET
) -> int:
    """Exact chromatic number by backtracking proper coloring."""
    if graph.n > budget.max_vertices:
        raise BudgetExceeded(f"{graph.n} vertices exceed the budget of {budget.max_vertices}")
    if graph.n == 0:
        return 0
    deadline = _Deadline(budget.time_cap)
    order = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    for k in range(1, min(graph.n, budget.max_colors) + 1):
        if _search_k_proper(graph, order, k, deadline):
            return k
    raise BudgetExceeded(
        f"chromatic number exceeds the color budget of {budget.max_colors}"
    )


def _search_k_proper(
    graph: UndirectedGraph, order: list[int], k: int, deadline: _Deadline
) -> bool:
    colors: dict[int, int] = {}

    def backtrack(i: int, used: int) -> bool:
        deadline.poll()
        if i == len(order):
            return True
        v = order[i]
        taken = {colors[w] for w in graph.neighbors(v) if w in colors}
        for color in range(min(used + 1, k)):
            if color in taken:
                continue
            colors[v] = color
            if backtrack(i + 1, max(used, color + 1)):
                return True
            del colors[v]
        return False

    return backtrack(0, 0)
