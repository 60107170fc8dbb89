"""Finite digraphs and their underlying undirected graphs.

Vertices are dense integer ids ``0..n-1``. Arcs are ordered pairs with no
loops; an opposite pair ``(u, v)``/``(v, u)`` is allowed and called a digon.
Both graph classes are immutable after construction, so instances can be
shared freely between threads; every operation here is a pure function of
its inputs.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, NamedTuple

from .errors import LoopArc, OutOfRange


class Degrees(NamedTuple):
    out: int
    in_: int
    max: int
    min: int


class Digraph:
    """Immutable digraph with an arc set and sorted adjacency lists.

    Duplicate arcs in the input are silently deduplicated; loops and
    out-of-range endpoints are rejected.
    """

    __slots__ = ("n", "arcs", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise OutOfRange(f"vertex count must be nonnegative, got {n}")
        arc_set = set()
        for u, v in arcs:
            if u == v:
                raise LoopArc(f"loop arc ({u}, {v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"arc ({u}, {v}) has an endpoint outside 0..{n - 1}")
            arc_set.add((u, v))
        out: list[list[int]] = [[] for _ in range(n)]
        in_: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(arc_set):
            out[u].append(v)
            in_[v].append(u)
        self.n = n
        self.arcs = frozenset(arc_set)
        self._out = tuple(tuple(vs) for vs in out)
        self._in = tuple(tuple(sorted(us)) for us in in_)

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def has_digon(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs and (v, u) in self.arcs

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._in[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors in the underlying graph, ascending."""
        self._check_vertex(v)
        return tuple(sorted(set(self._out[v]) | set(self._in[v])))

    def degrees(self, v: int) -> Degrees:
        """Out-degree, in-degree, and their max/min for one vertex."""
        self._check_vertex(v)
        d_out = len(self._out[v])
        d_in = len(self._in[v])
        return Degrees(d_out, d_in, max(d_out, d_in), min(d_out, d_in))

    def max_degree(self, v: int) -> int:
        return self.degrees(v).max

    def min_degree(self, v: int) -> int:
        return self.degrees(v).min

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise OutOfRange(f"vertex {v} outside 0..{self.n - 1}")

    # -- derived graphs ------------------------------------------------

    def underlying(self) -> "UndirectedGraph":
        """Forget orientations: one edge per adjacent pair."""
        return UndirectedGraph(
            self.n, ((u, v) for u, v in self.arcs if u < v or (v, u) not in self.arcs)
        )

    def induced(self, vertices: Iterable[int]) -> tuple["Digraph", tuple[int, ...]]:
        """Sub-digraph induced by a vertex set.

        Returns the induced digraph on remapped ids together with the remap
        table: entry ``i`` of the table is the original id of new vertex ``i``.
        """
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(keep)}
        sub_arcs = [
            (index[u], index[v]) for u, v in self.arcs if u in index and v in index
        ]
        return Digraph(len(keep), sub_arcs), tuple(keep)

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Weakly connected components, each sorted, ordered by least vertex."""
        return _components(self.n, self.neighbors)

    def component_of(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        for comp in self.components():
            if v in comp:
                return comp
        raise AssertionError("unreachable")

    def boundary(self, vertices: Iterable[int]) -> tuple[int, ...]:
        """Vertices outside the set adjacent (in the underlying graph) to it."""
        inside = set(vertices)
        for v in inside:
            self._check_vertex(v)
        out = set()
        for v in inside:
            for w in self.neighbors(v):
                if w not in inside:
                    out.add(w)
        return tuple(sorted(out))

    def is_eulerian(self) -> bool:
        """True iff every vertex has equal in- and out-degree."""
        return not self.eulerian_violations()

    def eulerian_violations(self) -> tuple[int, ...]:
        """Vertices whose in- and out-degrees differ, ascending."""
        return tuple(
            v for v in range(self.n) if len(self._out[v]) != len(self._in[v])
        )

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


class UndirectedGraph:
    """Immutable simple undirected graph on 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise OutOfRange(f"vertex count must be nonnegative, got {n}")
        edge_set = set()
        for u, v in edges:
            if u == v:
                raise LoopArc(f"loop edge ({u}, {v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            edge_set.add((min(u, v), max(u, v)))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(edge_set):
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges = frozenset(edge_set)
        self._adj = tuple(tuple(sorted(vs)) for vs in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise OutOfRange(f"vertex {v} outside 0..{self.n - 1}")
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def symmetrize(self) -> Digraph:
        """Replace each edge with a digon."""
        arcs = []
        for u, v in self.edges:
            arcs.append((u, v))
            arcs.append((v, u))
        return Digraph(self.n, arcs)

    def components(self) -> tuple[tuple[int, ...], ...]:
        return _components(self.n, self.neighbors)

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_acyclic(self) -> bool:
        """True iff the graph is a forest."""
        seen = [False] * self.n
        for root in range(self.n):
            if seen[root]:
                continue
            seen[root] = True
            stack = [(root, -1)]
            while stack:
                v, parent = stack.pop()
                for w in self.neighbors(v):
                    if w == parent:
                        continue
                    if seen[w]:
                        return False
                    seen[w] = True
                    stack.append((w, v))
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, m={self.m})"


def from_arcs(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Build a digraph from an arc list, deduplicating repeats."""
    return Digraph(n, arcs)


def symmetrize(graph: UndirectedGraph) -> Digraph:
    return graph.symmetrize()


def _components(n: int, neighbors) -> tuple[tuple[int, ...], ...]:
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        comp = [start]
        while queue:
            v = queue.popleft()
            for w in neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def iter_vertices(graph: Digraph | UndirectedGraph) -> Iterator[int]:
    return iter(range(graph.n))
