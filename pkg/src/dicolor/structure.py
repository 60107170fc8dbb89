"""Block structure of the underlying graph and good-cycle search.

A block is a maximal biconnected vertex set of the underlying graph. A
connected digraph is a Gallai tree when every block induces a dicycle, an
odd symmetric cycle, or a complete symmetric digraph; those block kinds
are the obstructions to degree-list dicoloring, and everything else
("good" blocks) contains a good cycle that the coloring engine can anchor
its shifting walk on.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .digraph import Digraph, UndirectedGraph
from .errors import BadBlock, NotABlock, NotACycle, NotGallai


class BlockKind(enum.Enum):
    DIGON = "digon"
    BRIDGE_NON_DIGON = "bridge-non-digon"
    DICYCLE = "dicycle"
    ODD_SYMMETRIC_CYCLE = "odd-symmetric-cycle"
    COMPLETE_SYMMETRIC = "complete-symmetric"
    GOOD_CANDIDATE = "good-candidate"


#: Kinds whose presence keeps a component a Gallai tree.
GALLAI_KINDS = frozenset(
    {
        BlockKind.DIGON,
        BlockKind.DICYCLE,
        BlockKind.ODD_SYMMETRIC_CYCLE,
        BlockKind.COMPLETE_SYMMETRIC,
    }
)


@dataclass(frozen=True)
class BlockClass:
    kind: BlockKind
    size: int


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut vertices, and the bipartite block-cut tree.

    ``blocks`` are sorted vertex tuples in lexicographic order.
    ``tree_edges`` contains one pair ``(block_index, cut_vertex)`` for each
    incidence of a cut vertex with a block.
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]
    tree_edges: frozenset[tuple[int, int]]

    def blocks_containing(self, v: int) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.blocks) if v in b)


def block_decomposition(digraph: Digraph) -> BlockDecomposition:
    """Biconnected blocks of the underlying graph.

    Iterative articulation-point DFS with an edge stack; isolated vertices
    produce no block. Deterministic: neighbors are scanned ascending and
    blocks are reported sorted lexicographically.
    """
    graph = digraph.underlying()
    n = graph.n
    disc = [-1] * n
    low = [0] * n
    is_cut = [False] * n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[frozenset[int]] = []
    timer = 0

    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        # Frame: vertex, parent, index into its adjacency list.
        stack: list[list[int]] = [[root, -1, 0]]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            frame = stack[-1]
            v, parent, i = frame
            neighbors = graph.neighbors(v)
            if i < len(neighbors):
                frame[2] += 1
                w = neighbors[i]
                if w == parent:
                    continue
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append([w, v, 0])
                elif disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent == -1:
                    continue
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    if parent == root:
                        root_children += 1
                    else:
                        is_cut[parent] = True
                    members = set()
                    while True:
                        a, b = edge_stack.pop()
                        members.add(a)
                        members.add(b)
                        if (a, b) == (parent, v):
                            break
                    blocks.append(frozenset(members))
        if root_children >= 2:
            is_cut[root] = True

    ordered = tuple(sorted(tuple(sorted(b)) for b in blocks))
    cuts = tuple(v for v in range(n) if is_cut[v])
    tree_edges = frozenset(
        (i, v) for i, block in enumerate(ordered) for v in block if is_cut[v]
    )
    return BlockDecomposition(ordered, cuts, tree_edges)


# -- block kind predicates ---------------------------------------------------

def _is_dicycle(digraph: Digraph) -> bool:
    """True iff the digraph is a single directed cycle covering all vertices."""
    n = digraph.n
    if n < 2 or digraph.m != n:
        return False
    if any(digraph.degrees(v) != (1, 1, 1, 1) for v in range(n)):
        return False
    seen = 1
    v = digraph.out_neighbors(0)[0]
    while v != 0:
        seen += 1
        v = digraph.out_neighbors(v)[0]
    return seen == n


def _is_complete_symmetric(digraph: Digraph) -> bool:
    return digraph.n >= 1 and digraph.m == digraph.n * (digraph.n - 1)


def _is_symmetric_cycle(digraph: Digraph) -> bool:
    """True iff the digraph is the symmetrization of a single cycle."""
    n = digraph.n
    if n < 3 or digraph.m != 2 * n:
        return False
    graph = digraph.underlying()
    if graph.m != n or any(graph.degree(v) != 2 for v in range(n)):
        return False
    if any(not digraph.has_digon(u, v) for u, v in graph.edges):
        return False
    return graph.is_connected()


def _is_odd_symmetric_cycle(digraph: Digraph) -> bool:
    return digraph.n % 2 == 1 and _is_symmetric_cycle(digraph)


def is_biconnected_set(digraph: Digraph, vertices: Iterable[int]) -> bool:
    """Definition check: the underlying induced graph is connected and stays
    connected after removing any single vertex."""
    vs = sorted(set(vertices))
    if len(vs) < 2:
        return False
    sub, _ = digraph.induced(vs)
    graph = sub.underlying()
    if not graph.is_connected():
        return False
    if len(vs) == 2:
        return True
    for skip in range(len(vs)):
        rest = [v for v in range(len(vs)) if v != skip]
        rest_graph = UndirectedGraph(
            len(vs), (e for e in graph.edges if skip not in e)
        )
        comp_count = sum(1 for c in rest_graph.components() if set(c) & set(rest))
        if comp_count > 1:
            return False
    return True


def classify_block(digraph: Digraph, block: Iterable[int]) -> BlockClass:
    """Classify a biconnected set by the digraph it induces.

    Precedence for a symmetric triangle (which is both an odd symmetric
    cycle and complete symmetric): COMPLETE_SYMMETRIC.
    """
    vs = sorted(set(block))
    if not is_biconnected_set(digraph, vs):
        raise NotABlock(f"vertex set {vs} is not biconnected")
    sub, _ = digraph.induced(vs)
    size = len(vs)
    if size == 2:
        kind = BlockKind.DIGON if sub.m == 2 else BlockKind.BRIDGE_NON_DIGON
        return BlockClass(kind, size)
    if _is_dicycle(sub):
        return BlockClass(BlockKind.DICYCLE, size)
    if _is_complete_symmetric(sub):
        return BlockClass(BlockKind.COMPLETE_SYMMETRIC, size)
    if _is_odd_symmetric_cycle(sub):
        return BlockClass(BlockKind.ODD_SYMMETRIC_CYCLE, size)
    return BlockClass(BlockKind.GOOD_CANDIDATE, size)


def is_gallai_tree(digraph: Digraph, component: Iterable[int]) -> bool:
    """True iff every block of the induced digraph is a digon, dicycle, odd
    symmetric cycle, or complete symmetric digraph.

    A single vertex has no blocks and counts as a Gallai tree. A size-2
    block carrying only one arc is treated as *not* of a Gallai kind; the
    coloring engine handles those blocks through a separate extension rule.
    """
    comp = sorted(set(component))
    if len(comp) <= 1:
        return True
    sub, ids = digraph.induced(comp)
    decomp = block_decomposition(sub)
    for block in decomp.blocks:
        original = tuple(ids[v] for v in block)
        if classify_block(digraph, original).kind not in GALLAI_KINDS:
            return False
    return True


# -- cycles in the underlying graph -------------------------------------------

def check_cycle(digraph: Digraph, cycle: Sequence[int]) -> tuple[int, ...]:
    """Validate a cycle of the underlying graph and return it as a tuple."""
    cyc = tuple(cycle)
    if len(cyc) < 3:
        raise NotACycle(f"cycle needs at least 3 vertices, got {len(cyc)}")
    if len(set(cyc)) != len(cyc):
        raise NotACycle("cycle vertices must be distinct")
    for i, v in enumerate(cyc):
        w = cyc[(i + 1) % len(cyc)]
        if not (digraph.has_arc(v, w) or digraph.has_arc(w, v)):
            raise NotACycle(f"consecutive vertices {v}, {w} are not adjacent")
    return cyc


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect so the least vertex comes first, then the lesser neighbor."""
    cyc = list(cycle)
    k = len(cyc)
    start = cyc.index(min(cyc))
    forward = tuple(cyc[(start + i) % k] for i in range(k))
    backward = tuple(cyc[(start - i) % k] for i in range(k))
    return min(forward, backward)


def is_good_cycle(digraph: Digraph, cycle: Sequence[int]) -> bool:
    """Decide whether a cycle of the underlying graph is good.

    Good means (1) some orientation of the cycle is not a dicycle, and
    (2) the digraph induced by the cycle's vertex set is neither an odd
    symmetric cycle nor a complete symmetric digraph.

    Condition (1) needs no enumeration: it fails exactly when every cycle
    edge carries a single arc and those arcs run consistently around.
    """
    cyc = check_cycle(digraph, cycle)
    k = len(cyc)
    forward = all(digraph.has_arc(cyc[i], cyc[(i + 1) % k]) for i in range(k))
    backward = all(digraph.has_arc(cyc[(i + 1) % k], cyc[i]) for i in range(k))
    any_digon = any(digraph.has_digon(cyc[i], cyc[(i + 1) % k]) for i in range(k))
    if (forward or backward) and not any_digon:
        return False  # single consistent orientation, and it is a dicycle
    sub, _ = digraph.induced(cyc)
    if _is_odd_symmetric_cycle(sub) or _is_complete_symmetric(sub):
        return False
    return True


def _adjacency_within(digraph: Digraph, vertices: Iterable[int]) -> dict[int, tuple[int, ...]]:
    inside = set(vertices)
    return {
        v: tuple(w for w in digraph.neighbors(v) if w in inside) for v in sorted(inside)
    }


def _underlying_is_cycle(adj: dict[int, tuple[int, ...]]) -> tuple[int, ...] | None:
    """The vertex sequence of the cycle if the graph is one, else None."""
    if len(adj) < 3 or any(len(ws) != 2 for ws in adj.values()):
        return None
    start = min(adj)
    order = [start]
    prev, cur = start, adj[start][0]
    while cur != start:
        order.append(cur)
        nxt = [w for w in adj[cur] if w != prev]
        prev, cur = cur, nxt[0]
    if len(order) != len(adj):
        return None
    return canonical_cycle(order)


class _FlowNet:
    """Tiny unit-capacity flow network over hashable nodes."""

    def __init__(self):
        self.cap: dict[tuple, int] = {}
        self.adj: dict[object, list] = {}

    def add(self, a, b, c=1):
        self.cap[(a, b)] = self.cap.get((a, b), 0) + c
        self.cap.setdefault((b, a), 0)
        self.adj.setdefault(a, [])
        self.adj.setdefault(b, [])
        if b not in self.adj[a]:
            self.adj[a].append(b)
        if a not in self.adj[b]:
            self.adj[b].append(a)

    def augment(self, start, goal) -> bool:
        parent = {start: start}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            if node == goal:
                break
            for nxt in sorted(self.adj[node], key=repr):
                if nxt not in parent and self.cap[(node, nxt)] > 0:
                    parent[nxt] = node
                    queue.append(nxt)
        if goal not in parent:
            return False
        node = goal
        while node != start:
            prev = parent[node]
            self.cap[(prev, node)] -= 1
            self.cap[(node, prev)] += 1
            node = prev
        return True


def _three_disjoint_paths(
    adj: dict[int, tuple[int, ...]], source: int, target: int
) -> list[list[int]] | None:
    """Three internally vertex-disjoint paths from source to target, if any.

    Unit vertex capacities via node splitting; BFS augmentation with
    deterministic tie-breaks.
    """
    net = _FlowNet()

    def out_node(v):
        return (v, "in") if v in (source, target) else (v, "out")

    for v, ws in adj.items():
        if v not in (source, target):
            net.add((v, "in"), (v, "out"))
        for w in ws:
            net.add(out_node(v), (w, "in"))

    flow = 0
    for _ in range(3):
        if not net.augment(out_node(source), (target, "in")):
            break
        flow += 1
    if flow < 3:
        return None

    used: dict[tuple[int, int], int] = {}
    for v, ws in adj.items():
        for w in ws:
            residual = net.cap.get((out_node(v), (w, "in")), 0)
            if residual < 1:
                used[(v, w)] = 1 - residual
    paths = []
    for _ in range(3):
        path = [source]
        v = source
        while v != target:
            nxt = sorted(w for (a, w) in used if a == v and used[(a, w)] > 0)[0]
            used[(v, nxt)] -= 1
            path.append(nxt)
            v = nxt
        paths.append(path)
    paths.sort(key=lambda p: (len(p), p))
    return paths


def _iter_simple_cycles(adj: dict[int, tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
    """All simple cycles (length >= 3) in deterministic canonical order.

    Each cycle is emitted once, rooted at its least vertex. Exponential in
    the worst case; used only as a last-resort net over a single block.
    """
    vertices = sorted(adj)
    for root in vertices:
        # DFS paths starting at root using only vertices > root beyond it.
        stack: list[tuple[list[int], set[int]]] = [([root], {root})]
        while stack:
            path, on_path = stack.pop()
            v = path[-1]
            for w in adj[v]:
                if w == root and len(path) >= 3:
                    yield canonical_cycle(path)
                elif w > root and w not in on_path:
                    stack.append((path + [w], on_path | {w}))


def find_good_cycle(digraph: Digraph, block: Iterable[int]) -> tuple[int, ...]:
    """Locate a good cycle inside a non-bad Eulerian block.

    Follows the constructive case split: a 3-vertex block or a block whose
    underlying graph is a cycle is itself the answer; otherwise two vertices
    joined by three internally disjoint paths give candidate cycles as
    pairwise unions, with an escape through a maximal complete symmetric
    superset when a union induces one. All arbitrary choices resolve
    lowest-id-first, so the result is deterministic.
    """
    vs = sorted(set(block))
    if len(vs) < 3:
        raise BadBlock(f"block {vs} has fewer than 3 vertices")
    if not is_biconnected_set(digraph, vs):
        raise BadBlock(f"vertex set {vs} is not biconnected")
    sub, _ = digraph.induced(vs)
    if not sub.is_eulerian():
        raise BadBlock("induced digraph is not Eulerian")
    if _is_dicycle(sub) or _is_odd_symmetric_cycle(sub) or _is_complete_symmetric(sub):
        raise BadBlock("block induces a dicycle, odd symmetric cycle, or complete symmetric digraph")

    adj = _adjacency_within(digraph, vs)

    if len(vs) == 3:
        cycle = canonical_cycle(vs)
        assert is_good_cycle(digraph, cycle)
        return cycle

    as_cycle = _underlying_is_cycle(adj)
    if as_cycle is not None:
        assert is_good_cycle(digraph, as_cycle)
        return as_cycle

    candidates = _candidate_cycles_via_paths(digraph, adj)
    for cycle in candidates:
        if is_good_cycle(digraph, cycle):
            return cycle

    # Net for inputs the case split does not reach (it should not trigger
    # for valid blocks, but the search stays total and deterministic).
    for cycle in _iter_simple_cycles(adj):
        if is_good_cycle(digraph, cycle):
            return cycle
    raise BadBlock("no good cycle found; the block hypothesis must be violated")


def _candidate_cycles_via_paths(
    digraph: Digraph, adj: dict[int, tuple[int, ...]]
) -> Iterator[tuple[int, ...]]:
    vertices = sorted(adj)
    found = None
    pair = None
    # Adjacent pairs first (the classical choice: a cycle chord), then all.
    pairs = [
        (u, v)
        for u in vertices
        for v in vertices
        if u < v and v in adj[u]
    ] + [(u, v) for u in vertices for v in vertices if u < v and v not in adj[u]]
    for u, v in pairs:
        paths = _three_disjoint_paths(adj, u, v)
        if paths is not None:
            found, pair = paths, (u, v)
            break
    if found is None:
        return
    p0, p1, p2 = found
    unions = [(p0, p1), (p0, p2), (p1, p2)]
    # Even unions first: two paths of equal length parity close an even cycle.
    unions.sort(key=lambda ab: ((len(ab[0]) + len(ab[1])) % 2, len(ab[0]) + len(ab[1])))
    emitted = []
    for a, b in unions:
        cycle = canonical_cycle(a + list(reversed(b))[1:-1])
        emitted.append(cycle)
        yield cycle
    # Escape for a union inducing a complete symmetric digraph: route an
    # outside vertex through members of the maximal complete superset.
    u, v = pair
    for cycle in emitted:
        sub, _ = digraph.induced(cycle)
        if not _is_complete_symmetric(sub):
            continue
        clique = _grow_complete_symmetric(digraph, set(cycle), set(adj))
        outside = [x for x in adj if x not in clique]
        if not outside:
            continue
        x = outside[0]
        legs = _two_disjoint_legs(adj, x, u, v)
        if legs is None:
            continue
        path_u, path_v = legs
        interior = set(path_u) | set(path_v)
        spare = [y for y in sorted(clique) if y not in (u, v) and y not in interior]
        total_len = (len(path_u) - 1) + (len(path_v) - 1)
        for i, y in enumerate(spare):
            # Cycle u ... x ... v, then back to u through one spare clique
            # vertex (even leg length) or two (odd), keeping the cycle even.
            if total_len % 2 == 0:
                yield canonical_cycle(path_u[::-1] + path_v[1:] + [y])
            else:
                for y2 in spare[i + 1:]:
                    yield canonical_cycle(path_u[::-1] + path_v[1:] + [y, y2])
                    break


def _grow_complete_symmetric(
    digraph: Digraph, seed: set[int], universe: set[int]
) -> set[int]:
    clique = set(seed)
    for x in sorted(universe - clique):
        if all(digraph.has_digon(x, y) for y in clique):
            clique.add(x)
    return clique


def _two_disjoint_legs(
    adj: dict[int, tuple[int, ...]], x: int, u: int, v: int
) -> tuple[list[int], list[int]] | None:
    """Paths x->u and x->v sharing only x, via two-unit flow to {u, v}."""
    sink = ("sink",)
    net = _FlowNet()

    def out_node(w):
        return (w, "in") if w == x else (w, "out")

    for w, ws in adj.items():
        if w != x:
            net.add((w, "in"), (w, "out"))
        for y in ws:
            net.add(out_node(w), (y, "in"))
    net.add((u, "out"), sink)
    net.add((v, "out"), sink)

    for _ in range(2):
        if not net.augment(out_node(x), sink):
            return None

    used: dict[tuple[int, int], int] = {}
    for w, ws in adj.items():
        for y in ws:
            residual = net.cap.get((out_node(w), (y, "in")), 0)
            if residual < 1:
                used[(w, y)] = 1 - residual
    legs = []
    for _ in range(2):
        path = [x]
        w = x
        while w not in (u, v):
            nxt = sorted(y for (a, y) in used if a == w and used[(a, y)] > 0)[0]
            used[(w, nxt)] -= 1
            path.append(nxt)
            w = nxt
        legs.append(path)
    to_u = next((p for p in legs if p[-1] == u), None)
    to_v = next((p for p in legs if p[-1] == v), None)
    if to_u is None or to_v is None:
        return None
    return to_u, to_v


# -- Gallai-tree spanning forest ----------------------------------------------

def edge_deleted_forest_graph(
    digraph: Digraph, component: Iterable[int]
) -> UndirectedGraph:
    """Spanning tree of a Gallai-tree component by per-block edge deletion.

    Cycle blocks lose their lexicographically least edge; complete blocks
    of size >= 3 keep only the Hamilton cycle through their vertices in
    ascending order, minus that cycle's least edge; digons keep their edge.
    The result is acyclic and connected on the component.
    """
    comp = sorted(set(component))
    sub, ids = digraph.induced(comp)
    decomp = block_decomposition(sub)
    kept: list[tuple[int, int]] = []
    for block in decomp.blocks:
        original = tuple(ids[v] for v in block)
        cls = classify_block(digraph, original)
        if cls.kind not in GALLAI_KINDS:
            raise NotGallai(f"block {original} is {cls.kind.value}")
        if cls.kind == BlockKind.DIGON:
            kept.append((original[0], original[1]))
            continue
        if cls.kind == BlockKind.COMPLETE_SYMMETRIC:
            ring = sorted(original)
            cycle_edges = sorted(
                tuple(sorted((ring[i], ring[(i + 1) % len(ring)])))
                for i in range(len(ring))
            )
        else:  # DICYCLE or ODD_SYMMETRIC_CYCLE: the underlying graph is a cycle
            block_sub, block_ids = digraph.induced(original)
            cycle_edges = sorted(
                tuple(sorted((block_ids[a], block_ids[b])))
                for a, b in block_sub.underlying().edges
            )
        kept.extend(cycle_edges[1:])  # drop the least edge
    return UndirectedGraph(digraph.n, kept)


# -- forbidden clique ---------------------------------------------------------

def digon_graph(digraph: Digraph) -> UndirectedGraph:
    """Undirected graph whose edges are the digons of the digraph."""
    edges = [
        (u, v) for (u, v) in digraph.arcs if u < v and (v, u) in digraph.arcs
    ]
    return UndirectedGraph(digraph.n, edges)


def find_complete_symmetric_subgraph(
    digraph: Digraph, size: int
) -> tuple[int, ...] | None:
    """A vertex set inducing the complete symmetric digraph on `size`
    vertices, or None. Backtracking clique search on the digon graph,
    lowest ids first."""
    if size <= 0:
        return ()
    if size == 1:
        return (0,) if digraph.n >= 1 else None
    graph = digon_graph(digraph)
    order = [v for v in range(graph.n) if graph.degree(v) >= size - 1]

    def extend(clique: list[int], candidates: list[int]) -> tuple[int, ...] | None:
        if len(clique) == size:
            return tuple(clique)
        if len(clique) + len(candidates) < size:
            return None
        for i, v in enumerate(candidates):
            nxt = [w for w in candidates[i + 1:] if graph.has_edge(v, w)]
            result = extend(clique + [v], nxt)
            if result is not None:
                return result
        return None

    return extend([], order)
