"""Constructive dicoloring procedures.

A dicoloring assigns colors so that no directed cycle is monochromatic,
i.e. every color class induces a digraph whose strongly connected
components are singletons. Partial colorings are dicts from vertex to
color; an absent key means uncolored, and validity checks restrict to the
colored induced sub-digraph.

The procedures share one exclusion rule: a color is forbidden at a vertex
only when it already appears on both an out-neighbor and an in-neighbor.
The last-colored vertex of any monochromatic dicycle would have had both
cycle neighbors colored first, so the rule makes every output valid
regardless of processing order.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .digraph import Digraph
from .errors import (
    BadBlock,
    BlockedHypothesisFails,
    ContainsForbiddenClique,
    DegreeTooHigh,
    DTooSmall,
    ExtensionFailed,
    GallaiComponent,
    InvariantViolation,
    ListTooSmall,
    NoExtension,
    PartialColoring,
    UnanchoredComponent,
)
from .structure import (
    BlockKind,
    block_decomposition,
    check_cycle,
    classify_block,
    find_complete_symmetric_subgraph,
    find_good_cycle,
    is_gallai_tree,
    is_good_cycle,
)

Coloring = dict[int, int]
ListAssignment = Mapping[int, Sequence[int]]


def normalize_lists(lists: ListAssignment) -> dict[int, tuple[int, ...]]:
    """Sorted, deduplicated color tuples per vertex."""
    return {v: tuple(sorted(set(colors))) for v, colors in lists.items()}


def constant_lists(digraph: Digraph, k: int) -> dict[int, tuple[int, ...]]:
    """Every vertex gets colors 0..k-1."""
    return {v: tuple(range(k)) for v in range(digraph.n)}


def min_degree_lists(digraph: Digraph) -> dict[int, tuple[int, ...]]:
    """Colors 0..min_degree(v) per vertex (one more than the minimum degree)."""
    return {v: tuple(range(digraph.min_degree(v) + 1)) for v in range(digraph.n)}


def max_degree_lists(digraph: Digraph) -> dict[int, tuple[int, ...]]:
    """Colors 0..max_degree(v)-1 per vertex, at least one color."""
    return {
        v: tuple(range(max(digraph.max_degree(v), 1))) for v in range(digraph.n)
    }


# -- validity ----------------------------------------------------------------

def _sccs(digraph: Digraph, vertices: Iterable[int]) -> list[list[int]]:
    """Strongly connected components of the induced sub-digraph (iterative)."""
    inside = set(vertices)
    order = sorted(inside)
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    counter = itertools.count()
    result: list[list[int]] = []

    for root in order:
        if root in index:
            continue
        work: list[tuple[int, Iterable[int]]] = []
        index[root] = low[root] = next(counter)
        stack.append(root)
        on_stack.add(root)
        work.append((root, iter([w for w in digraph.out_neighbors(root) if w in inside])))
        while work:
            v, it = work[-1]
            pushed = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = next(counter)
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter([x for x in digraph.out_neighbors(w) if x in inside])))
                    pushed = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if pushed:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                result.append(sorted(comp))
    return result


def _dicycle_within(digraph: Digraph, vertices: list[int]) -> list[int]:
    """Some directed cycle inside a strongly connected set of >= 2 vertices."""
    inside = set(vertices)
    start = vertices[0]
    parent = {start: -1}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v != start and digraph.has_arc(v, start):
            path = [v]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            return list(reversed(path))
        for w in digraph.out_neighbors(v):
            if w in inside and w not in parent:
                parent[w] = v
                queue.append(w)
    raise AssertionError("strongly connected set without a dicycle")


def find_monochromatic_dicycle(
    digraph: Digraph, coloring: Mapping[int, int]
) -> list[int] | None:
    """A monochromatic dicycle of the colored induced sub-digraph, or None.

    Tolerates partial colorings: uncolored vertices are simply outside the
    checked sub-digraph.
    """
    by_color: dict[int, list[int]] = {}
    for v in sorted(coloring):
        by_color.setdefault(coloring[v], []).append(v)
    for color in sorted(by_color):
        for comp in _sccs(digraph, by_color[color]):
            if len(comp) >= 2:
                return _dicycle_within(digraph, comp)
    return None


def verify_dicoloring(
    digraph: Digraph, coloring: Mapping[int, int]
) -> tuple[bool, list[int] | None]:
    """Check a total coloring; on failure return one monochromatic dicycle."""
    _require_total(digraph, coloring)
    witness = find_monochromatic_dicycle(digraph, coloring)
    return witness is None, witness


def verify_list_dicoloring(
    digraph: Digraph, coloring: Mapping[int, int], lists: ListAssignment
) -> tuple[bool, list[int] | None]:
    """verify_dicoloring plus list membership of every assigned color."""
    _require_total(digraph, coloring)
    lst = normalize_lists(lists)
    for v in range(digraph.n):
        if v not in lst or coloring[v] not in lst[v]:
            return False, None
    return verify_dicoloring(digraph, coloring)


def _require_total(digraph: Digraph, coloring: Mapping[int, int]) -> None:
    for v in range(digraph.n):
        if v not in coloring:
            raise PartialColoring(f"vertex {v} is uncolored")


def _both_sided_colors(
    digraph: Digraph, coloring: Mapping[int, int], v: int
) -> set[int]:
    """Colors appearing on a colored out-neighbor and a colored in-neighbor."""
    out_colors = {coloring[w] for w in digraph.out_neighbors(v) if w in coloring}
    in_colors = {coloring[w] for w in digraph.in_neighbors(v) if w in coloring}
    return out_colors & in_colors


def _least_free(
    colors: Sequence[int], excluded: set[int]
) -> int | None:
    for c in colors:
        if c not in excluded:
            return c
    return None


# -- greedy ------------------------------------------------------------------

def greedy_list_dicolor(
    digraph: Digraph,
    lists: ListAssignment,
    order: Sequence[int] | None = None,
) -> Coloring:
    """Color vertices in order, giving each the least list color that does
    not already appear on both sides.

    Requires |L(v)| > min_degree(v): at most min_degree(v) colors can be
    both-sided, so a choice always remains.
    """
    lst = normalize_lists(lists)
    for v in range(digraph.n):
        if v not in lst or len(lst[v]) <= digraph.min_degree(v):
            raise ListTooSmall(v)
    if order is None:
        order = range(digraph.n)
    order = list(order)
    if sorted(order) != list(range(digraph.n)):
        raise ValueError("order must be a permutation of all vertices")
    coloring: Coloring = {}
    for v in order:
        color = _least_free(lst[v], _both_sided_colors(digraph, coloring, v))
        assert color is not None
        coloring[v] = color
    return coloring


# -- anchored forests ----------------------------------------------------------

@dataclass(frozen=True)
class AnchoredForest:
    """BFS parent forest pointing toward an anchor set.

    Iterating ``parent`` from any domain vertex reaches an anchor in
    finitely many steps; ``layer`` maps each domain vertex to the height of
    its inverse tree (leaves are layer 0), so coloring layers in ascending
    order handles every vertex before its parent.
    """

    anchors: frozenset[int]
    parent: dict[int, int] = field(compare=False)
    layer: dict[int, int] = field(compare=False)

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(sorted(self.parent))

    def coloring_order(self) -> list[int]:
        return sorted(self.parent, key=lambda v: (self.layer[v], v))


def build_anchored_forest(
    digraph: Digraph, anchors: Iterable[int], require_full: bool = False
) -> AnchoredForest:
    """BFS from the anchors over the underlying graph.

    Each reached non-anchor vertex gets as parent its least neighbor
    strictly closer to the anchor set. With ``require_full`` every
    component must contain an anchor.
    """
    anchor_set = frozenset(anchors)
    for a in anchor_set:
        digraph._check_vertex(a)
    dist: dict[int, int] = {a: 0 for a in anchor_set}
    queue = deque(sorted(anchor_set))
    while queue:
        v = queue.popleft()
        for w in digraph.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    if require_full and len(dist) != digraph.n:
        missing = min(v for v in range(digraph.n) if v not in dist)
        raise UnanchoredComponent(f"component of vertex {missing} has no anchor")
    parent = {
        v: min(w for w in digraph.neighbors(v) if dist[w] == d - 1)
        for v, d in dist.items()
        if d > 0
    }
    children: dict[int, list[int]] = {}
    for v, p in parent.items():
        children.setdefault(p, []).append(v)
    layer: dict[int, int] = {}
    for v in sorted(parent, key=lambda v: -dist[v]):
        kids = [c for c in children.get(v, ()) ]
        layer[v] = 1 + max(layer[c] for c in kids) if kids else 0
    for v, p in parent.items():
        if p in layer:
            assert layer[v] < layer[p]
    return AnchoredForest(anchor_set, parent, layer)


def forest_list_dicolor(
    digraph: Digraph, forest: AnchoredForest, lists: ListAssignment
) -> Coloring:
    """Color the forest domain layer by layer, leaves first.

    Each vertex is colored while its parent is still uncolored, so at most
    max_degree(v) - 1 colors are excluded; lists of size max_degree(v)
    always suffice. Raises InvariantViolation if that slack bound ever
    fails (it cannot, unless the forest and digraph disagree).
    """
    lst = normalize_lists(lists)
    for v in forest.parent:
        if v not in lst or len(lst[v]) < digraph.max_degree(v):
            raise ListTooSmall(v)
    coloring: Coloring = {}
    for v in forest.coloring_order():
        excluded = _both_sided_colors(digraph, coloring, v)
        if len(excluded) > digraph.max_degree(v) - 1:
            raise InvariantViolation(
                f"exclusion slack violated at vertex {v}: "
                f"{len(excluded)} colors blocked, max degree {digraph.max_degree(v)}"
            )
        color = _least_free(lst[v], excluded)
        assert color is not None
        coloring[v] = color
    return coloring


# -- reserved-vertex coloring ---------------------------------------------------

def _greedy_independent(digraph: Digraph, pool: Iterable[int]) -> list[int]:
    """Maximal independent subset of the pool, lowest ids first."""
    chosen: list[int] = []
    chosen_set: set[int] = set()
    for v in sorted(set(pool)):
        if not any(w in chosen_set for w in digraph.neighbors(v)):
            chosen.append(v)
            chosen_set.add(v)
    return chosen


def _check_lists(digraph: Digraph, lst: dict[int, tuple[int, ...]], vertices) -> None:
    for v in vertices:
        if v not in lst or len(lst[v]) < digraph.max_degree(v):
            raise ListTooSmall(v)


def _anchored_extend_color(
    digraph: Digraph,
    component: Sequence[int],
    pool: Iterable[int],
    lst: dict[int, tuple[int, ...]],
) -> Coloring:
    """Forest-color the component away from an independent reserve, then
    give each reserved vertex a color missing from one of its sides.

    The caller guarantees such a color exists for every pool vertex (true
    whenever min_degree < |L(v)| there).
    """
    reserve = _greedy_independent(digraph, pool)
    forest = build_anchored_forest(digraph, reserve)
    coloring = forest_list_dicolor(digraph, forest, lst)
    for v in reserve:
        color = _least_free(lst[v], _both_sided_colors(digraph, coloring, v))
        if color is None:
            raise InvariantViolation(
                f"no one-sided-free color at reserved vertex {v}"
            )
        coloring[v] = color
    return coloring


def color_non_eulerian(digraph: Digraph, lists: ListAssignment) -> Coloring:
    """Color every component containing a vertex with unequal in- and
    out-degree; Eulerian components are left uncolored.

    Anchors a forest at a maximal independent set of unbalanced vertices;
    each anchor keeps a usable color because its smaller side limits the
    both-sided exclusions to max_degree - 1.
    """
    lst = normalize_lists(lists)
    unbalanced = set(digraph.eulerian_violations())
    coloring: Coloring = {}
    for comp in digraph.components():
        pool = [v for v in comp if v in unbalanced]
        if not pool:
            continue
        _check_lists(digraph, lst, comp)
        coloring.update(_anchored_extend_color(digraph, comp, pool, lst))
    return coloring


# -- shifting ------------------------------------------------------------------

def shift_color(
    digraph: Digraph,
    coloring: Mapping[int, int],
    lists: ListAssignment,
    hole: int,
    to: int,
) -> Coloring:
    """Move the uncolored hole to a neighbor: the hole takes the neighbor's
    color and the neighbor becomes the new hole.

    Requires the hole to be fully blocked (every list color on both sides);
    then the stolen color is automatically in the hole's list and the
    result stays a valid partial coloring. A failure of either consequence
    raises InvariantViolation, which flags violated preconditions.
    """
    lst = normalize_lists(lists)
    if hole in coloring:
        raise ValueError(f"hole vertex {hole} is colored")
    if to not in digraph.neighbors(hole):
        raise ValueError(f"{to} is not a neighbor of the hole {hole}")
    if to not in coloring:
        raise PartialColoring(f"target vertex {to} is uncolored")
    blocked = _both_sided_colors(digraph, coloring, hole)
    if any(color not in blocked for color in lst.get(hole, ())):
        raise BlockedHypothesisFails(
            f"vertex {hole} has a one-sided-free list color; extend directly"
        )
    moved = dict(coloring)
    moved[hole] = coloring[to]
    del moved[to]
    if moved[hole] not in lst.get(hole, ()):
        raise InvariantViolation(
            f"stolen color {moved[hole]} is outside the list of vertex {hole}"
        )
    witness = find_monochromatic_dicycle(digraph, moved)
    if witness is not None:
        raise InvariantViolation(
            f"shift produced a monochromatic dicycle {witness}"
        )
    return moved


def extend_along_good_cycle(
    digraph: Digraph,
    coloring: Mapping[int, int],
    lists: ListAssignment,
    cycle: Sequence[int],
    hole: int,
) -> Coloring:
    """Complete a coloring whose only hole lies on a good cycle.

    While the hole is fully blocked, shift it to the next cycle vertex;
    stop as soon as some list color misses one side and use it. Tries one
    rotational direction for 2|G| shifts, then the other; if both cap out
    (or a shift betrays a violated precondition) falls back to exhaustive
    recoloring of the cycle plus its boundary. ExtensionFailed is raised
    only if that fallback also finds nothing.
    """
    from .oracle import exhaustive_cycle_recolor  # deferred: oracle is heavier

    cyc = check_cycle(digraph, cycle)
    if not is_good_cycle(digraph, cyc):
        raise BadBlock(f"cycle {list(cyc)} is not good")
    if hole not in cyc:
        raise ValueError(f"hole {hole} does not lie on the cycle")
    if hole in coloring:
        raise ValueError(f"hole vertex {hole} is colored")
    lst = normalize_lists(lists)
    component = digraph.component_of(hole)
    _check_lists(digraph, lst, component)
    for v in component:
        if v != hole and v not in coloring:
            raise PartialColoring(f"vertex {v} of the hole's component is uncolored")
    if find_monochromatic_dicycle(digraph, coloring) is not None:
        raise InvariantViolation("initial coloring is not a valid partial dicoloring")

    k = len(cyc)
    start = cyc.index(hole)
    for direction in (1, -1):
        current = dict(coloring)
        pos = start
        v = hole
        for step in range(2 * k + 1):
            color = _least_free(lst[v], _both_sided_colors(digraph, current, v))
            if color is not None:
                current[v] = color
                witness = find_monochromatic_dicycle(digraph, current)
                if witness is not None:
                    raise InvariantViolation(
                        f"extension produced a monochromatic dicycle {witness}"
                    )
                return current
            if step == 2 * k:
                break  # cap reached for this direction
            nxt = cyc[(pos + direction) % k]
            try:
                current = shift_color(digraph, current, lst, v, nxt)
            except InvariantViolation:
                break  # shaky preconditions; let the fallback handle it
            v = nxt
            pos = (pos + direction) % k

    region = sorted(set(cyc) | set(digraph.boundary(cyc)))
    try:
        return exhaustive_cycle_recolor(digraph, dict(coloring), lst, region)
    except NoExtension as exc:
        raise ExtensionFailed(
            "walks capped out and exhaustive recoloring found no extension"
        ) from exc


# -- degree-list dicoloring -----------------------------------------------------

def degree_list_dicolor(digraph: Digraph, lists: ListAssignment) -> Coloring:
    """List-dicolor a digraph none of whose components is a Gallai tree,
    with every list at least as large as the vertex's maximum degree.

    Per component: unbalanced components use the reserved-vertex scheme;
    Eulerian components anchor the forest at the least vertex of a good
    cycle of the least good block and finish with the shifting walk; a
    component whose only non-Gallai feature is a single-arc size-2 block
    extends across that block instead. Components that are Gallai trees
    raise GallaiComponent.
    """
    lst = normalize_lists(lists)
    _check_lists(digraph, lst, range(digraph.n))
    coloring: Coloring = {}
    for comp in digraph.components():
        if len(comp) == 1:
            raise GallaiComponent(comp[0])
        pool = [v for v in comp if digraph.degrees(v).out != digraph.degrees(v).in_]
        if pool:
            coloring.update(_anchored_extend_color(digraph, comp, pool, lst))
            continue
        coloring.update(_color_eulerian_component(digraph, comp, lst))
    return coloring


def _component_blocks(
    digraph: Digraph, component: Sequence[int]
) -> list[tuple[tuple[int, ...], BlockKind]]:
    sub, ids = digraph.induced(component)
    decomp = block_decomposition(sub)
    out = []
    for block in decomp.blocks:
        original = tuple(ids[v] for v in block)
        out.append((original, classify_block(digraph, original).kind))
    return out


def _color_eulerian_component(
    digraph: Digraph, component: Sequence[int], lst: dict[int, tuple[int, ...]]
) -> Coloring:
    blocks = _component_blocks(digraph, component)
    good = sorted(b for b, kind in blocks if kind == BlockKind.GOOD_CANDIDATE)
    if good:
        block = good[0]
        cycle = find_good_cycle(digraph, block)
        anchor = min(cycle)
        forest = build_anchored_forest(digraph, [anchor])
        partial = forest_list_dicolor(digraph, forest, lst)
        return extend_along_good_cycle(digraph, partial, lst, cycle, anchor)
    bridges = sorted(b for b, kind in blocks if kind == BlockKind.BRIDGE_NON_DIGON)
    if bridges:
        x, y = bridges[0]
        forest = build_anchored_forest(digraph, [x])
        partial = forest_list_dicolor(digraph, forest, lst)
        return _extend_across_bridge(digraph, partial, lst, x, y)
    raise GallaiComponent(component[0])


def _extend_across_bridge(
    digraph: Digraph,
    coloring: Coloring,
    lst: dict[int, tuple[int, ...]],
    x: int,
    y: int,
) -> Coloring:
    """Color the anchor of a single-arc size-2 block.

    No dicycle contains both endpoints of such a block, so the partner's
    color is always safe when it is in the anchor's list; otherwise the
    partner's color occupies one side-slot, leaving a one-sided-free color.
    """
    if coloring[y] in lst[x]:
        color = coloring[y]
    else:
        color = _least_free(lst[x], _both_sided_colors(digraph, coloring, x))
        if color is None:
            raise InvariantViolation(f"no usable color at bridge anchor {x}")
    coloring = dict(coloring)
    coloring[x] = color
    witness = find_monochromatic_dicycle(digraph, coloring)
    if witness is not None:
        raise InvariantViolation(
            f"bridge extension produced a monochromatic dicycle {witness}"
        )
    return coloring


# -- directed Brooks ------------------------------------------------------------

def brooks_dicolor(digraph: Digraph, d: int) -> Coloring:
    """d-dicolor a digraph with all maximum degrees at most d, for d >= 3,
    provided it contains no complete symmetric digraph on d+1 vertices.

    d = 1 is handled as plumbing (acyclic digraphs only); d = 2 is outside
    this solver's scope.
    """
    if d == 1:
        coloring = {v: 0 for v in range(digraph.n)}
        if find_monochromatic_dicycle(digraph, coloring) is not None:
            raise DTooSmall("d = 1 requires an acyclic digraph")
        return coloring
    if d < 3:
        raise DTooSmall(f"d = {d} is not supported (d = 2 needs the odd-cycle machinery)")
    for v in range(digraph.n):
        if digraph.max_degree(v) > d:
            raise DegreeTooHigh(v, f"vertex {v} has maximum degree {digraph.max_degree(v)} > {d}")
    witness = find_complete_symmetric_subgraph(digraph, d + 1)
    if witness is not None:
        raise ContainsForbiddenClique(witness)

    lst = constant_lists(digraph, d)
    coloring: Coloring = {}
    for comp in digraph.components():
        small = [v for v in comp if digraph.min_degree(v) < d]
        if small:
            coloring.update(_anchored_extend_color(digraph, comp, small, lst))
            continue
        # Here every vertex of the component has in- and out-degree exactly
        # d >= 3; such a component can only be a Gallai tree by being the
        # complete symmetric digraph on d+1 vertices, which was excluded.
        if is_gallai_tree(digraph, comp):
            raise InvariantViolation(
                f"regular Eulerian component at {comp[0]} is a Gallai tree "
                "yet no forbidden clique was found"
            )
        coloring.update(_color_eulerian_component(digraph, comp, lst))
    return coloring
