import itertools
import random

import pytest

from dicolor import (
    BadBlock,
    BlockKind,
    Digraph,
    NotABlock,
    NotACycle,
    NotGallai,
    UndirectedGraph,
    block_decomposition,
    canonical_cycle,
    classify_block,
    digon_graph,
    edge_deleted_forest_graph,
    find_complete_symmetric_subgraph,
    find_good_cycle,
    gen_complete_symmetric,
    gen_dicycle,
    gen_eulerian_regular,
    gen_gallai_tree,
    gen_symmetric_cycle,
    is_biconnected_set,
    is_gallai_tree,
    is_good_cycle,
)
from conftest import random_digraph, random_simple_graph


# -- independent definition oracles -------------------------------------------

def oracle_complete_symmetric(d: Digraph) -> bool:
    return all(
        (u, v) in d.arcs for u in range(d.n) for v in range(d.n) if u != v
    ) and d.n >= 1


def oracle_dicycle(d: Digraph) -> bool:
    if d.n < 2:
        return False
    for perm in itertools.permutations(range(1, d.n)):
        order = (0,) + perm
        want = {(order[i], order[(i + 1) % d.n]) for i in range(d.n)}
        if d.arcs == frozenset(want):
            return True
    return False


def oracle_odd_symmetric_cycle(d: Digraph) -> bool:
    if d.n < 3 or d.n % 2 == 0:
        return False
    for perm in itertools.permutations(range(1, d.n)):
        order = (0,) + perm
        want = set()
        for i in range(d.n):
            want.add((order[i], order[(i + 1) % d.n]))
            want.add((order[(i + 1) % d.n], order[i]))
        if d.arcs == frozenset(want):
            return True
    return False


def oracle_good_cycle(d: Digraph, cyc) -> bool:
    """Enumerate every orientation; check the definition directly."""
    k = len(cyc)
    per_edge = []
    for i in range(k):
        u, v = cyc[i], cyc[(i + 1) % k]
        per_edge.append([a for a in ((u, v), (v, u)) if a in d.arcs])
    some_non_dicycle = False
    for combo in itertools.product(*per_edge):
        forward = all(combo[i] == (cyc[i], cyc[(i + 1) % k]) for i in range(k))
        backward = all(combo[i] == (cyc[(i + 1) % k], cyc[i]) for i in range(k))
        if not forward and not backward:
            some_non_dicycle = True
            break
    sub, _ = d.induced(cyc)
    return (
        some_non_dicycle
        and not oracle_odd_symmetric_cycle(sub)
        and not oracle_complete_symmetric(sub)
    )


# -- block decomposition -------------------------------------------------------

class TestBlockDecomposition:
    def test_two_triangles_sharing_a_vertex(self):
        d = gen_gallai_tree([("complete", 3), ("complete", 3, 0)])
        decomp = block_decomposition(d)
        assert decomp.blocks == ((0, 1, 2), (0, 3, 4))
        assert decomp.cut_vertices == (0,)

    def test_directed_five_cycle(self):
        decomp = block_decomposition(gen_dicycle(5))
        assert decomp.blocks == ((0, 1, 2, 3, 4),)
        assert decomp.cut_vertices == ()

    def test_digon_path(self):
        d = Digraph(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
        decomp = block_decomposition(d)
        assert decomp.blocks == ((0, 1), (1, 2))
        assert decomp.cut_vertices == (1,)

    def test_isolated_vertices_produce_no_block(self):
        assert block_decomposition(Digraph(3)).blocks == ()

    def test_edges_partition(self, rng):
        for _ in range(40):
            d = random_digraph(rng, rng.randrange(2, 9))
            g = d.underlying()
            decomp = block_decomposition(d)
            per_block = 0
            for block in decomp.blocks:
                inside = set(block)
                per_block += sum(1 for u, v in g.edges if u in inside and v in inside)
            assert per_block == g.m
            for a, b in itertools.combinations(decomp.blocks, 2):
                shared = set(a) & set(b)
                assert len(shared) <= 1
                assert all(v in decomp.cut_vertices for v in shared)

    def test_cut_vertices_by_removal(self, rng):
        for _ in range(40):
            d = random_digraph(rng, rng.randrange(2, 9))
            g = d.underlying()
            base = len(g.components())
            cuts = set(block_decomposition(d).cut_vertices)
            for v in range(g.n):
                rest = UndirectedGraph(g.n, (e for e in g.edges if v not in e))
                # Ignore the removed vertex itself when counting components.
                count = sum(1 for c in rest.components() if c != (v,))
                assert (count > base) == (v in cuts), f"vertex {v}"

    def test_block_cut_tree_is_forest(self, rng):
        for _ in range(30):
            d = random_digraph(rng, rng.randrange(2, 10))
            decomp = block_decomposition(d)
            b = len(decomp.blocks)
            cut_index = {v: b + i for i, v in enumerate(decomp.cut_vertices)}
            tree = UndirectedGraph(
                b + len(decomp.cut_vertices),
                ((bi, cut_index[v]) for bi, v in decomp.tree_edges),
            )
            assert tree.is_acyclic()
            # Blocks of one digraph component belong to one tree component.
            comp_of_block = {}
            for bi, block in enumerate(decomp.blocks):
                comp_of_block[bi] = min(d.component_of(block[0]))
            for part in tree.components():
                roots = {comp_of_block[x] for x in part if x < b}
                assert len(roots) <= 1


class TestClassifyBlock:
    def test_examples(self):
        assert classify_block(gen_dicycle(3), [0, 1, 2]).kind == BlockKind.DICYCLE
        assert (
            classify_block(gen_symmetric_cycle(5), range(5)).kind
            == BlockKind.ODD_SYMMETRIC_CYCLE
        )
        assert (
            classify_block(gen_symmetric_cycle(4), range(4)).kind
            == BlockKind.GOOD_CANDIDATE
        )
        assert (
            classify_block(gen_complete_symmetric(4), range(4)).kind
            == BlockKind.COMPLETE_SYMMETRIC
        )
        digon = Digraph(2, [(0, 1), (1, 0)])
        assert classify_block(digon, [0, 1]).kind == BlockKind.DIGON
        bridge = Digraph(2, [(0, 1)])
        assert classify_block(bridge, [0, 1]).kind == BlockKind.BRIDGE_NON_DIGON

    def test_symmetric_triangle_is_complete(self):
        # The symmetrization of a triangle is both an odd symmetric cycle and
        # complete symmetric; classification prefers the complete tag.
        assert (
            classify_block(gen_complete_symmetric(3), range(3)).kind
            == BlockKind.COMPLETE_SYMMETRIC
        )

    def test_not_a_block(self):
        with pytest.raises(NotABlock):
            classify_block(gen_dicycle(4), [0, 2])
        with pytest.raises(NotABlock):
            classify_block(Digraph(3, [(0, 1), (1, 2)]), [0, 1, 2])

    def test_agrees_with_definition_oracles(self, rng):
        seen = 0
        for _ in range(150):
            d = random_digraph(rng, rng.randrange(2, 7), arc_prob=rng.uniform(0.2, 0.8))
            for block in block_decomposition(d).blocks:
                sub, _ = d.induced(block)
                cls = classify_block(d, block)
                seen += 1
                if len(block) == 2:
                    assert cls.kind in (BlockKind.DIGON, BlockKind.BRIDGE_NON_DIGON)
                    assert (cls.kind == BlockKind.DIGON) == (sub.m == 2)
                    continue
                gallai_kind = (
                    oracle_dicycle(sub)
                    or oracle_odd_symmetric_cycle(sub)
                    or oracle_complete_symmetric(sub)
                )
                assert (cls.kind != BlockKind.GOOD_CANDIDATE) == gallai_kind
                if cls.kind == BlockKind.DICYCLE:
                    assert oracle_dicycle(sub)
                if cls.kind == BlockKind.ODD_SYMMETRIC_CYCLE:
                    assert oracle_odd_symmetric_cycle(sub)
                if cls.kind == BlockKind.COMPLETE_SYMMETRIC:
                    assert oracle_complete_symmetric(sub)
        assert seen > 100


class TestGallaiTree:
    def test_directed_six_cycle(self):
        assert is_gallai_tree(gen_dicycle(6), range(6))

    def test_two_complete_blocks_glued(self):
        d = gen_gallai_tree([("complete", 3), ("complete", 3, 0)])
        assert is_gallai_tree(d, range(5))

    def test_even_symmetric_cycle_is_not(self):
        assert not is_gallai_tree(gen_symmetric_cycle(4), range(4))

    def test_single_vertex_vacuous(self):
        assert is_gallai_tree(Digraph(1), [0])

    def test_bridge_blocks_break_gallai(self):
        assert not is_gallai_tree(Digraph(2, [(0, 1)]), [0, 1])

    def test_random_gallai_trees_recognized(self, rng):
        kinds = [("digon", 2), ("dicycle", 3), ("dicycle", 5), ("odd-cycle", 5),
                 ("complete", 3), ("complete", 4), ("odd-cycle", 3)]
        for seed in range(25):
            recipe = [kinds[rng.randrange(len(kinds))] for _ in range(rng.randrange(1, 5))]
            d = gen_gallai_tree(recipe, seed=seed)
            assert is_gallai_tree(d, range(d.n)), recipe


class TestGoodCycles:
    def test_directed_triangle_not_good(self):
        assert not is_good_cycle(gen_dicycle(3), (0, 1, 2))

    def test_even_symmetric_four_cycle_good(self):
        assert is_good_cycle(gen_symmetric_cycle(4), (0, 1, 2, 3))

    def test_triangle_inside_k4_not_good(self):
        assert not is_good_cycle(gen_complete_symmetric(4), (0, 1, 2))

    def test_rejects_non_cycles(self):
        d = gen_symmetric_cycle(4)
        with pytest.raises(NotACycle):
            is_good_cycle(d, (0, 1))
        with pytest.raises(NotACycle):
            is_good_cycle(d, (0, 1, 1, 2))
        with pytest.raises(NotACycle):
            is_good_cycle(d, (0, 1, 3, 2))  # 1 and 3 not adjacent... (they are not)

    def test_agrees_with_orientation_enumeration(self, rng):
        checked = 0
        for _ in range(300):
            n = rng.randrange(3, 9)
            d = random_digraph(rng, n, arc_prob=rng.uniform(0.25, 0.9))
            vs = list(range(n))
            rng.shuffle(vs)
            k = rng.randrange(3, n + 1)
            cyc = vs[:k]
            try:
                got = is_good_cycle(d, cyc)
            except NotACycle:
                continue
            checked += 1
            assert got == oracle_good_cycle(d, tuple(cyc))
        assert checked > 30

    def test_find_on_even_symmetric_cycle(self):
        assert find_good_cycle(gen_symmetric_cycle(4), range(4)) == (0, 1, 2, 3)

    def test_find_rejects_bad_blocks(self):
        with pytest.raises(BadBlock):
            find_good_cycle(gen_complete_symmetric(4), range(4))
        with pytest.raises(BadBlock):
            find_good_cycle(gen_dicycle(5), range(5))
        with pytest.raises(BadBlock):
            find_good_cycle(gen_symmetric_cycle(5), range(5))

    def test_find_rejects_non_eulerian(self):
        d = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
        with pytest.raises(BadBlock):
            find_good_cycle(d, range(4))

    def test_find_on_chorded_cycle(self):
        # 4-dicycle with a digon chord: Eulerian, biconnected, not bad.
        d = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (2, 0)])
        cycle = find_good_cycle(d, range(4))
        assert is_good_cycle(d, cycle)

    def test_find_on_k23_symmetrization(self):
        # No Hamilton cycle exists here; the disjoint-paths route must cope.
        k23 = UndirectedGraph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
        d = k23.symmetrize()
        cycle = find_good_cycle(d, range(5))
        assert is_good_cycle(d, cycle)

    def test_find_self_consistency_random(self, rng):
        found = 0
        for seed in range(60):
            g = random_simple_graph(rng, rng.randrange(4, 9), edge_prob=0.5)
            d = g.symmetrize()
            for block in block_decomposition(d).blocks:
                if classify_block(d, block).kind != BlockKind.GOOD_CANDIDATE:
                    continue
                cycle = find_good_cycle(d, block)
                assert is_good_cycle(d, cycle)
                assert set(cycle) <= set(block)
                found += 1
        for seed in range(40):
            d = gen_eulerian_regular(rng.randrange(5, 10), rng.randrange(2, 4), seed=seed)
            for block in block_decomposition(d).blocks:
                if classify_block(d, block).kind != BlockKind.GOOD_CANDIDATE:
                    continue
                cycle = find_good_cycle(d, block)
                assert is_good_cycle(d, cycle)
                found += 1
        assert found > 40


class TestForestGraph:
    def test_complete_symmetric_four(self):
        forest = edge_deleted_forest_graph(gen_complete_symmetric(4), range(4))
        assert forest.edges == {(1, 2), (2, 3), (0, 3)}  # Hamilton cycle minus (0, 1)

    def test_directed_five_cycle(self):
        forest = edge_deleted_forest_graph(gen_dicycle(5), range(5))
        assert forest.m == 4 and forest.is_acyclic()

    def test_single_digon(self):
        d = Digraph(2, [(0, 1), (1, 0)])
        assert edge_deleted_forest_graph(d, [0, 1]).edges == {(0, 1)}

    def test_rejects_non_gallai(self):
        with pytest.raises(NotGallai):
            edge_deleted_forest_graph(gen_symmetric_cycle(4), range(4))

    def test_random_gallai_trees(self, rng):
        kinds = [("digon", 2), ("dicycle", 4), ("odd-cycle", 5), ("complete", 4),
                 ("complete", 3), ("dicycle", 2)]
        for seed in range(30):
            recipe = [kinds[rng.randrange(len(kinds))] for _ in range(rng.randrange(1, 6))]
            d = gen_gallai_tree(recipe, seed=seed)
            forest = edge_deleted_forest_graph(d, range(d.n))
            assert forest.is_acyclic()
            assert forest.edges <= d.underlying().edges
            comps = forest.components()
            assert tuple(sorted(v for c in comps for v in c)) == tuple(range(d.n))
            assert len(comps) == 1
            # Any two adjacent vertices stay connected in the forest: it spans.


class TestForbiddenClique:
    def test_k4(self):
        assert find_complete_symmetric_subgraph(gen_complete_symmetric(4), 4) == (0, 1, 2, 3)

    def test_k4_inside_bigger(self):
        d = gen_gallai_tree([("complete", 5), ("dicycle", 4, 1)])
        assert find_complete_symmetric_subgraph(d, 4) == (0, 1, 2, 3)
        assert find_complete_symmetric_subgraph(d, 5) == (0, 1, 2, 3, 4)
        assert find_complete_symmetric_subgraph(d, 6) is None

    def test_digons_required(self):
        # A directed triangle has no digons at all.
        assert find_complete_symmetric_subgraph(gen_dicycle(3), 2) is None
        assert digon_graph(gen_dicycle(3)).m == 0

    def test_eulerian_orientation_without_digons(self):
        d = gen_eulerian_regular(8, 3, seed=1)
        want = {
            frozenset(c)
            for c in itertools.combinations(range(8), 3)
            if all(
                d.has_digon(u, v)
                for u, v in itertools.combinations(c, 2)
            )
        }
        got = find_complete_symmetric_subgraph(d, 3)
        assert (got is not None) == bool(want)


class TestBiconnectedAndCanonical:
    def test_biconnected_set(self):
        assert is_biconnected_set(gen_dicycle(4), range(4))
        assert not is_biconnected_set(Digraph(3, [(0, 1), (1, 2)]), range(3))
        assert is_biconnected_set(Digraph(2, [(0, 1)]), [0, 1])
        assert not is_biconnected_set(Digraph(2), [0, 1])

    def test_canonical_cycle(self):
        assert canonical_cycle((2, 3, 0, 1)) == (0, 1, 2, 3)
        assert canonical_cycle((2, 1, 0, 3)) == (0, 1, 2, 3)
        assert canonical_cycle((5, 9, 7)) == (5, 7, 9)
