import pytest

from dicolor import (
    BlockKind,
    BudgetExceeded,
    GenSpec,
    RetryExhausted,
    block_decomposition,
    classify_block,
    gen_bounded_degree_random,
    gen_cayley_ball,
    gen_complete_symmetric,
    gen_dicycle,
    gen_eulerian_regular,
    gen_gallai_tree,
    gen_symmetric_cycle,
    generate,
    is_gallai_tree,
    exact_dichromatic_number,
)


class TestNamedFamilies:
    def test_dicycle(self):
        d = gen_dicycle(2)
        assert d.arcs == {(0, 1), (1, 0)}
        with pytest.raises(ValueError):
            gen_dicycle(1)

    def test_symmetric_cycle(self):
        d = gen_symmetric_cycle(5)
        assert d.m == 10
        assert exact_dichromatic_number(d) == 3
        with pytest.raises(ValueError):
            gen_symmetric_cycle(2)

    def test_complete_symmetric(self):
        assert gen_complete_symmetric(4).m == 12
        assert gen_complete_symmetric(1).m == 0


class TestGallaiTrees:
    def test_single_dicycle(self):
        assert gen_gallai_tree([("dicycle", 5)]) == gen_dicycle(5)

    def test_two_triangles(self):
        d = gen_gallai_tree([("complete", 3), ("complete", 3, 0)])
        assert d.n == 5
        assert is_gallai_tree(d, range(5))

    def test_even_cycle_block_rejected(self):
        with pytest.raises(ValueError):
            gen_gallai_tree([("odd-cycle", 4)])

    def test_bad_attach(self):
        with pytest.raises(ValueError):
            gen_gallai_tree([("digon", 2), ("digon", 2, 9)])

    def test_every_output_is_gallai(self):
        import random

        rng = random.Random(7)
        kinds = [("digon", 2), ("dicycle", 4), ("odd-cycle", 5), ("complete", 4)]
        for seed in range(20):
            recipe = [kinds[rng.randrange(4)] for _ in range(rng.randrange(1, 6))]
            d = gen_gallai_tree(recipe, seed=seed)
            assert is_gallai_tree(d, range(d.n))

    def test_block_structure_matches_recipe(self):
        d = gen_gallai_tree([("dicycle", 4), ("digon", 2, 2), ("odd-cycle", 3, 0)])
        kinds = sorted(
            classify_block(d, b).kind.value for b in block_decomposition(d).blocks
        )
        # A 3-vertex odd symmetric cycle classifies as complete symmetric.
        assert kinds == ["complete-symmetric", "dicycle", "digon"]


class TestEulerianRegular:
    def test_permutation_digraph(self):
        d = gen_eulerian_regular(4, 1, seed=0)
        assert all(d.degrees(v) == (1, 1, 1, 1) for v in range(4))

    def test_three_regular(self):
        d = gen_eulerian_regular(8, 3, seed=42)
        assert d.is_eulerian()
        assert all(d.degrees(v) == (3, 3, 3, 3) for v in range(8))

    def test_d_must_be_small(self):
        with pytest.raises(ValueError):
            gen_eulerian_regular(4, 4, seed=0)

    def test_tight_case_retries(self):
        # n = d + 1 forces the d permutations to partition all non-loops.
        d = gen_eulerian_regular(4, 3, seed=3)
        assert d.m == 12

    def test_deterministic(self):
        assert gen_eulerian_regular(9, 3, seed=11) == gen_eulerian_regular(9, 3, seed=11)
        assert gen_eulerian_regular(9, 3, seed=11) != gen_eulerian_regular(9, 3, seed=12)


class TestBoundedRandom:
    def test_degree_bound(self):
        for seed in range(10):
            d = gen_bounded_degree_random(12, 3, 0.5, seed=seed)
            assert all(d.max_degree(v) <= 3 for v in range(12))

    def test_all_digons(self):
        d = gen_bounded_degree_random(10, 3, 1.0, seed=1)
        assert all((v, u) in d.arcs for u, v in d.arcs)

    def test_no_digons(self):
        d = gen_bounded_degree_random(10, 3, 0.0, seed=1)
        assert all((v, u) not in d.arcs for u, v in d.arcs)

    def test_deterministic(self):
        a = gen_bounded_degree_random(10, 3, 0.4, seed=5)
        assert a == gen_bounded_degree_random(10, 3, 0.4, seed=5)


class TestCayleyBall:
    def test_single_generator_full_cycle(self):
        # The whole cyclic group of order 4: a directed 4-cycle (vertex ids
        # follow word order, so compare structure rather than labels).
        d = gen_cayley_ball(1, 3)
        assert d.n == 4
        assert classify_block(d, range(4)).kind == BlockKind.DICYCLE

    def test_two_generators_radius_one(self):
        d = gen_cayley_ball(2, 1)
        assert d.n == 5
        assert d.m == 4

    def test_digon_free_and_bipartite(self):
        for d_gens, radius in ((1, 2), (2, 2), (2, 3), (3, 2)):
            ball = gen_cayley_ball(d_gens, radius)
            assert all((v, u) not in ball.arcs for u, v in ball.arcs)
            # No odd cycles: the underlying graph is bipartite.
            color = {}
            for start in range(ball.n):
                if start in color:
                    continue
                color[start] = 0
                stack = [start]
                while stack:
                    v = stack.pop()
                    for w in ball.neighbors(v):
                        if w in color:
                            assert color[w] == 1 - color[v]
                        else:
                            color[w] = 1 - color[v]
                            stack.append(w)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            gen_cayley_ball(3, 8, max_vertices=100)


class TestGenSpec:
    def test_dispatch(self):
        spec = GenSpec("symmetric-cycle", {"n": 5})
        assert generate(spec) == gen_symmetric_cycle(5)
        assert spec.build() == gen_symmetric_cycle(5)

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            generate(GenSpec("mystery", {}))
