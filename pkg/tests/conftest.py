import random

import pytest

from dicolor import Digraph, UndirectedGraph

# A 7-vertex Eulerian 2-regular digraph (one digon) with a spanning good
# cycle on which a fully blocked hole at 0 survives 2|G| shifts in both
# rotational directions, forcing the exhaustive fallback. Found by search
# over small Eulerian digraphs; a second valid blocked coloring is the
# color swap of the first.
DOUBLE_CAP_ARCS = [
    (0, 1), (0, 5), (1, 0), (1, 2), (2, 3), (2, 6), (3, 1),
    (3, 4), (4, 2), (4, 5), (5, 0), (5, 6), (6, 3), (6, 4),
]
DOUBLE_CAP_CYCLE = (0, 1, 2, 6, 3, 4, 5)
DOUBLE_CAP_COLORINGS = (
    {1: 0, 2: 1, 3: 1, 4: 0, 5: 1, 6: 0},
    {1: 1, 2: 0, 3: 0, 4: 1, 5: 0, 6: 1},
)


def double_cap_instance(variant: int = 0):
    d = Digraph(7, DOUBLE_CAP_ARCS)
    lists = {v: (0, 1) for v in range(7)}
    return d, lists, dict(DOUBLE_CAP_COLORINGS[variant]), DOUBLE_CAP_CYCLE, 0


def random_digraph(rng: random.Random, n: int, arc_prob: float = 0.3) -> Digraph:
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < arc_prob
    ]
    return Digraph(n, arcs)


def random_simple_graph(rng: random.Random, n: int, edge_prob: float = 0.4) -> UndirectedGraph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < edge_prob
    ]
    return UndirectedGraph(n, edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xD1C0)
