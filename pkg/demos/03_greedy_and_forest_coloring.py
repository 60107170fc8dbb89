"""List dicoloring with the two workhorse procedures.

The greedy pass wants one color more than the minimum degree: a color is
only ever excluded when it already sits on both an out-neighbor and an
in-neighbor, and at most min-degree colors can do that. The anchored
forest gets by with exactly max-degree colors by coloring toward the
anchors, leaves first, so every vertex still has its uncolored parent as
slack when its turn comes.
"""

import random

from dicolor import (
    build_anchored_forest,
    color_non_eulerian,
    forest_list_dicolor,
    gen_bounded_degree_random,
    greedy_list_dicolor,
    min_degree_lists,
    max_degree_lists,
    verify_list_dicoloring,
    Digraph,
)

rng = random.Random(7)

# Greedy on a random digraph with min-degree-plus-one lists.
digraph = gen_bounded_degree_random(12, 3, 0.5, seed=3)
lists = min_degree_lists(digraph)
coloring = greedy_list_dicolor(digraph, lists)
print("greedy on a random 12-vertex digraph:")
print("  coloring:", coloring)
print("  verified:", verify_list_dicoloring(digraph, coloring, lists)[0])

# The anchored forest: BFS parents toward the anchor set, layered by the
# height of the inverse tree, colored leaves first.
path = Digraph(5, [(i, i + 1) for i in range(4)] + [(i + 1, i) for i in range(4)])
forest = build_anchored_forest(path, [4])
print()
print("digon path anchored at its right end:")
print("  parents:", forest.parent)
print("  layers: ", forest.layer)
partial = forest_list_dicolor(path, forest, max_degree_lists(path))
print("  forest coloring of the non-anchors:", partial)

# Components that are not Eulerian always color with degree-sized lists:
# reserve an independent set of unbalanced vertices, forest-color the
# rest, then each reserved vertex still has a one-sided-free color.
lopsided = Digraph(4, [(0, 1), (1, 2), (2, 0), (3, 0)])
lists = max_degree_lists(lopsided)
coloring = color_non_eulerian(lopsided, lists)
print()
print("non-Eulerian component (triangle plus a feeding arc):")
print("  coloring:", coloring)
print("  verified:", verify_list_dicoloring(lopsided, coloring, lists)[0])
