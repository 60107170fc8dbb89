"""The two headline solvers, cross-checked by the exact oracle.

degree_list_dicolor: any digraph whose components are not Gallai trees is
list-dicolorable with max-degree-sized lists. brooks_dicolor: for d >= 3,
any digraph with all maximum degrees at most d and no complete symmetric
digraph on d+1 vertices has a d-dicoloring.
"""

import random

from dicolor import (
    ContainsForbiddenClique,
    GallaiComponent,
    UndirectedGraph,
    brooks_dicolor,
    degree_list_dicolor,
    exact_list_dicolorable,
    gen_bounded_degree_random,
    gen_complete_symmetric,
    gen_eulerian_regular,
    max_degree_lists,
    verify_dicoloring,
    verify_list_dicoloring,
)

# Degree-sized lists on a random non-Gallai digraph, random 2-element
# lists drawn from three colors.
rng = random.Random(11)
digraph = gen_bounded_degree_random(9, 2, 0.8, seed=14)
lists = {v: tuple(sorted(rng.sample(range(3), max(digraph.max_degree(v), 1))))
         for v in range(digraph.n)}
coloring = degree_list_dicolor(digraph, lists)
print("degree-list coloring:", coloring)
print("  verified:", verify_list_dicoloring(digraph, coloring, lists)[0])
print("  oracle agrees it is feasible:", exact_list_dicolorable(digraph, lists)[0])

# The Gallai obstruction in action: symmetrized K4 with three colors.
k4 = gen_complete_symmetric(4)
try:
    degree_list_dicolor(k4, max_degree_lists(k4))
except GallaiComponent as exc:
    print()
    print("symmetrized K4 rejected:", exc)
print("  oracle confirms infeasible:",
      not exact_list_dicolorable(k4, {v: (0, 1, 2) for v in range(4)})[0])

# Brooks: the symmetrized Petersen graph is 3-regular both ways and has
# no symmetric K4, so three colors suffice.
petersen = UndirectedGraph(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)],
).symmetrize()
coloring = brooks_dicolor(petersen, 3)
print()
print("Petersen 3-dicoloring verified:", verify_dicoloring(petersen, coloring)[0],
      "using colors", sorted(set(coloring.values())))

try:
    brooks_dicolor(k4, 3)
except ContainsForbiddenClique as exc:
    print("symmetrized K4 with d=3 rejected:", exc)

# Regular Eulerian digraphs exercise the good-cycle machinery end to end.
regular = gen_eulerian_regular(10, 3, seed=2)
coloring = brooks_dicolor(regular, 3)
print("random 3-in 3-out digraph on 10 vertices 3-dicolored:",
      verify_dicoloring(regular, coloring)[0])
