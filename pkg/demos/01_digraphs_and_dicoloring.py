"""Digraph basics: building, degrees, symmetrization, and what a
dicoloring is.

A dicoloring allows adjacent vertices to share a color as long as no
*directed* cycle ends up monochromatic. On a symmetrized graph every edge
is a 2-cycle, so dicoloring degenerates to proper coloring; on sparser
orientations far fewer colors are needed.
"""

from dicolor import (
    Digraph,
    UndirectedGraph,
    exact_dichromatic_number,
    gen_complete_symmetric,
    gen_dicycle,
    gen_symmetric_cycle,
    undirected_chromatic_number,
    verify_dicoloring,
)

# A directed triangle: one arc per edge, all the way around.
triangle = gen_dicycle(3)
print("directed triangle:", triangle)
for v in range(3):
    print(f"  vertex {v}: degrees {tuple(triangle.degrees(v))} (out, in, max, min)")

# All three vertices in one color class would make the whole cycle
# monochromatic; two classes break it.
ok, witness = verify_dicoloring(triangle, {0: 0, 1: 0, 2: 0})
print("all-same-color valid?", ok, "witness dicycle:", witness)
ok, _ = verify_dicoloring(triangle, {0: 0, 1: 0, 2: 1})
print("two colors valid?", ok)
print("dichromatic number of a directed cycle:", exact_dichromatic_number(triangle))

# The classic sharpness families: directed cycles need 2, odd symmetric
# cycles need 3, complete symmetric digraphs need n.
print()
print("dichromatic numbers of the extremal families:")
print("  directed C6:       ", exact_dichromatic_number(gen_dicycle(6)))
print("  symmetrized C5:    ", exact_dichromatic_number(gen_symmetric_cycle(5)))
print("  symmetrized K4:    ", exact_dichromatic_number(gen_complete_symmetric(4)))

# Symmetrization turns proper coloring into dicoloring: the two invariants
# agree on every graph.
petersen = UndirectedGraph(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)],
)
print()
print("Petersen graph: chromatic =", undirected_chromatic_number(petersen),
      " dichromatic of its symmetrization =",
      exact_dichromatic_number(petersen.symmetrize()))

# Round trip: underlying(symmetrize(G)) recovers G exactly.
assert petersen.symmetrize().underlying() == petersen
print("underlying(symmetrize(G)) == G holds.")
