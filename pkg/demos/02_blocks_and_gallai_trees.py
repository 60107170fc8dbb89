"""Block structure: biconnected decomposition, block classification, and
Gallai trees.

A connected digraph is a Gallai tree when every block induces a dicycle,
an odd symmetric cycle, or a complete symmetric digraph. Gallai trees are
exactly the components where degree-sized color lists can fail; every
other component is guaranteed colorable.
"""

from dicolor import (
    block_decomposition,
    classify_block,
    edge_deleted_forest_graph,
    gen_complete_symmetric,
    gen_gallai_tree,
    gen_symmetric_cycle,
    is_gallai_tree,
)

# Glue blocks at cut vertices: a complete symmetric K3, a directed 4-cycle
# hanging off vertex 1, and a digon off vertex 3.
tree = gen_gallai_tree([("complete", 3), ("dicycle", 4, 1), ("digon", 2, 3)])
print("a Gallai tree on", tree.n, "vertices with", tree.m, "arcs")

decomp = block_decomposition(tree)
for block in decomp.blocks:
    cls = classify_block(tree, block)
    print(f"  block {block}: {cls.kind.value}")
print("  cut vertices:", decomp.cut_vertices)
print("  is it a Gallai tree?", is_gallai_tree(tree, range(tree.n)))

# The per-block edge deletion turns any Gallai tree into a spanning tree:
# cycles lose their least edge, complete blocks keep a Hamilton path.
forest = edge_deleted_forest_graph(tree, range(tree.n))
print("  spanning tree edges:", sorted(forest.edges))
assert forest.is_acyclic() and len(forest.components()) == 1

# One even symmetric cycle is enough to leave the Gallai class: its block
# is neither a dicycle nor odd nor complete.
square = gen_symmetric_cycle(4)
print()
print("symmetrized C4 block:", classify_block(square, range(4)).kind.value)
print("is symmetrized C4 a Gallai tree?", is_gallai_tree(square, range(4)))

# Complete symmetric digraphs are the d >= 3 obstruction in Brooks form.
k4 = gen_complete_symmetric(4)
print("is symmetrized K4 a Gallai tree?", is_gallai_tree(k4, range(4)))
