"""Good cycles and the color-shifting walk.

With lists exactly max-degree sized, a single uncolored vertex can be
fully blocked: every one of its list colors already appears among both
its out- and in-neighbors. On a good cycle the blockage is never final.
Shifting the hole along the cycle (the hole steals the next vertex's
color) eventually reaches a vertex with a one-sided-free color. The walk
is capped at two laps per direction; a rare instance where both
directions stay blocked falls back to exhaustive recoloring of the cycle
and its boundary.
"""

from dicolor import (
    Digraph,
    extend_along_good_cycle,
    find_good_cycle,
    is_good_cycle,
    shift_color,
    verify_list_dicoloring,
)

# A symmetric 4-cycle with one pendant digon per cycle vertex. Lists on
# the cycle are {0,1,2}; pendants are pinned to a single color.
arcs = []
for i in range(4):
    arcs += [(i, (i + 1) % 4), ((i + 1) % 4, i)]       # the cycle
    arcs += [(i, 4 + i), (4 + i, i)]                   # its pendant
d = Digraph(8, arcs)
lists = {v: (0, 1, 2) for v in range(4)}
lists.update({4: (1,), 5: (2,), 6: (0,), 7: (1,)})

cycle = find_good_cycle(d, range(4))
print("good cycle found in the decorated square:", cycle)

# Color everything except vertex 0 so that 0 is fully blocked: its
# neighbors 1, 3, 4 show all three list colors.
partial = {1: 0, 2: 1, 3: 2, 4: 1, 5: 2, 6: 0, 7: 1}
print("hole 0 sees colors", sorted({partial[w] for w in d.neighbors(0)}),
      "on digon neighbors -> fully blocked")

# One manual shift: the hole takes vertex 1's color and moves there.
moved = shift_color(d, partial, lists, 0, 1)
print("after one shift the hole is at 1 and vertex 0 wears", moved[0])

# The full extension walks the hole around (four shifts here) until a
# color frees up, then verifies.
total = extend_along_good_cycle(d, partial, lists, cycle, 0)
print("completed coloring:", {v: total[v] for v in range(4)}, "(cycle vertices)")
print("verified:", verify_list_dicoloring(d, total, lists)[0])

# A crafted Eulerian instance where BOTH walk directions stay blocked for
# two full laps; the exhaustive fallback finishes the job.
arcs = [(0, 1), (0, 5), (1, 0), (1, 2), (2, 3), (2, 6), (3, 1),
        (3, 4), (4, 2), (4, 5), (5, 0), (5, 6), (6, 3), (6, 4)]
d2 = Digraph(7, arcs)
lists2 = {v: (0, 1) for v in range(7)}
partial2 = {1: 0, 2: 1, 3: 1, 4: 0, 5: 1, 6: 0}
cycle2 = (0, 1, 2, 6, 3, 4, 5)
assert is_good_cycle(d2, cycle2)
total2 = extend_along_good_cycle(d2, partial2, lists2, cycle2, 0)
print()
print("double-blocked 7-vertex instance resolved by the fallback:", total2)
print("verified:", verify_list_dicoloring(d2, total2, lists2)[0])
