"""
Named graphs and the graph6 format
==================================

Build a few cubic graphs, round-trip them through graph6 and test
isomorphism with the canonical form.
"""
from occulab.graph_core import (
    canonical_form,
    girth,
    is_isomorphic,
    named_graph,
    parse_graph6,
    write_graph6,
)
from occulab.graph_core.named import generalized_petersen, lcf

# The Petersen graph is the generalized Petersen graph GP(5, 2)
petersen = named_graph("petersen")
print("Petersen:", petersen.n, "vertices,", petersen.num_edges, "edges, girth", girth(petersen))

# graph6 is a compact printable encoding; parsing it back gives an equal graph
line = write_graph6(petersen)
print("graph6:", line)
assert parse_graph6(line) == petersen

# Malformed input reports the byte offset of the problem
try:
    parse_graph6("I?h]@eOWG?")
except ValueError as err:
    print("rejected:", err)

# The Heawood graph has two common constructions; canonical forms agree
heawood = named_graph("heawood")
relabeled = heawood.relabel(list(reversed(range(heawood.n))))
print("relabeling preserves canonical form:", canonical_form(heawood) == canonical_form(relabeled))
print("LCF[5,-5]^7 isomorphic to Heawood?", is_isomorphic(lcf(14, [5, -5], 7), heawood))
print("GP(7,2) isomorphic to Heawood?", is_isomorphic(generalized_petersen(7, 2), heawood))
