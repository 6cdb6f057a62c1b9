"""
Generating regular graphs and filtering candidates
==================================================

Enumerate all cubic triangle-free graphs on 10 vertices up to
isomorphism, then keep only those whose occupancy fraction is minimal
somewhere on (0, inf).
"""
from occulab.graph_core import canonical_form, generate_regular, girth, named_graph
from occulab.indpoly import enumerate_independent_sets
from occulab.occupancy import WeightedSet, critical_filter

graphs = list(generate_regular(10, 3, girth_min=4))
print(len(graphs), "cubic graphs on 10 vertices with girth >= 4")

sets = [WeightedSet(enumerate_independent_sets(g), g.n, str(i)) for i, g in enumerate(graphs)]
kept = critical_filter(sets, mode="min")
print("survivors:", [s.name for s in kept])

petersen = canonical_form(named_graph("petersen"))
for s in kept:
    g = graphs[int(s.name)]
    tag = "(Petersen)" if canonical_form(g) == petersen else ""
    print(f"  #{s.name}: girth {girth(g)} {tag}")
