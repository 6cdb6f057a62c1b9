"""
Comparing occupancy fractions
=============================

The occupancy fraction of a graph is the expected size of a hard-core
random independent set divided by the number of vertices.  Comparing two
graphs reduces to the sign of one integer polynomial, so crossovers are
located exactly.
"""
from fractions import Fraction

from occulab import data
from occulab.graph_core import named_graph
from occulab.indpoly import enumerate_independent_sets
from occulab.occupancy import WeightedSet, compare_occupancy, lower_envelope, occupancy_fraction


def weighted(name):
    g = named_graph(name)
    return WeightedSet(enumerate_independent_sets(g), g.n, name)


p52, dod, g14 = weighted("petersen"), weighted("dodecahedron"), weighted("g14")

for lam in (Fraction(1, 2), Fraction(3), Fraction(20)):
    vals = {s.name: float(occupancy_fraction(s).evaluate(lam)) for s in (p52, dod, g14)}
    print(f"lambda={float(lam):5.1f}", {k: round(v, 6) for k, v in vals.items()})

# Where does Petersen stop being below the dodecahedron?
prof = compare_occupancy(p52, dod)
print("Petersen - dodecahedron:", prof.to_json())

# The minimum of the three is piecewise: one graph per interval
left = 0.0
for right, argmin in lower_envelope([p52, dod, g14]):
    names = "/".join([p52, dod, g14][i].name for i in argmin)
    bound = "inf" if right is None else f"{float(right):.6f}"
    print(f"  ({left:.6f}, {bound}): {names}")
    left = float(right) if right is not None else left

# Vectors can also be given directly, without a graph
g38 = WeightedSet(data.G38_VECTOR, 38, "G38")
tc = WeightedSet(data.TUTTE_COXETER_VECTOR, 30, "Tutte-Coxeter")
print("G38 vs Tutte-Coxeter:", compare_occupancy(g38, tc).to_json())
