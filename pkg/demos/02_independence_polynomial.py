"""
Counting independent sets
=========================

The multiplicity vector i_k(G) lists how many independent sets of each
size a graph has; it is the coefficient list of the independence polynomial.
"""
from fractions import Fraction

from occulab.graph_core import named_graph
from occulab.indpoly import (
    enumerate_independent_sets,
    independence_number,
    partition_polynomial,
    total_count,
)

for name in ("petersen", "dodecahedron", "g14", "robertson"):
    g = named_graph(name)
    vec = enumerate_independent_sets(g)
    print(f"{name:>14}: alpha={independence_number(vec):2d} total={total_count(vec):6d}  {vec.to_text()}")

# The partition function of the hard-core model is the polynomial itself
p = partition_polynomial(enumerate_independent_sets(named_graph("petersen")))
print("P_Petersen(1/2) =", p.evaluate(Fraction(1, 2)))

# Disjoint unions multiply: K2 + K2 has (1 + 2x)^2 = 1 + 4x + 4x^2
k2 = named_graph("complete", 2)
print("K2 + K2:", enumerate_independent_sets(k2.disjoint_union(k2)).to_text())
