"""
Counting graph homomorphisms
============================

hom(G, H) counts edge-preserving maps.  Proper 3-colourings are homs to
K3; independent sets are homs to a looped vertex joined to an unlooped one.
"""
from occulab.graph_core import named_graph
from occulab.graph_core.named import complete, complete_bipartite
from occulab.homcount import HomTargetSpec, galvin_check, hom_count, tensor_product

k3 = complete(3)
print("3-colourings of Petersen:", hom_count(named_graph("petersen"), k3))
print("3-colourings of the dodecahedron:", hom_count(named_graph("dodecahedron"), k3))

# Independent sets as homomorphisms
target = named_graph("independent_set_target")
print("independent sets of Petersen:", hom_count(named_graph("petersen"), target))

# hom(G, H1 x H2) = hom(G, H1) hom(G, H2) for the tensor product
g = named_graph("cycle", 5)
h = tensor_product(k3, target)
print("multiplicative:", hom_count(g, h) == hom_count(g, k3) * hom_count(g, target))

# A cubic graph beating both K_{3,3} and K_4 for the target H0^216 x K3
necklace = named_graph("k4_minus_necklace")
h0 = named_graph("net_looped_complement")
print("hom(necklace, H0) =", hom_count(necklace, h0))
print("hom(K33, H0) =", hom_count(complete_bipartite(3, 3), h0))
res = galvin_check(necklace, HomTargetSpec(((h0, 216), (k3, 1))), 3)
print("verdict:", res.verdict)
