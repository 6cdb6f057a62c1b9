"""Exact independence polynomials, occupancy fractions and homomorphism counts."""

from .exactalg import IntPolynomial, RationalFunction, SignProfile, sign_profile
from .graph_core import Graph, named_graph, parse_graph6, write_graph6
from .homcount import HomTargetSpec, galvin_check, hom_count, tensor_product
from .indpoly import MultiplicityVector, enumerate_independent_sets
from .occupancy import (
    WeightedSet,
    compare_normalized_partition,
    compare_occupancy,
    critical_filter,
    expected_value,
    occupancy_fraction,
    ratio_dominance,
)

__version__ = "0.1.0"
