"""Exact univariate algebra: integer polynomials, rational functions, root isolation."""

from fractions import Fraction as Rational

from .polynomial import (
    IntPolynomial,
    RationalFunction,
    descartes_sign_changes,
    poly_gcd,
    squarefree_part,
)
from .roots import (
    DEFAULT_TOL,
    SignProfile,
    cauchy_bound,
    isolate_positive_roots,
    refine_root,
    sign_profile,
    sturm_count,
    sturm_sequence,
)

__all__ = [
    "Rational", "IntPolynomial", "RationalFunction", "descartes_sign_changes",
    "poly_gcd", "squarefree_part", "DEFAULT_TOL", "SignProfile", "cauchy_bound",
    "isolate_positive_roots", "refine_root", "sign_profile", "sturm_count", "sturm_sequence",
]
