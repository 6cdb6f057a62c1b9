"""Expected values and occupancy fractions of weighted sets, and exact comparisons.

A :class:`WeightedSet` is a multiplicity vector ``(s_0, ..., s_k)``,
optionally with a vertex count when it comes from a graph.  Its partition
function is ``P(x) = sum s_i x**i`` and its expected value is ``x P'(x) / P(x)``.
Every comparison below is reduced to the sign of one integer polynomial on
``(0, inf)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence

from .exactalg import IntPolynomial, RationalFunction, SignProfile, sign_profile
from .indpoly import MultiplicityVector, enumerate_independent_sets


@dataclass(frozen=True)
class WeightedSet:
    vector: MultiplicityVector
    order: Optional[int] = None
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "vector", MultiplicityVector(self.vector))
        if not self.vector:
            raise ValueError("empty multiplicity vector")
        if self.order is not None and self.order < len(self.vector) - 1:
            raise ValueError("order smaller than the largest element")

    @classmethod
    def from_graph(cls, g, name: str = "") -> "WeightedSet":
        return cls(enumerate_independent_sets(g), g.n, name)

    @property
    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.vector)

    @property
    def top(self) -> int:
        """Largest element, i.e. the independence number for graph-derived sets."""
        return len(self.vector) - 1

    def _require_order(self) -> int:
        if self.order is None:
            raise ValueError(f"weighted set {self.name or list(self.vector)} has no order")
        return self.order


def expected_value(s: WeightedSet) -> RationalFunction:
    p = s.polynomial
    return RationalFunction(p.derivative().x_times(), p)


def occupancy_fraction(s: WeightedSet) -> RationalFunction:
    n = s._require_order()
    return expected_value(s).scale(1, n)


def restrict_at_least(s: WeightedSet, i: int) -> WeightedSet:
    """The sub-multiset of elements ``>= i``."""
    if not 0 <= i <= s.top:
        raise ValueError(f"split index {i} outside [0, {s.top}]")
    v = [0] * i + list(s.vector[i:])
    return WeightedSet(v, s.order, s.name)


def truncate_below(s: WeightedSet, i: int) -> WeightedSet:
    """The sub-multiset of elements ``< i`` (the complement of :func:`restrict_at_least`)."""
    if not 1 <= i <= s.top + 1:
        raise ValueError(f"split index {i} outside [1, {s.top + 1}]")
    return WeightedSet(s.vector[:i], s.order, s.name)


def ratio_dominance(a: WeightedSet, b: WeightedSet) -> bool:
    """Sufficient condition for ``E_a <= E_b`` everywhere on ``[0, inf)``.

    Consecutive ratios of ``a`` must not exceed those of ``b``, checked in
    cross-multiplied form ``a_i b_{i-1} <= b_i a_{i-1}`` for ``1 <= i <= top(a)``,
    and ``a`` may not reach further than ``b``.
    """
    if a.order is not None and b.order is not None and a.order != b.order:
        raise ValueError(f"orders differ: {a.order} vs {b.order}")
    va, vb = a.vector, b.vector
    if len(va) > len(vb):
        return False
    return all(va[i] * vb[i - 1] <= vb[i] * va[i - 1] for i in range(1, len(va)))


def occupancy_difference_polynomial(a: WeightedSet, b: WeightedSet) -> IntPolynomial:
    """Integer polynomial with the sign of ``alpha_a - alpha_b`` on ``(0, inf)``.

    ``alpha_a - alpha_b = x (n_b P_a' P_b - n_a P_b' P_a) / (n_a n_b P_a P_b)``;
    the denominator and the factor ``x`` are positive there.
    """
    na, nb = a._require_order(), b._require_order()
    pa, pb = a.polynomial, b.polynomial
    diff = pa.derivative() * pb * nb - pb.derivative() * pa * na
    return diff.primitive() if not diff.is_zero() else diff


def compare_occupancy(a: WeightedSet, b: WeightedSet) -> SignProfile:
    return sign_profile(occupancy_difference_polynomial(a, b))


def expected_difference_polynomial(a: WeightedSet, b: WeightedSet) -> IntPolynomial:
    """Same as above for unnormalized expected values ``E_a - E_b``."""
    pa, pb = a.polynomial, b.polynomial
    diff = pa.derivative() * pb - pb.derivative() * pa
    return diff.primitive() if not diff.is_zero() else diff


def normalized_partition_polynomial(a: WeightedSet, b: WeightedSet) -> IntPolynomial:
    """``P_a**(n_b/g) - P_b**(n_a/g)`` with ``g = gcd(n_a, n_b)``.

    Both partition functions are positive on ``(0, inf)``, so its sign is
    that of ``P_a**(1/n_a) - P_b**(1/n_b)``.
    """
    na, nb = a._require_order(), b._require_order()
    g = gcd(na, nb)
    diff = a.polynomial ** (nb // g) - b.polynomial ** (na // g)
    return diff.primitive() if not diff.is_zero() else diff


def compare_normalized_partition(a: WeightedSet, b: WeightedSet) -> SignProfile:
    return sign_profile(normalized_partition_polynomial(a, b))


def critical_filter(sets: Sequence[WeightedSet], mode: str = "min") -> list[WeightedSet]:
    """Drop every set that another set dominates from the extremal side.

    In ``min`` mode ``s`` is removed when some ``t`` satisfies
    ``ratio_dominance(t, s)`` but not the converse; in ``max`` mode the
    arguments are swapped.  Of several mutually dominating sets only the
    first is kept.
    """
    if mode not in ("min", "max"):
        raise ValueError("mode must be 'min' or 'max'")
    orders = {s.order for s in sets}
    if len(orders) > 1:
        raise ValueError(f"critical_filter needs a common order, got {sorted(orders, key=str)}")

    def below(t, s):
        return ratio_dominance(t, s) if mode == "min" else ratio_dominance(s, t)

    survivors = []
    for i, s in enumerate(sets):
        removed = False
        for j, t in enumerate(sets):
            if i == j or not below(t, s):
                continue
            if not below(s, t) or j < i:
                removed = True
                break
        if not removed:
            survivors.append(s)
    return survivors


def log_normalized_count_compare(a: WeightedSet, b: WeightedSet) -> int:
    """Sign of ``log|I(a)|/n_a - log|I(b)|/n_b`` in exact integers."""
    na, nb = a._require_order(), b._require_order()
    g = gcd(na, nb)
    lhs = sum(a.vector) ** (nb // g)
    rhs = sum(b.vector) ** (na // g)
    return (lhs > rhs) - (lhs < rhs)


def lower_envelope(sets: Sequence[WeightedSet]) -> list[tuple[Optional[float], list[int]]]:
    """Which sets attain the minimum occupancy on each piece of ``(0, inf)``.

    Pairwise difference profiles are merged: their roots cut ``(0, inf)``
    into pieces, and on each piece the argmin is decided by exact signs at a
    rational sample point.  Returns ``(right_end, argmin_indices)`` per piece,
    ``right_end`` as a float (``None`` for infinity), adjacent equal pieces merged.
    """
    from fractions import Fraction

    cuts: list[Fraction] = []
    profiles = {}
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            prof = compare_occupancy(sets[i], sets[j])
            profiles[i, j] = prof
            if not prof.identically_zero:
                cuts.extend(prof.roots(Fraction(1, 10**9)))
    cuts = sorted(set(cuts))
    ends = [Fraction(0)] + cuts
    samples = [(ends[k] + ends[k + 1]) / 2 for k in range(len(cuts))] + [ends[-1] + 1]
    pieces: list[tuple[Optional[float], list[int]]] = []
    for k, x in enumerate(samples):
        best = [0]
        for i in range(1, len(sets)):
            s = _sign_pair(profiles, best[0], i, x)
            if s > 0:
                best = [i]
            elif s == 0:
                best.append(i)
        right = float(cuts[k]) if k < len(cuts) else None
        if pieces and pieces[-1][1] == best:
            pieces[-1] = (right, best)
        else:
            pieces.append((right, best))
    return pieces


def _sign_pair(profiles, i, j, x) -> int:
    if i < j:
        return profiles[i, j].sign_at(x)
    return -profiles[j, i].sign_at(x)
