"""Sturm-certified isolation of positive real roots and sign profiles."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .polynomial import IntPolynomial, Number, descartes_sign_changes, squarefree_part

Interval = tuple[Fraction, Fraction]

DEFAULT_TOL = Fraction(1, 10**6)


def sturm_sequence(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain of ``p`` (assumed squarefree), kept primitive at every step."""
    if p.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial")
    chain = [p, p.derivative()]
    if chain[-1].is_zero():
        return chain[:1]
    while chain[-1].degree > 0:
        r = chain[-2].pseudo_rem(chain[-1])
        if r.is_zero():
            break
        r = -r
        g = r.content()
        chain.append(r.exact_div(g))
    return chain


def _variations(signs) -> int:
    nz = [s for s in signs if s]
    return sum(1 for s, t in zip(nz, nz[1:]) if s != t)


def _signs_at(chain: list[IntPolynomial], x: Fraction, side: int) -> list[int]:
    signs = [q.sign_at(x) for q in chain]
    if signs[0] == 0 and len(chain) > 1:
        # just right of a simple root p and p' agree; just left they disagree
        signs[0] = signs[1] * side
    return signs


def sturm_count(p: IntPolynomial, a: Number, b: Number, chain: Optional[list[IntPolynomial]] = None) -> int:
    """Number of distinct real roots of ``p`` in the open interval ``(a, b)``."""
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise ValueError("need a < b")
    if chain is None:
        chain = sturm_sequence(squarefree_part(p))
    if chain[0].degree <= 0:
        return 0
    return _variations(_signs_at(chain, a, +1)) - _variations(_signs_at(chain, b, -1))


def cauchy_bound(p: IntPolynomial) -> int:
    """Integer strictly above the modulus of every root."""
    lead = abs(p.leading)
    m = max(abs(c) for c in p.coeffs[:-1]) if p.degree > 0 else 0
    return 1 + -(-m // lead) + 1


def _core(p: IntPolynomial) -> IntPolynomial:
    q = squarefree_part(p)
    return q.shift_down(q.low_order())


def _split_point(q: IntPolynomial, lo: Fraction, hi: Fraction) -> Fraction:
    for num, den in ((1, 2), (1, 3), (2, 3), (1, 5), (4, 5), (2, 5), (3, 5)):
        m = lo + (hi - lo) * num / den
        if q.sign_at(m):
            return m
    k = 7
    while True:
        m = lo + (hi - lo) / k
        if q.sign_at(m):
            return m
        k += 1


def isolate_positive_roots(p: IntPolynomial) -> list[Interval]:
    """Disjoint open intervals in ``(0, inf)``, one per distinct positive root, ascending.

    Endpoints are never roots.  The first bracket comes from a Cauchy bound
    and is bisected until every piece holds at most one root.
    """
    if p.is_zero():
        return []
    q = _core(p)
    if q.degree <= 0:
        return []
    chain = sturm_sequence(q)
    hi = Fraction(cauchy_bound(q))
    out: list[Interval] = []
    stack = [(Fraction(0), hi, sturm_count(q, 0, hi, chain))]
    while stack:
        lo, hi, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append((lo, hi))
            continue
        mid = _split_point(q, lo, hi)
        left = sturm_count(q, lo, mid, chain)
        stack.append((mid, hi, k - left))
        stack.append((lo, mid, left))
    out.sort()
    return out


def refine_root(p: IntPolynomial, interval: Interval, tol: Number = DEFAULT_TOL) -> Fraction:
    """Bisect an isolating interval down to width ``tol``; exact if a rational root is hit."""
    q = _core(p)
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    tol = Fraction(tol)
    slo, shi = q.sign_at(lo), q.sign_at(hi)
    if slo == 0:
        return lo
    if shi == 0:
        return hi
    if slo == shi:
        raise ValueError("interval endpoints do not bracket a sign change")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s = q.sign_at(mid)
        if s == 0:
            return mid
        if s == slo:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def _fmt(x: Optional[Fraction]) -> str:
    if x is None:
        return "inf"
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


_SIGN = {1: "+", -1: "-", 0: "0"}


@dataclass(frozen=True)
class SignProfile:
    """Sign of a polynomial on the pieces of ``(0, inf)`` cut out by its positive roots."""

    polynomial: IntPolynomial
    breakpoints: list[Interval]
    signs: list[int]
    _roots: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        assert len(self.signs) == len(self.breakpoints) + 1

    @property
    def identically_zero(self) -> bool:
        return self.polynomial.is_zero()

    def roots(self, tol: Number = DEFAULT_TOL) -> list[Fraction]:
        tol = Fraction(tol)
        if tol not in self._roots:
            self._roots[tol] = [refine_root(self.polynomial, iv, tol) for iv in self.breakpoints]
        return self._roots[tol]

    def sign_at(self, x: Number) -> int:
        return self.polynomial.sign_at(Fraction(x))

    def negate(self) -> "SignProfile":
        return SignProfile(-self.polynomial, list(self.breakpoints), [-s for s in self.signs])

    def intervals_with_sign(self, sign: int, tol: Number = DEFAULT_TOL) -> list[tuple[Fraction, Optional[Fraction]]]:
        """Approximate ``(left, right)`` ends of the pieces with the given sign; ``None`` is infinity."""
        ends = [Fraction(0)] + self.roots(tol) + [None]
        return [(ends[i], ends[i + 1]) for i, s in enumerate(self.signs) if s == sign]

    def to_json_obj(self, tol: Number = DEFAULT_TOL) -> list[dict]:
        items = []
        left: Optional[Fraction] = Fraction(0)
        for (lo, hi), s in zip(self.breakpoints, self.signs):
            items.append({"interval": [_fmt(left), _fmt(lo)], "sign": _SIGN[s]})
            items.append({"interval": [_fmt(lo), _fmt(hi)], "sign": "0"})
            left = hi
        items.append({"interval": [_fmt(left), "inf"], "sign": _SIGN[self.signs[-1]]})
        return items

    def to_json(self, tol: Number = DEFAULT_TOL) -> str:
        return json.dumps(self.to_json_obj(tol))


def tighten(p: IntPolynomial, interval: Interval, width: Number = DEFAULT_TOL) -> Interval:
    """Shrink an isolating interval by bisection until narrower than ``width``.

    Endpoints stay non-roots; an exactly hit rational root ``r`` is returned
    as a tiny interval around it that still isolates it.
    """
    q = _core(p)
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    width = Fraction(width)
    chain = sturm_sequence(q)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if q.sign_at(mid) == 0:
            step = (hi - lo) / 4
            while step > width / 2 or sturm_count(q, mid - step, mid + step, chain) != 1:
                step /= 2
            return mid - step, mid + step
        if sturm_count(q, lo, mid, chain):
            hi = mid
        else:
            lo = mid
    return lo, hi


def sign_profile(p: IntPolynomial, width: Number = DEFAULT_TOL) -> SignProfile:
    """Signs of ``p`` between its positive roots, with root brackets narrower than ``width``."""
    if p.is_zero():
        return SignProfile(p, [], [0])
    intervals = [tighten(p, iv, width) for iv in isolate_positive_roots(p)]
    signs = []
    # just right of 0: sign of the lowest non-zero coefficient
    signs.append(1 if p.coeffs[p.low_order()] > 0 else -1)
    for _, hi in intervals[:-1]:
        signs.append(p.sign_at(hi))
    if intervals:
        signs.append(1 if p.leading > 0 else -1)
    return SignProfile(p, intervals, signs)


__all__ = [
    "DEFAULT_TOL", "SignProfile", "cauchy_bound", "descartes_sign_changes",
    "isolate_positive_roots", "refine_root", "sign_profile", "tighten", "sturm_count", "sturm_sequence",
]
