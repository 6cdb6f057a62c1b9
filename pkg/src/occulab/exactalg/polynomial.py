"""Integer polynomials and rational functions in one variable."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


class IntPolynomial:
    """Polynomial with integer coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_text(cls, text: str) -> "IntPolynomial":
        return cls(int(tok) for tok in text.split())

    def to_text(self) -> str:
        return " ".join(str(c) for c in self.coeffs)

    # -- structure -----------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPolynomial":
        """Divide by the (positive) content; signs are preserved."""
        if not self.coeffs:
            return self
        g = self.content()
        return IntPolynomial(c // g for c in self.coeffs)

    def low_order(self) -> int:
        """Multiplicity of 0 as a root."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def shift_down(self, k: int) -> "IntPolynomial":
        """Divide by ``x**k`` (the low coefficients must vanish)."""
        if any(self.coeffs[:k]):
            raise ValueError("not divisible by x^k")
        return IntPolynomial(self.coeffs[k:])

    # -- ring operations -----------------------------------------------

    def __add__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "IntPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "IntPolynomial":
        return _coerce(other) - self

    def __mul__(self, other) -> "IntPolynomial":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def x_times(self) -> "IntPolynomial":
        return IntPolynomial((0,) + self.coeffs) if self.coeffs else self

    def exact_div(self, k: int) -> "IntPolynomial":
        return IntPolynomial(c // k for c in self.coeffs)

    # -- evaluation ----------------------------------------------------

    def __call__(self, x: Number) -> Fraction:
        return self.evaluate(x)

    def evaluate(self, x: Number) -> Fraction:
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        return Fraction(self._homogeneous(p, q), q ** max(self.degree, 0))

    def _homogeneous(self, p: int, q: int) -> int:
        # q**deg * f(p/q), evaluated by Horner in integers
        acc = 0
        qpow = 1
        for c in reversed(self.coeffs):
            acc = acc * p + c * qpow
            qpow *= q
        return acc

    def sign_at(self, x: Number) -> int:
        x = Fraction(x)
        v = self._homogeneous(x.numerator, x.denominator)
        return (v > 0) - (v < 0)

    def evaluate_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- division ------------------------------------------------------

    def pseudo_rem(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Remainder of ``|lc(divisor)|**(deg f - deg g + 1) * f`` by ``divisor``.

        The multiplier is positive, so the remainder has the sign behavior
        of the true remainder, which is what Sturm chains need.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dg = divisor.degree
        lc = divisor.leading
        alc = abs(lc)
        sgn = 1 if lc > 0 else -1
        steps = len(r) - 1 - dg + 1
        if steps <= 0:
            return IntPolynomial(r)
        d = divisor.coeffs
        for _ in range(steps):
            top = r[-1]
            shift = len(r) - 1 - dg
            r = [c * alc for c in r]
            coef = top * sgn
            for i, c in enumerate(d):
                r[shift + i] -= coef * c
            r.pop()
        return IntPolynomial(r)

    def divmod_exact(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Quotient when ``divisor`` divides ``self`` exactly over the integers."""
        r = list(self.coeffs)
        d = divisor.coeffs
        dg = divisor.degree
        q = [0] * max(len(r) - dg, 0)
        for shift in range(len(r) - 1 - dg, -1, -1):
            top = r[shift + dg]
            if top % d[-1]:
                raise ValueError("inexact polynomial division")
            c = top // d[-1]
            q[shift] = c
            if c:
                for i, dc in enumerate(d):
                    r[shift + i] -= c * dc
        if any(r):
            raise ValueError("inexact polynomial division")
        return IntPolynomial(q)

    # -- dunder --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "IntPolynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*x" if i == 1 else f"{c}*x^{i}")
        return "IntPolynomial(" + " + ".join(terms) + ")"


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    raise TypeError(f"cannot combine IntPolynomial with {type(x).__name__}")


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over the integers (primitive remainder sequence)."""
    a, b = a.primitive(), b.primitive()
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.pseudo_rem(b).primitive()
        a, b = b, r
    return a.primitive()


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    if p.degree <= 0:
        return p.primitive()
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    return p.primitive().divmod_exact(g).primitive()


def descartes_sign_changes(p: IntPolynomial) -> int:
    if p.is_zero():
        raise ValueError("sign changes of the zero polynomial are undefined")
    signs = [c > 0 for c in p.coeffs if c]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


class RationalFunction:
    """``num / den`` with the pair's integer content and common power of x removed."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntPolynomial, den: IntPolynomial):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = num, IntPolynomial([1])
            return
        k = min(num.low_order(), den.low_order())
        num, den = num.shift_down(k), den.shift_down(k)
        g = gcd(num.content(), den.content())
        if den.leading < 0:
            g = -g
        self.num, self.den = num.exact_div(g), den.exact_div(g)

    def __call__(self, x: Number) -> Fraction:
        return self.evaluate(x)

    def evaluate(self, x: Number) -> Fraction:
        return self.num.evaluate(x) / self.den.evaluate(x)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.den - other.num * self.den, self.den * other.den)

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def scale(self, num: int, den: int = 1) -> "RationalFunction":
        return RationalFunction(self.num * num, self.den * den)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r} / {self.den!r})"
