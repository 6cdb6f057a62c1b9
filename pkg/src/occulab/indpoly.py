"""Independent-set counting by include/exclude backtracking."""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .exactalg import IntPolynomial
from .graph_core import Graph


class MultiplicityVector(tuple):
    """Counts ``(s_0, ..., s_k)``; index ``i`` is an element value / set size."""

    def __new__(cls, counts: Iterable[int]):
        counts = tuple(int(c) for c in counts)
        if any(c < 0 for c in counts):
            raise ValueError("multiplicities must be non-negative")
        return super().__new__(cls, counts)

    def __repr__(self) -> str:
        return f"MultiplicityVector({list(self)})"

    def to_text(self) -> str:
        return ",".join(str(c) for c in self)

    @classmethod
    def from_text(cls, line: str) -> "MultiplicityVector":
        return cls(int(tok) for tok in line.replace(" ", "").split(",") if tok)


def _add_shifted(a: list[int], b: list[int]) -> list[int]:
    """``a + x*b`` on coefficient lists."""
    out = list(a) + [0] * max(0, len(b) + 1 - len(a))
    for i, c in enumerate(b):
        out[i + 1] += c
    return out


def enumerate_independent_sets(g: Graph) -> MultiplicityVector:
    """Count independent sets of every size.

    Vertices are branched on in descending-degree order: a vertex is either
    excluded, or included and its closed neighborhood removed from the
    candidate mask.  Counts for a candidate mask are memoized, and a mask
    spanning no edges is finished off with binomials.
    """
    if g.has_loops():
        raise ValueError("independent sets are defined for loop-free graphs")
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    adj = g.adj

    @lru_cache(maxsize=None)
    def count(mask: int) -> tuple[int, ...]:
        # edgeless remainder: every subset is independent
        if not any(adj[v] & mask for v in order if mask >> v & 1):
            k = bin(mask).count("1")
            return tuple(comb(k, i) for i in range(k + 1))
        v = next(u for u in order if mask >> u & 1)
        without = count(mask & ~(1 << v))
        with_v = count(mask & ~(1 << v) & ~adj[v])
        return tuple(_add_shifted(list(without), list(with_v)))

    result = count((1 << n) - 1)
    count.cache_clear()
    return MultiplicityVector(result)


def total_count(v: Sequence[int]) -> int:
    return sum(v)


def independence_number(v: Sequence[int]) -> int:
    return len(v) - 1


def partition_polynomial(v: Sequence[int]) -> IntPolynomial:
    return IntPolynomial(v)


def convolve(a: Sequence[int], b: Sequence[int]) -> MultiplicityVector:
    """Vector of a disjoint union."""
    return MultiplicityVector((IntPolynomial(a) * IntPolynomial(b)).coeffs)
