"""Homomorphism counts, tensor products and the Galvin inequality."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import prod
from typing import Sequence

from .graph_core import Graph, regular_degree
from .graph_core.named import complete, complete_bipartite


def _bfs_order(g: Graph) -> list[int]:
    order: list[int] = []
    seen = [False] * g.n
    roots = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for r in roots:
        if seen[r]:
            continue
        seen[r] = True
        queue = deque([r])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def hom_count(g: Graph, h: Graph) -> int:
    """Number of maps ``V(g) -> V(h)`` taking edges to edges (loops of ``h`` count as edges).

    Source vertices are placed in BFS order; a vertex's admissible images are
    the intersection of the neighborhoods of its already placed neighbors.
    Once only vertices without placed neighbors remain in a component, the
    count factorizes, so components are counted separately and multiplied.
    """
    if g.has_loops():
        raise ValueError("source graph must be loop-free")
    if g.n == 0:
        return 1
    comps = _components(g)
    return prod(_count_component(g, comp, h) for comp in comps)


def _components(g: Graph) -> list[list[int]]:
    order = _bfs_order(g)
    comps: list[list[int]] = []
    seen = 0
    for v in order:
        if not seen >> v & 1:
            comp = []
            stack = [v]
            seen |= 1 << v
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in g.neighbors(u):
                    if not seen >> w & 1:
                        seen |= 1 << w
                        stack.append(w)
            comps.append([u for u in order if u in set(comp)])
    return comps


def _count_component(g: Graph, order: list[int], h: Graph) -> int:
    k = len(order)
    pos = {v: i for i, v in enumerate(order)}
    back = [[pos[w] for w in g.neighbors(v) if pos[w] < pos[v]] for v in order]
    hadj = h.adj
    all_h = (1 << h.n) - 1
    image = [0] * k

    def rec(i: int) -> int:
        if i == k:
            return 1
        cand = all_h
        for j in back[i]:
            cand &= hadj[image[j]]
            if not cand:
                return 0
        if i == k - 1:
            return bin(cand).count("1")
        total = 0
        while cand:
            low = cand & -cand
            image[i] = low.bit_length() - 1
            total += rec(i + 1)
            cand ^= low
        return total

    return rec(0)


def tensor_product(g: Graph, h: Graph) -> Graph:
    """Categorical product on pairs ``(u, v)`` numbered ``u * h.n + v``."""
    m = h.n
    edges = []
    for u1 in range(g.n):
        for u2 in g.neighbors(u1):
            for v1 in range(m):
                for v2 in h.neighbors(v1):
                    a, b = u1 * m + v1, u2 * m + v2
                    if a <= b:
                        edges.append((a, b))
    return Graph(g.n * m, edges, allows_loops=g.allows_loops or h.allows_loops)


@dataclass(frozen=True)
class HomTargetSpec:
    """Tensor product ``F_1^{e_1} x ... x F_r^{e_r}``, kept factored."""

    factors: tuple[tuple[Graph, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((f, int(e)) for f, e in self.factors))
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be >= 1")


def hom_count_factored(g: Graph, spec: HomTargetSpec) -> int:
    return prod(hom_count(g, f) ** e for f, e in spec.factors)


@dataclass(frozen=True)
class GalvinResult:
    """Exact sides of ``hom(G,H) <= max(hom(K_dd,H)^(n/2d), hom(K_d+1,H)^(n/(d+1)))``.

    All three quantities are raised to the integer power ``2d(d+1)``.
    """

    verdict: str
    hom_g: int
    hom_kdd: int
    hom_kd1: int
    lhs: int
    rhs_bipartite: int
    rhs_clique: int
    exponent: int


def galvin_check(g: Graph, spec: HomTargetSpec, d: int) -> GalvinResult:
    if regular_degree(g) != d:
        raise ValueError(f"source graph is not {d}-regular")
    n = g.n
    hg = hom_count_factored(g, spec)
    hb = hom_count_factored(complete_bipartite(d, d), spec)
    hc = hom_count_factored(complete(d + 1), spec)
    e = 2 * d * (d + 1)
    lhs = hg ** e
    rb = hb ** (n * (d + 1))
    rc = hc ** (2 * d * n)
    verdict = "violated" if lhs > rb and lhs > rc else "holds"
    return GalvinResult(verdict, hg, hb, hc, lhs, rb, rc, e)


def coloring_count(g: Graph, q: int) -> int:
    if q < 0:
        raise ValueError("q must be non-negative")
    return hom_count(g, complete(q))


def chromatic_polynomial_value(g: Graph, q: int) -> int:
    """Deletion-contraction; exponential, meant as a cross-check on small graphs."""
    edges = sorted(g.edges)
    return _dc(g.n, frozenset(edges), q)


def _dc(n: int, edges: frozenset, q: int) -> int:
    if not edges:
        return q ** n
    u, v = min(edges)
    deleted = edges - {(u, v)}
    merged = set()
    for a, b in deleted:
        a = u if a == v else a
        b = u if b == v else b
        if a != b:
            merged.add((min(a, b), max(a, b)))
    # relabel to close the gap left by v
    def shift(x):
        return x - 1 if x > v else x
    contracted = frozenset((shift(a), shift(b)) for a, b in merged)
    return _dc(n, deleted, q) - _dc(n - 1, contracted, q)


def parse_target_spec(text: str, resolve) -> HomTargetSpec:
    """``"h0:216,k3:1"`` style lists; ``resolve`` maps a name to a Graph."""
    factors = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        name, _, exp = part.rpartition(":")
        if not name:
            name, exp = exp, "1"
        factors.append((resolve(name), int(exp)))
    return HomTargetSpec(tuple(factors))
