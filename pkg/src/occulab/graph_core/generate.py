"""Small-order generation of connected regular graphs with a girth bound.

The search grows one component.  A state is a partial graph; each step
takes an unsaturated vertex of largest current degree and gives it all of
its missing neighbors at once.  Every completion of a state has to add
exactly such a neighbor set at that vertex, so trying all admissible sets is
exhaustive.  States are kept up to isomorphism (canonical form of the
non-isolated part), and isolated vertices are interchangeable, so only the
lowest-numbered ones are ever chosen as new neighbors.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .canonical import canonical_labeling
from .graph import Graph, distance_at_most


def _canonical_state(adj: list[int], n: int) -> tuple[bytes, tuple[int, ...]]:
    active = [v for v in range(n) if adj[v]]
    index = {v: i for i, v in enumerate(active)}
    edges = []
    for v in active:
        m = adj[v]
        for w in active:
            if w > v and m >> w & 1:
                edges.append((index[v], index[w]))
    sub = Graph(len(active), edges)
    perm = canonical_labeling(sub)
    relabeled = sub.relabel(perm)
    new_adj = list(relabeled.adj) + [0] * (n - len(active))
    key = (len(active), tuple(sorted(relabeled.edges)))
    return repr(key).encode(), tuple(new_adj)


def _extensions(adj: tuple[int, ...], n: int, d: int, girth_min: int):
    degree = [bin(a).count("1") for a in adj]
    touched = [v for v in range(n) if degree[v] > 0]
    if not touched:
        v = 0
    else:
        open_touched = [v for v in touched if degree[v] < d]
        if not open_touched:
            return  # a closed component that is not the whole graph
        v = max(open_touched, key=lambda u: (degree[u], -u))
    need = d - degree[v]
    isolated = [w for w in range(n) if degree[w] == 0 and w != v]
    partners = [w for w in touched if w != v and degree[w] < d and not adj[v] >> w & 1]
    for j in range(min(need, len(isolated)) + 1):
        fresh = isolated[:j]
        for chosen in combinations(partners, need - j):
            work = list(adj)
            ok = True
            for w in chosen + tuple(fresh):
                if girth_min > 3 and distance_at_most(_View(work), v, w, girth_min - 2):
                    ok = False
                    break
                work[v] |= 1 << w
                work[w] |= 1 << v
            if ok:
                yield work


class _View:
    """Minimal adjacency holder accepted by ``distance_at_most``."""

    __slots__ = ("adj",)

    def __init__(self, adj):
        self.adj = adj


def generate_regular(n: int, d: int, girth_min: int = 3) -> Iterator[Graph]:
    """Every connected ``d``-regular graph on ``n`` vertices with girth >= ``girth_min``, once each up to isomorphism."""
    if n <= 0 or d < 0 or d >= n and not (n == 1 and d == 0) or (n * d) % 2:
        return
    if d == 0:
        yield Graph(1)
        return
    girth_min = max(girth_min, 3)
    if d == 2:
        if n >= girth_min:
            yield Graph(n, [(i, (i + 1) % n) for i in range(n)])
        return
    full = (1 << n) - 1
    states = {b"": tuple([0] * n)}
    done: dict[bytes, tuple[int, ...]] = {}
    while states:
        nxt: dict[bytes, tuple[int, ...]] = {}
        for adj in states.values():
            for work in _extensions(adj, n, d, girth_min):
                key, canon = _canonical_state(work, n)
                if all(bin(a).count("1") == d for a in canon):
                    done.setdefault(key, canon)
                else:
                    nxt.setdefault(key, canon)
        states = nxt
    for canon in done.values():
        g = Graph(n, [(u, w) for u in range(n) for w in range(u + 1, n) if canon[u] >> w & 1])
        if g.is_connected():
            yield g
