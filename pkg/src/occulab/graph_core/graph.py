"""Finite simple graphs (optionally looped) on vertices 0..n-1."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional


class Graph:
    """Immutable graph on ``range(n)``.

    Edges are stored as sorted pairs ``(u, v)`` with ``u <= v``; a pair
    ``(v, v)`` is a loop and is only accepted when ``allows_loops`` is set.
    Adjacency is also kept as one integer bitmask per vertex, which is what
    the counting routines consume.
    """

    __slots__ = ("n", "edges", "allows_loops", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), allows_loops: bool = False):
        if n < 0:
            raise ValueError("order must be non-negative")
        normalized = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v and not allows_loops:
                raise ValueError(f"loop at {u} but allows_loops is False")
            normalized.add((u, v) if u <= v else (v, u))
        adj = [0] * n
        for u, v in normalized:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges = frozenset(normalized)
        self.allows_loops = allows_loops
        self.adj = tuple(adj)
        self._hash = None

    # -- basic queries -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        mask = self.adj[v]
        return [w for w in range(self.n) if mask >> w & 1]

    def degree(self, v: int) -> int:
        # a loop contributes one neighbor (itself), which is what hom targets need
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges), self.allows_loops)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            m = frontier
            while m:
                low = m & -m
                reach |= self.adj[low.bit_length() - 1]
                m ^= low
            frontier = reach & ~seen
            seen |= reach
        return seen == (1 << self.n) - 1

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        edges = list(self.edges) + [(u + shift, v + shift) for u, v in other.edges]
        return Graph(self.n + other.n, edges, self.allows_loops or other.allows_loops)

    def complement(self, loops: bool = False) -> "Graph":
        """Complement on the same vertex set; with ``loops`` every vertex gets a loop."""
        edges = [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.has_edge(u, v)]
        if loops:
            edges += [(v, v) for v in range(self.n)]
        return Graph(self.n, edges, allows_loops=loops)

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.edges, self.allows_loops) == (other.n, other.edges, other.allows_loops)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.edges, self.allows_loops))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)}{', loops' if self.allows_loops else ''})"


INFINITE = float("inf")


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``INFINITE`` for a forest.

    Runs a BFS from every vertex; a non-tree edge met at depths ``d1``,
    ``d2`` closes a closed walk of length ``d1 + d2 + 1`` which bounds the
    girth, and the minimum over all roots is exact.  Loops count as cycles
    of length 1.
    """
    if any(u == v for u, v in g.edges):
        return 1
    best = INFINITE
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors(u):
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def regular_degree(g: Graph) -> Optional[int]:
    degs = set(g.degrees())
    if len(degs) == 1:
        return degs.pop()
    if g.n == 0:
        return 0
    return None


def distance_at_most(g: Graph, u: int, v: int, limit: int) -> bool:
    """True when ``v`` is reachable from ``u`` in at most ``limit`` steps."""
    if u == v:
        return True
    seen = 1 << u
    frontier = seen
    target = 1 << v
    for _ in range(limit):
        reach = 0
        m = frontier
        while m:
            low = m & -m
            reach |= g.adj[low.bit_length() - 1]
            m ^= low
        if reach & target:
            return True
        frontier = reach & ~seen
        if not frontier:
            return False
        seen |= reach
    return False
