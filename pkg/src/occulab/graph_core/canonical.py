"""Canonical forms by partition refinement and individualization.

The search tree is the usual one: refine an ordered partition to an
equitable one, then individualize each vertex of the first smallest
non-singleton cell in turn.  Every leaf is a discrete partition, i.e. a
relabeling, and the canonical form is the least graph6 string over leaves.

Two leaves with the same string give an automorphism.  Such an
automorphism maps the subtree it was found in onto an already explored one,
so the search backs up to the level where the two paths diverge.  Found
automorphisms also prune siblings lying in one orbit of the pointwise
stabilizer of the current path.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graph import Graph
from .graph6 import write_graph6


def _popcount(x: int) -> int:
    return bin(x).count("1")


def refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition until every cell is equitable.

    Cells are split by each vertex's neighbor counts into the cells of the
    current partition; sub-cells are ordered by that signature, so the result
    depends only on the isomorphism type of (graph, ordered partition).
    """
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                a = adj[v]
                sig = tuple(_popcount(a & m) for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                changed = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        cells = out
    return cells


def _orbits_of(generators: list[list[int]], fixed: Sequence[int], n: int) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in generators:
        if any(gamma[p] != p for p in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(gamma[v])
            if a != b:
                parent[a] = b
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, g: Graph, cells: list[list[int]]):
        self.g = g
        self.n = g.n
        self.best: Optional[str] = None
        self.best_perm: Optional[list[int]] = None
        self.seen: dict[str, tuple[list[int], tuple[int, ...]]] = {}
        self.generators: list[list[int]] = []
        self.root = cells

    def leaf(self, cells, path) -> Optional[int]:
        perm = [0] * self.n
        for pos, c in enumerate(cells):
            perm[c[0]] = pos
        cert = write_graph6(self.g.relabel(perm))
        if cert in self.seen:
            other_perm, other_path = self.seen[cert]
            inv = [0] * self.n
            for v, p in enumerate(other_perm):
                inv[p] = v
            self.generators.append([inv[perm[v]] for v in range(self.n)])
            k = 0
            while k < len(path) and k < len(other_path) and path[k] == other_path[k]:
                k += 1
            return k
        self.seen[cert] = (perm, tuple(path))
        if self.best is None or cert < self.best:
            self.best, self.best_perm = cert, perm
        return None

    def run(self, cells, path) -> Optional[int]:
        cells = refine(self.g.adj, cells)
        if len(cells) == self.n:
            return self.leaf(cells, path)
        size = min(len(c) for c in cells if len(c) > 1)
        idx = next(i for i, c in enumerate(cells) if len(c) == size)
        target = cells[idx]
        depth = len(path)
        explored: list[int] = []
        for v in target:
            if explored:
                orbit = _orbits_of(self.generators, path, self.n)
                if any(orbit[u] == orbit[v] for u in explored):
                    continue
            explored.append(v)
            rest = [u for u in target if u != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1:]
            back = self.run(child, path + [v])
            if back is not None and back < depth:
                return back
        return None


def canonical_labeling(g: Graph, colors: Optional[Sequence[int]] = None) -> list[int]:
    """Return ``perm`` with ``g.relabel(perm)`` canonical.

    ``colors`` optionally fixes an initial vertex coloring that relabelings
    must respect (colour values are ordered, so the coloring is part of the
    isomorphism type).
    """
    if g.has_loops():
        raise ValueError("canonical form is defined for loop-free graphs")
    if g.n == 0:
        return []
    if colors is None:
        cells = [list(range(g.n))]
    else:
        by_color: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            by_color.setdefault(c, []).append(v)
        cells = [by_color[c] for c in sorted(by_color)]
    search = _Search(g, cells)
    search.run(cells, [])
    return search.best_perm


def canonical_form(g: Graph) -> bytes:
    """Relabeling-invariant bytes: equal exactly for isomorphic graphs."""
    perm = canonical_labeling(g)
    return write_graph6(g.relabel(perm)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
