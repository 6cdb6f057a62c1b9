"""Constructors for the graphs used throughout the package."""

from __future__ import annotations

import re
from itertools import product

from .graph import Graph
from .graph6 import Graph6Error, parse_graph6

G20_GRAPH6 = "S@?IC?g@S_P?@aOWOS@ACSD@GGPCg?gB?"
G22_GRAPH6 = "UIAC@OOA_H@@?Qo?c_?cH@O?OQD?GIC?OG_`?KQ?"


def complete(q: int) -> Graph:
    return Graph(q, [(u, v) for u in range(q) for v in range(u + 1, q)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def circulant(n: int, distances) -> Graph:
    """Vertex ``i`` adjacent to ``i +- s (mod n)`` for each ``s`` in ``distances``."""
    distances = sorted(set(distances))
    for s in distances:
        if not 1 <= s <= n // 2:
            raise ValueError(f"circulant distance {s} must lie in [1, {n // 2}]")
    return Graph(n, [(i, (i + s) % n) for i in range(n) for s in distances])


def generalized_petersen(n: int, k: int) -> Graph:
    """Outer cycle ``0..n-1``, spokes ``i -- n+i``, inner star polygon ``n+i -- n+(i+k)``."""
    if n < 3 or not 1 <= k < n / 2:
        raise ValueError("generalized Petersen graph needs n >= 3 and 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph(2 * n, edges)


def lcf(n: int, shifts, repeats: int) -> Graph:
    """Cubic Hamiltonian graph from LCF notation ``[shifts]^repeats``."""
    jumps = list(shifts) * repeats
    if len(jumps) != n:
        raise ValueError("LCF pattern length must equal the order")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, (i + jumps[i]) % n) for i in range(n)]
    return Graph(n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def dodecahedron() -> Graph:
    return generalized_petersen(10, 2)


def g14() -> Graph:
    # 14-cycle plus seven chords, read off the circular drawing
    chords = [(0, 5), (13, 3), (1, 7), (12, 8), (10, 4), (2, 9), (11, 6)]
    return Graph(14, [(i, (i + 1) % 14) for i in range(14)] + chords)


def heawood() -> Graph:
    return lcf(14, [5, -5], 7)


def tutte_coxeter() -> Graph:
    return lcf(30, [-13, -9, 7, -7, 9, 13], 5)


def pg23_incidence() -> Graph:
    """Point/line incidence graph of the projective plane over GF(3)."""
    reps = []
    for vec in product(range(3), repeat=3):
        if any(vec):
            # normalize so the first non-zero coordinate is 1
            lead = next(x for x in vec if x)
            inv = 1 if lead == 1 else 2
            norm = tuple(x * inv % 3 for x in vec)
            if norm not in reps:
                reps.append(norm)
    m = len(reps)
    edges = []
    for i, p in enumerate(reps):
        for j, l in enumerate(reps):
            if sum(a * b for a, b in zip(p, l)) % 3 == 0:
                edges.append((i, m + j))
    return Graph(2 * m, edges)


def robertson() -> Graph:
    """The (4,5)-cage: Hamiltonian 19-cycle plus 19 chords."""
    n = 19
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(x % n, (x + 4) % n) for x in (-8, -4, 0, 4, 8, 2, 17)]
    edges += [(x, x + 5) for x in (6, 12)]
    for pentagon in ((18, 10, 3, 14, 7), (1, 9, 16, 5, 13)):
        edges += [(pentagon[i], pentagon[(i + 1) % 5]) for i in range(5)]
    return Graph(n, edges)


def g20() -> Graph:
    return parse_graph6(G20_GRAPH6)


def g22() -> Graph:
    return parse_graph6(G22_GRAPH6)


def net() -> Graph:
    """Triangle 0,1,2 with pendant vertices 3,4,5."""
    return Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def net_looped_complement() -> Graph:
    return net().complement(loops=True)


def k4_minus_necklace() -> Graph:
    """Two copies of K4 minus an edge, joined into a cubic ring.

    Blocks ``{0,1,4,5}`` and ``{2,3,6,7}`` each miss one edge (1-5, 2-6);
    the links 1-2 and 5-6 make every degree 3.
    """
    edges = [
        (0, 1), (0, 4), (0, 5), (1, 4), (4, 5),
        (2, 3), (3, 6), (3, 7), (2, 7), (6, 7),
        (1, 2), (5, 6),
    ]
    return Graph(8, edges)


def independent_set_target() -> Graph:
    """A looped vertex 0 joined to an unlooped vertex 1; ``hom(G, .)`` counts independent sets."""
    return Graph(2, [(0, 0), (0, 1)], allows_loops=True)


def looped_vertex() -> Graph:
    return Graph(1, [(0, 0)], allows_loops=True)


_CONSTRUCTORS = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "generalized_petersen": (generalized_petersen, 2),
    "dodecahedron": (dodecahedron, 0),
    "petersen": (petersen, 0),
    "g14": (g14, 0),
    "heawood": (heawood, 0),
    "tutte_coxeter": (tutte_coxeter, 0),
    "pg23_incidence": (pg23_incidence, 0),
    "robertson": (robertson, 0),
    "g20": (g20, 0),
    "g22": (g22, 0),
    "net": (net, 0),
    "net_looped_complement": (net_looped_complement, 0),
    "k4_minus_necklace": (k4_minus_necklace, 0),
    "independent_set_target": (independent_set_target, 0),
}

ALIASES = {
    "dod": "dodecahedron",
    "p52": "petersen",
    "h36": "heawood",
    "h38": "tutte_coxeter",
    "h46": "pg23_incidence",
    "rob": "robertson",
    "cyc13": "cyc13",
    "h0": "net_looped_complement",
}

NAMES = sorted(_CONSTRUCTORS) + ["circulant", "cyc13"]


def named_graph(name: str, *params) -> Graph:
    """Build a graph by identifier, e.g. ``named_graph("circulant", 13, [1, 5])``."""
    key = ALIASES.get(name.lower(), name.lower())
    if key == "cyc13":
        return circulant(13, [1, 5])
    if key == "circulant":
        if len(params) != 2:
            raise ValueError("circulant takes (n, distances)")
        return circulant(params[0], params[1])
    if key not in _CONSTRUCTORS:
        raise KeyError(f"unknown graph name {name!r}")
    fn, arity = _CONSTRUCTORS[key]
    if len(params) != arity:
        raise ValueError(f"{key} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*params)


def parse_graph_spec(spec: str) -> Graph:
    """Parse ``name`` / ``name:p1,p2`` / ``circulant:13:1,5`` or fall back to graph6."""
    parts = spec.split(":")
    key = ALIASES.get(parts[0].lower(), parts[0].lower())
    if key == "circulant" and len(parts) == 3:
        return circulant(int(parts[1]), [int(x) for x in parts[2].split(",")])
    if key in _CONSTRUCTORS or key == "cyc13":
        params = [int(x) for x in parts[1].split(",")] if len(parts) > 1 and parts[1] else []
        return named_graph(key, *params)
    try:
        return parse_graph6(spec)
    except Graph6Error:
        # lowercase words are almost always a mistyped name, not graph6
        if re.fullmatch(r"[a-z][a-z0-9_]*(:.*)?", spec):
            raise ValueError(f"unknown graph name {parts[0]!r}") from None
        raise
