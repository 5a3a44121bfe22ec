"""Extremal constructions and seeded random models.

All random generators draw from :class:`random.Random` seeded with the given
integer, so identical arguments give identical graphs within this package.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import combinations
from typing import Optional

from rainbowtri.graph import EdgeColoredGraph, GraphError

EXAMPLE3_MODULUS_NOTE = (
    "example3: the construction needs a perfect matching on (n+1)/2 vertices, "
    "which exists only for n = 3 (mod 4); the stated modulus n = 1 (mod 4) is "
    "inconsistent with it"
)
EVEN_N2MOD4_NOTE = (
    "f(n) upper bound n^2/4 is witnessed by example2 only when 4 | n; "
    "no construction is known here for n = 2 (mod 4)"
)


def _rainbow(n: int, pairs) -> EdgeColoredGraph:
    return EdgeColoredGraph(n, [(u, v, i) for i, (u, v) in enumerate(sorted(pairs))])


def rainbow_complete(n: int) -> EdgeColoredGraph:
    if n < 1:
        raise GraphError("rainbow_complete needs n >= 1")
    return _rainbow(n, combinations(range(n), 2))


def rainbow_turan(n: int, k: int) -> EdgeColoredGraph:
    """Complete balanced ``k``-partite graph with every edge a distinct color.

    Part ``i`` is the block ``i*n/k .. (i+1)*n/k - 1``.
    """
    if k < 3:
        raise GraphError(f"rainbow_turan needs k >= 3, got {k}")
    if n % k:
        raise GraphError(f"rainbow_turan needs k | n, got n={n}, k={k}")
    size = n // k
    return _rainbow(n, ((u, v) for u, v in combinations(range(n), 2) if u // size != v // size))


def proper_complete_bipartite(m: int) -> EdgeColoredGraph:
    """``K_{m,m}`` on sides ``0..m-1`` and ``m..2m-1``, color ``(i + j) mod m``."""
    if m < 1:
        raise GraphError("proper_complete_bipartite needs m >= 1")
    return EdgeColoredGraph(2 * m, [(i, m + j, (i + j) % m) for i in range(m) for j in range(m)])


def example2(n: int) -> EdgeColoredGraph:
    """Rainbow ``K_{n/2,n/2}`` plus a perfect matching inside each side; ``4 | n``."""
    if n < 4 or n % 4:
        raise GraphError(f"example2 needs n = 0 (mod 4) and n >= 4, got {n}")
    h = n // 2
    pairs = [(a, b) for a in range(h) for b in range(h, n)]
    pairs += [(i, i + 1) for i in range(0, n, 2)]
    return _rainbow(n, pairs)


def example3(n: int) -> EdgeColoredGraph:
    """Rainbow graph on sides of sizes ``(n+1)/2`` and ``(n-1)/2``.

    The larger side carries a perfect matching, and all cross pairs are edges.
    This needs ``n = 3 (mod 4)``; see :data:`EXAMPLE3_MODULUS_NOTE`.
    """
    if n < 3 or n % 4 != 3:
        raise GraphError(f"example3 needs n = 3 (mod 4) and n >= 3, got {n}")
    h = (n + 1) // 2
    pairs = [(a, b) for a in range(h) for b in range(h, n)]
    pairs += [(i, i + 1) for i in range(0, h, 2)]
    return _rainbow(n, pairs)


def friendship_underlying(k: int) -> EdgeColoredGraph:
    """Rainbow ``F_k``: hub 0 and triangles ``{0, 2i+1, 2i+2}``."""
    if k < 1:
        raise GraphError("friendship_underlying needs k >= 1")
    pairs = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        pairs += [(0, a), (0, b), (a, b)]
    return _rainbow(2 * k + 1, pairs)


def random_colored(n: int, p: float, colors: int, seed: Optional[int] = None) -> EdgeColoredGraph:
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    if colors < 1:
        raise GraphError("need at least one color")
    rng = random.Random(seed)
    edges = []
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.append((u, v, rng.randrange(colors)))
    return EdgeColoredGraph(n, edges)


def repair_color_degree(g: EdgeColoredGraph, target: int, rng: random.Random) -> EdgeColoredGraph:
    """Raise every color degree to at least ``target`` using fresh colors.

    Vertices are repaired in id order: a deficient vertex gets a fresh-colored
    edge to a random non-neighbor, or, when it is already adjacent to everyone,
    one of its edges in a repeated color class is recolored fresh. Both moves
    raise its color degree by one and lower nobody else's.
    """
    if target > g.n - 1:
        raise GraphError(f"color degree {target} infeasible on {g.n} vertices")
    n = g.n
    adj = [dict(a) for a in g.adj]
    counts = [Counter(a.values()) for a in adj]
    fresh = max(g.colors, default=-1) + 1
    # repairs never lower another vertex's color degree, so one pass suffices
    for v in range(n):
        while len(counts[v]) < target:
            free = [u for u in range(n) if u != v and u not in adj[v]]
            if free:
                u = rng.choice(free)
            else:
                u = rng.choice(sorted(w for w, c in adj[v].items() if counts[v][c] >= 2))
                old = adj[v][u]
                for x in (u, v):
                    counts[x][old] -= 1
                    if not counts[x][old]:
                        del counts[x][old]
            adj[v][u] = adj[u][v] = fresh
            counts[u][fresh] += 1
            counts[v][fresh] += 1
            fresh += 1
    return EdgeColoredGraph(n, [(u, v, c) for u in range(n) for v, c in adj[u].items() if u < v])


def random_high_color_degree(
    n: int, target: int, seed: Optional[int] = None, colors: Optional[int] = None
) -> EdgeColoredGraph:
    """A ``G(n, 1/2)`` graph repaired to ``delta^c >= target``.

    The base palette has ``n^2`` colors unless ``colors`` is given; a small
    palette produces many repeated colors and hence non-trivial minimalization.
    """
    if target > n - 1:
        raise GraphError(f"color degree {target} infeasible on {n} vertices")
    base = random_colored(n, 0.5, colors if colors is not None else max(1, n * n), seed)
    # independent stream for the repair so the base graph matches random_colored
    rng = random.Random(f"repair:{seed}")
    return repair_color_degree(base, target, rng)
