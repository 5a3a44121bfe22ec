"""Rainbow friendship subgraphs via maximum matchings in link graphs.

A rainbow triangle through ``v`` is an edge ``ab`` of the rainbow link graph of
``v``; ``k`` such triangles pairwise sharing only ``v`` are exactly a matching
of size ``k`` there. Maximum matchings are found with Edmonds' blossom
algorithm.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Optional

from rainbowtri.bounds import (
    BoundVerdict,
    TheoremId,
    erdos_gallai_bound,
    make_verdict,
    turan_fk,
)
from rainbowtri.graph import EdgeColoredGraph, GraphError, max_mono_degree, min_color_degree, mono_order

SimpleGraph = Mapping[Hashable, Iterable[Hashable]]


@dataclass(frozen=True)
class FriendshipWitness:
    center: int
    triangles: tuple[tuple[int, int], ...]

    @property
    def k(self) -> int:
        return len(self.triangles)


def _index(h: SimpleGraph) -> tuple[list, list[list[int]]]:
    nodes = sorted(set(h) | {b for a in h for b in h[a]})
    pos = {x: i for i, x in enumerate(nodes)}
    nbrs: list[set[int]] = [set() for _ in nodes]
    for a, bs in h.items():
        for b in bs:
            if a == b:
                continue
            nbrs[pos[a]].add(pos[b])
            nbrs[pos[b]].add(pos[a])
    return nodes, [sorted(s) for s in nbrs]


def _blossom(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[u], match[v] = v, u
                    break

    def find_path(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # odd cycle: contract the blossom onto its base
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1:
            continue
        v, parent = find_path(root)
        # flip the alternating path ending at the free vertex v
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
    return match


def max_matching(h: SimpleGraph) -> list[tuple]:
    """A maximum matching of the undirected graph ``h`` (adjacency mapping).

    Returns the matched pairs ``(a, b)`` with ``a < b``, sorted.
    """
    nodes, adj = _index(h)
    match = _blossom(adj)
    return sorted((nodes[i], nodes[j]) for i, j in enumerate(match) if j > i)


def matching_number(h: SimpleGraph) -> int:
    return len(max_matching(h))


def rainbow_link_graph(g: EdgeColoredGraph, v: int) -> dict[int, set[int]]:
    """Graph on ``N(v)``: ``ab`` is an edge iff ``vab`` is a rainbow triangle."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    spokes = g.adj[v]
    link: dict[int, set[int]] = {a: set() for a in sorted(spokes)}
    for a, ca in spokes.items():
        for b, cab in g.adj[a].items():
            cb = spokes.get(b)
            if cb is not None and ca != cb and cab != ca and cab != cb:
                link[a].add(b)
    return link


def link_graph(g: EdgeColoredGraph, v: int) -> dict[int, set[int]]:
    """Uncolored link: the subgraph induced by ``N(v)``."""
    spokes = g.adj[v]
    return {a: {b for b in g.adj[a] if b in spokes} for a in sorted(spokes)}


def _centers(g: EdgeColoredGraph, centers: Optional[Iterable[int]]) -> list[int]:
    return mono_order(g) if centers is None else list(centers)


def find_friendship(
    g: EdgeColoredGraph, k: int, centers: Optional[Iterable[int]] = None
) -> Optional[FriendshipWitness]:
    """First center (by :func:`mono_order` unless given) with ``k`` rainbow triangles meeting only there."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    for v in _centers(g, centers):
        if g.degree(v) < 2 * k:
            continue
        link = rainbow_link_graph(g, v)
        if sum(map(len, link.values())) < 2 * k:
            continue
        m = max_matching(link)
        if len(m) >= k:
            return FriendshipWitness(v, tuple(m[:k]))
    return None


def check_witness(g: EdgeColoredGraph, w: FriendshipWitness) -> bool:
    """Re-verify a witness from the raw edge colors."""
    seen = {w.center}
    for a, b in w.triangles:
        if a in seen or b in seen or a == b:
            return False
        seen.update((a, b))
        try:
            cols = {g.color(w.center, a), g.color(w.center, b), g.color(a, b)}
        except KeyError:
            return False
        if len(cols) != 3:
            return False
    return True


def theorem9_verdict(g: EdgeColoredGraph, k: int = 2) -> BoundVerdict:
    """``k`` rainbow triangles sharing one vertex under ``n >= 50k^2`` and ``delta^c >= n/2 + k - 1``.

    ``observed`` is ``k`` when a witness is found and the largest link-graph
    matching number otherwise. ``parameters["max_mon_center"]`` reports
    whether some center of maximum monochromatic degree works.
    """
    n = g.n
    reasons = []
    if k < 2:
        reasons.append("k < 2")
    if n < 50 * k * k:
        reasons.append(f"n = {n} < 50k^2 = {50 * k * k}")
    if n == 0 or 2 * min_color_degree(g) < n + 2 * k - 2:
        reasons.append("delta^c < n/2 + k - 1")
    w = find_friendship(g, k) if k >= 1 else None
    if w is not None:
        observed = k
    else:
        observed = max((matching_number(rainbow_link_graph(g, v)) for v in range(n)), default=0)
    top = max_mono_degree(g)
    params = {
        "k": k,
        "center": w.center if w else None,
        "triangles": [list(t) for t in w.triangles] if w else None,
        # centers are tried in mono order, so a max-mono center works iff the first hit is one
        "max_mon_center": bool(w and g.mono_degree(w.center) == top),
    }
    return make_verdict(TheoremId.FRIENDSHIP, reasons, k, observed, **params)


def eg59_verdict(g: EdgeColoredGraph, k: Optional[int] = None) -> BoundVerdict:
    """Matching number forced by the edge count.

    If ``e(G) > EG(n, k)`` then the matching number exceeds ``k``. By default
    ``k`` is the largest value whose Erdős–Gallai bound is below ``e(G)``.
    """
    n = g.n
    e = g.num_edges
    if k is None:
        cands = [j for j in range(n // 2 + 1) if erdos_gallai_bound(n, j) < e]
        k = max(cands) if cands else 0
    eg = erdos_gallai_bound(n, k)
    reasons = [] if e > eg else [f"e(G) = {e} <= EG(n, k) = {eg}"]
    nbrs = {v: set(g.adj[v]) for v in range(n)}
    return make_verdict(TheoremId.EG59, reasons, k + 1, matching_number(nbrs), k=k, eg_bound=eg)


def friendship_number(g: EdgeColoredGraph, rainbow: bool = True, stop_at: Optional[int] = None) -> int:
    """Largest ``k`` with a (rainbow, if requested) ``F_k`` in ``g``."""
    best = 0
    for v in mono_order(g):
        if g.degree(v) // 2 <= best:
            continue
        link = rainbow_link_graph(g, v) if rainbow else link_graph(g, v)
        best = max(best, matching_number(link))
        if stop_at is not None and best >= stop_at:
            break
    return best


def efgs95_verdict(g: EdgeColoredGraph, k: Optional[int] = None) -> BoundVerdict:
    """An (uncolored) ``F_k`` once ``e(G)`` exceeds the friendship Turán number.

    By default ``k`` is the largest value with ``n >= 50k^2`` and
    ``e(G) > ex(n, F_k)``; when there is none the verdict is vacuous at ``k = 1``.
    """
    n = g.n
    e = g.num_edges
    if k is None:
        cands = [j for j in range(1, n + 1) if 50 * j * j <= n and e > turan_fk(n, j).value]
        k = max(cands) if cands else 1
    ex, in_range = turan_fk(n, k)
    reasons = []
    if not in_range:
        reasons.append(f"n = {n} < 50k^2")
    if e <= ex:
        reasons.append(f"e(G) = {e} <= ex(n, F_k) = {ex}")
    observed = friendship_number(g, rainbow=False, stop_at=k)
    return make_verdict(TheoremId.EFGS95, reasons, k, observed, k=k, ex=ex)
