"""Exact rainbow-triangle counting.

Two independent counters are provided. :func:`count_rainbow_bruteforce` looks
at every vertex triple and is the reference; :func:`count_rainbow_fast` is the
forward (oriented node-iterator) algorithm. They must agree on every input.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from rainbowtri.graph import EdgeColoredGraph, GraphError


@dataclass(frozen=True)
class TriangleCensus:
    total: int
    per_vertex: tuple[int, ...]
    triangles_examined: int = field(default=0, compare=False)


def _rainbow(a: int, b: int, c: int) -> bool:
    return a != b and b != c and a != c


def count_rainbow_bruteforce(g: EdgeColoredGraph) -> TriangleCensus:
    n = g.n
    # -1 marks a non-edge; colors are non-negative
    mat = [[-1] * n for _ in range(n)]
    for u, v, c in g.edges:
        mat[u][v] = mat[v][u] = c
    per = [0] * n
    total = 0
    examined = 0
    for i in range(n):
        row_i = mat[i]
        for j in range(i + 1, n):
            cij = row_i[j]
            examined += n - j - 1
            if cij < 0:
                continue
            row_j = mat[j]
            for k in range(j + 1, n):
                cik = row_i[k]
                cjk = row_j[k]
                if cik < 0 or cjk < 0:
                    continue
                if _rainbow(cij, cik, cjk):
                    total += 1
                    per[i] += 1
                    per[j] += 1
                    per[k] += 1
    return TriangleCensus(total, tuple(per), examined)


def count_rainbow_fast(g: EdgeColoredGraph) -> TriangleCensus:
    """Forward triangle listing with a rainbow filter.

    Vertices are ranked by ``(degree, id)`` and every edge is oriented from
    lower to higher rank, so each triangle is produced exactly once from its
    lowest-ranked corner.
    """
    n = g.n
    rank = [0] * n
    for r, v in enumerate(sorted(range(n), key=lambda x: (g.degree(x), x))):
        rank[v] = r
    out: list[dict[int, int]] = [
        {w: c for w, c in g.adj[v].items() if rank[w] > rank[v]} for v in range(n)
    ]
    per = [0] * n
    total = 0
    examined = 0
    for u in range(n):
        out_u = out[u]
        for v, cuv in out_u.items():
            out_v = out[v]
            small, large = (out_u, out_v) if len(out_u) <= len(out_v) else (out_v, out_u)
            for w in small:
                if w not in large:
                    continue
                examined += 1
                if _rainbow(cuv, out_u[w], out_v[w]):
                    total += 1
                    per[u] += 1
                    per[v] += 1
                    per[w] += 1
    return TriangleCensus(total, tuple(per), examined)


def rt_at_vertex(g: EdgeColoredGraph, v: int) -> int:
    """Rainbow triangles through ``v``, by scanning pairs of its neighbors."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    nbrs = list(g.adj[v].items())
    count = 0
    for i, (a, ca) in enumerate(nbrs):
        adj_a = g.adj[a]
        for b, cb in nbrs[i + 1:]:
            cab = adj_a.get(b)
            if cab is not None and _rainbow(ca, cb, cab):
                count += 1
    return count


def rainbow_triangles(g: EdgeColoredGraph) -> list[tuple[int, int, int]]:
    """All rainbow triangles as sorted vertex triples, in lexicographic order."""
    found = []
    for u, v, c in g.edges:
        for w, cuw in g.adj[u].items():
            if w <= v:
                continue
            cvw = g.adj[v].get(w)
            if cvw is not None and _rainbow(c, cuw, cvw):
                found.append((u, v, w))
    found.sort()
    return found
