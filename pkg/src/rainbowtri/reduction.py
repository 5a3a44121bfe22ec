"""Edge-minimalization under preserved color degrees and checks on its output."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Optional

from rainbowtri.graph import EdgeColoredGraph, GraphError


@dataclass
class MinimalityReport:
    is_minimal: bool
    removable_edges: list[tuple[int, int]] = field(default_factory=list)
    mono_c3_found: Optional[tuple[int, int, int]] = None
    mono_p4_found: Optional[tuple[int, int, int, int]] = None
    star_forest_ok: dict[int, bool] = field(default_factory=dict)


def is_removable(g: EdgeColoredGraph, u: int, v: int) -> bool:
    """Whether deleting ``uv`` leaves every vertex's color degree unchanged."""
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    c = g.color(u, v)
    return g.class_size(u, c) >= 2 and g.class_size(v, c) >= 2


def edge_minimalize(g: EdgeColoredGraph) -> EdgeColoredGraph:
    """Delete the lexicographically smallest removable edge until none is left.

    Removing an edge only shrinks color classes, so an edge that is not
    removable stays that way. A single ordered sweep that re-checks each edge
    against the live class sizes therefore deletes exactly the same edges as
    the repeated smallest-first rule.
    """
    sizes = [Counter(g.class_sizes(v)) for v in range(g.n)]
    kept = []
    for u, v, c in g.edges:
        if sizes[u][c] >= 2 and sizes[v][c] >= 2:
            sizes[u][c] -= 1
            sizes[v][c] -= 1
        else:
            kept.append((u, v, c))
    return EdgeColoredGraph(g.n, kept)


def _find_mono_c3(g: EdgeColoredGraph) -> Optional[tuple[int, int, int]]:
    for u, v, c in g.edges:
        for w, cuw in g.adj[u].items():
            if w > v and cuw == c and g.adj[v].get(w) == c:
                return (u, v, w)
    return None


def _find_mono_p4(g: EdgeColoredGraph) -> Optional[tuple[int, int, int, int]]:
    # middle edge bc, with a-b and c-d of the same color, a != d
    for b, c, col in g.edges:
        ends_b = [a for a, x in g.adj[b].items() if x == col and a != c]
        if not ends_b:
            continue
        ends_c = [d for d, x in g.adj[c].items() if x == col and d != b]
        for a in ends_b:
            for d in ends_c:
                if a != d:
                    return (a, b, c, d)
    return None


def _star_forest_by_color(g: EdgeColoredGraph) -> dict[int, bool]:
    by_color: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for u, v, c in g.edges:
        by_color[c].append((u, v))
    result = {}
    for c in sorted(by_color):
        nbrs: dict[int, list[int]] = defaultdict(list)
        for u, v in by_color[c]:
            nbrs[u].append(v)
            nbrs[v].append(u)
        ok = True
        seen: set[int] = set()
        for s in sorted(nbrs):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            i = 0
            while i < len(comp):
                for y in nbrs[comp[i]]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                i += 1
            m = sum(len(nbrs[x]) for x in comp) // 2
            # a star: a tree in which one vertex touches every edge
            if m != len(comp) - 1 or max(len(nbrs[x]) for x in comp) != m:
                ok = False
                break
        result[c] = ok
    return result


def check_minimal_structure(g: EdgeColoredGraph) -> MinimalityReport:
    removable = [(u, v) for u, v, _ in g.edges if is_removable(g, u, v)]
    return MinimalityReport(
        is_minimal=not removable,
        removable_edges=removable,
        mono_c3_found=_find_mono_c3(g),
        mono_p4_found=_find_mono_p4(g),
        star_forest_ok=_star_forest_by_color(g),
    )


def is_edge_minimal(g: EdgeColoredGraph) -> bool:
    return not any(is_removable(g, u, v) for u, v, _ in g.edges)
