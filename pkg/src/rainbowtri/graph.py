"""Edge-colored simple graphs and the per-vertex color statistics built on them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional

Edge = tuple[int, int, int]


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, parallel edges, bad ids)."""


class EdgeColoredGraph:
    """An immutable simple undirected graph with one color id per edge.

    Vertices are ``0 .. n-1``. ``edges`` holds normalized ``(u, v, c)`` triples
    with ``u < v``, sorted by ``(u, v)``. ``adj[v]`` maps each neighbor of ``v``
    to the color of the joining edge.
    """

    __slots__ = ("n", "edges", "adj", "_classes")

    def __init__(self, n: int, edges: Iterable[Edge]):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj: list[dict[int, int]] = [{} for _ in range(n)]
        normalized: list[Edge] = []
        for u, v, c in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex id out of range in edge ({u}, {v}) for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if c < 0:
                raise GraphError(f"negative color {c} on edge ({u}, {v})")
            if v in adj[u]:
                raise GraphError(f"duplicate edge {{{u}, {v}}}")
            adj[u][v] = c
            adj[v][u] = c
            normalized.append((u, v, c) if u < v else (v, u, c))
        normalized.sort()
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(normalized)
        self.adj: tuple[dict[int, int], ...] = tuple(adj)
        self._classes: tuple[Counter[int], ...] = tuple(Counter(a.values()) for a in adj)

    def __repr__(self) -> str:
        return f"EdgeColoredGraph(n={self.n}, e={len(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoredGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def colors(self) -> frozenset[int]:
        return frozenset(c for _, _, c in self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def color(self, u: int, v: int) -> int:
        """Color of edge uv; KeyError if absent."""
        return self.adj[u][v]

    def neighbors(self, v: int) -> Iterator[int]:
        return iter(self.adj[v])

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def color_degree(self, v: int) -> int:
        return len(self._classes[v])

    def mono_degree(self, v: int) -> int:
        cls = self._classes[v]
        return max(cls.values()) if cls else 0

    def class_size(self, v: int, c: int) -> int:
        """Number of edges at ``v`` with color ``c`` (zero if none)."""
        return self._classes[v].get(c, 0)

    def class_sizes(self, v: int) -> Mapping[int, int]:
        return self._classes[v]

    def color_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(self._classes[v])

    def without_edge(self, u: int, v: int) -> "EdgeColoredGraph":
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        a, b = min(u, v), max(u, v)
        return EdgeColoredGraph(self.n, [e for e in self.edges if (e[0], e[1]) != (a, b)])


@dataclass(frozen=True)
class VertexColorProfile:
    v: int
    degree: int
    color_degree: int
    mono_degree: int
    color_neighborhood: frozenset[int]
    class_sizes: dict[int, int]


def build_graph(n: int, edge_list: Iterable[Edge]) -> EdgeColoredGraph:
    """Validate and normalize an edge list into an :class:`EdgeColoredGraph`.

    Raises :class:`GraphError` on self-loops, repeated pairs (whatever their
    colors) and vertex ids outside ``0 .. n-1``.
    """
    return EdgeColoredGraph(n, edge_list)


def _check_vertex(g: EdgeColoredGraph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


def vertex_profile(g: EdgeColoredGraph, v: int) -> VertexColorProfile:
    _check_vertex(g, v)
    sizes = dict(sorted(g.class_sizes(v).items()))
    return VertexColorProfile(
        v=v,
        degree=g.degree(v),
        color_degree=len(sizes),
        mono_degree=max(sizes.values(), default=0),
        color_neighborhood=frozenset(sizes),
        class_sizes=sizes,
    )


def min_color_degree(g: EdgeColoredGraph) -> int:
    if g.n < 1:
        raise GraphError("minimum color degree needs at least one vertex")
    return min(g.color_degree(v) for v in range(g.n))


def max_mono_degree(g: EdgeColoredGraph) -> int:
    return max((g.mono_degree(v) for v in range(g.n)), default=0)


def sigma2c(g: EdgeColoredGraph) -> Optional[int]:
    """Minimum of ``d^c(x) + d^c(y)`` over edges ``xy``; ``None`` for an edgeless graph."""
    if not g.edges:
        return None
    cd = [g.color_degree(v) for v in range(g.n)]
    return min(cd[u] + cd[v] for u, v, _ in g.edges)


def mono_order(g: EdgeColoredGraph) -> list[int]:
    """Vertices by monochromatic degree, largest first; ties by ascending id."""
    return sorted(range(g.n), key=lambda v: (-g.mono_degree(v), v))


def is_rainbow(g: EdgeColoredGraph) -> bool:
    return len(g.colors) == g.num_edges


def is_properly_colored(g: EdgeColoredGraph) -> bool:
    return all(g.mono_degree(v) <= 1 for v in range(g.n))


def is_proper_balanced_complete_bipartite(g: EdgeColoredGraph) -> bool:
    """True iff ``g`` is a properly colored ``K_{n/2, n/2}``.

    This is the exceptional graph for the ``delta^c >= n/2`` rainbow-triangle
    condition. Checked structurally: two equal sides, every cross pair an edge,
    no edge inside a side, and no two edges at a vertex sharing a color.
    """
    n = g.n
    if n == 0 or n % 2 or g.num_edges != (n // 2) ** 2:
        return False
    side = [-1] * n
    for s in range(n):
        if side[s] != -1:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return False
    left = [v for v in range(n) if side[v] == 0]
    right = [v for v in range(n) if side[v] == 1]
    if len(left) != len(right):
        return False
    if any(not g.has_edge(a, b) for a in left for b in right):
        return False
    return is_properly_colored(g)
