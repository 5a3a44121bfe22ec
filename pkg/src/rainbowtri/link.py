"""Per-vertex structure behind the rainbow-triangle lower bounds.

For a center ``v`` the link digraph on ``N(v)`` has an arc ``a -> b`` whenever
``v a b`` is a rainbow path of length two. Its 2-cycles whose spokes differ in
color are exactly the rainbow triangles at ``v``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from rainbowtri.bounds import (
    BoundVerdict,
    TheoremId,
    census,
    high_color_degree,
    make_verdict,
    prepare_minimal,
)
from rainbowtri.census import rt_at_vertex
from rainbowtri.graph import EdgeColoredGraph, GraphError, min_color_degree, mono_order


@dataclass(frozen=True)
class LinkDigraph:
    center: int
    nodes: tuple[int, ...]
    arcs: frozenset[tuple[int, int]]
    out_degree: dict[int, int] = field(compare=False)
    in_degree: dict[int, int] = field(compare=False)

    def rainbow_two_cycles(self, g: EdgeColoredGraph) -> int:
        """Bidirected pairs ``{a, b}`` with ``C(va) != C(vb)``."""
        v = self.center
        return sum(
            1
            for a, b in self.arcs
            if a < b and (b, a) in self.arcs and g.color(v, a) != g.color(v, b)
        )


def _check_vertex(g: EdgeColoredGraph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


def link_digraph(g: EdgeColoredGraph, v: int) -> LinkDigraph:
    _check_vertex(g, v)
    spokes = g.adj[v]
    nodes = tuple(sorted(spokes))
    arcs = set()
    for a in nodes:
        ca = spokes[a]
        for b, cab in g.adj[a].items():
            if b in spokes and cab != ca:
                arcs.add((a, b))
    out_deg = {a: 0 for a in nodes}
    in_deg = {a: 0 for a in nodes}
    for a, b in arcs:
        out_deg[a] += 1
        in_deg[b] += 1
    return LinkDigraph(v, nodes, frozenset(arcs), out_deg, in_deg)


def lemma1_rhs(g: EdgeColoredGraph, v: int) -> Fraction:
    """Lower bound on the rainbow triangles at ``v`` for edge-minimal graphs with ``delta^c >= (n+1)/2``.

    Half of the sum of three terms: ``sum_a (d^c(v) + d^c(a) - n)`` over
    neighbors ``a``, ``(n - d(v) - 1)(d(v) - d^c(v))``, and
    ``sum_a (d_j(v) - d_j(a))`` with ``j = C(va)``. Colors are compared by raw
    id, never reindexed per vertex.
    """
    _check_vertex(g, v)
    n = g.n
    d = g.degree(v)
    dc = g.color_degree(v)
    total = (n - d - 1) * (d - dc)
    for a, j in g.adj[v].items():
        total += dc + g.color_degree(a) - n
        total += g.class_size(v, j) - g.class_size(a, j)
    return Fraction(total, 2)


def lemma1_verdict(g: EdgeColoredGraph, v: Optional[int] = None, reduce: bool = False) -> BoundVerdict:
    """Check the per-vertex bound at ``v``, or at every vertex when ``v`` is None.

    In the all-vertex form the reported bound and count are those of the
    vertex with least slack (ties: smallest id), and ``satisfied`` holds iff
    no vertex violates the bound.
    """
    h, reasons, params = prepare_minimal(g, reduce)
    if h.n == 0:
        return make_verdict(TheoremId.LEMMA1, ["empty graph"], 0, 0, **params)
    if not high_color_degree(h):
        reasons = ["delta^c < (n+1)/2"] + reasons
    per = census(h).per_vertex
    vertices = [v] if v is not None else list(range(h.n))
    worst = None
    violations = 0
    for x in vertices:
        rhs = lemma1_rhs(h, x)
        slack = per[x] - rhs
        if slack < 0:
            violations += 1
        if worst is None or slack < worst[0]:
            worst = (slack, x, rhs)
    _, x, rhs = worst
    return make_verdict(
        TheoremId.LEMMA1, reasons, rhs, per[x], vertex=x, vertices_checked=len(vertices),
        violations=violations, **params,
    )


@dataclass(frozen=True)
class XYSelection:
    center: int
    X: frozenset[int]
    Y: frozenset[int]
    f_value: int


def _f_value(g: EdgeColoredGraph, members, y_size: int) -> int:
    return min(g.color_degree(u) + y_size + 1 for u in members)


def select_xy(
    g: EdgeColoredGraph, v: int, y_size: int, rng: Optional[random.Random] = None
) -> XYSelection:
    """Choose ``X`` (a largest color class at ``v``) and ``y_size`` spokes of other, distinct colors.

    The canonical choice takes the smallest color id among largest classes for
    ``X``, the smallest remaining color ids for ``Y``, and per color the
    neighbor of least monochromatic degree (then least id). With ``rng`` every
    one of these choices is made uniformly at random instead.
    """
    _check_vertex(g, v)
    dc = g.color_degree(v)
    if not 0 <= y_size <= dc - 1:
        raise ValueError(f"y_size must satisfy 0 <= y_size <= d^c(v) - 1 = {dc - 1}, got {y_size}")
    sizes = g.class_sizes(v)
    top = max(sizes.values())
    biggest = sorted(c for c, s in sizes.items() if s == top)
    x_color = rng.choice(biggest) if rng else biggest[0]
    by_color: dict[int, list[int]] = {}
    for a, c in sorted(g.adj[v].items()):
        by_color.setdefault(c, []).append(a)
    others = sorted(c for c in by_color if c != x_color)
    chosen = rng.sample(others, y_size) if rng else others[:y_size]
    Y = []
    for c in chosen:
        cands = by_color[c]
        if rng:
            Y.append(rng.choice(cands))
        else:
            Y.append(min(cands, key=lambda a: (g.mono_degree(a), a)))
    X = by_color[x_color]
    return XYSelection(v, frozenset(X), frozenset(Y), _f_value(g, X + Y, y_size))


def validate_selection(g: EdgeColoredGraph, sel: XYSelection) -> None:
    v = sel.center
    _check_vertex(g, v)
    spokes = g.adj[v]
    if not sel.X or any(a not in spokes for a in sel.X | sel.Y) or sel.X & sel.Y:
        raise ValueError("X and Y must be disjoint sets of neighbors of the center")
    x_colors = {spokes[a] for a in sel.X}
    if len(x_colors) != 1 or len(sel.X) != g.mono_degree(v):
        raise ValueError("X must be a largest monochromatic class at the center")
    (xc,) = x_colors
    y_colors = [spokes[a] for a in sel.Y]
    if len(set(y_colors)) != len(y_colors) or xc in y_colors:
        raise ValueError("Y spokes must have pairwise distinct colors, all different from X's")
    if sel.f_value != _f_value(g, list(sel.X | sel.Y), len(sel.Y)):
        raise ValueError("f_value does not match the selection")


def lemma2_rhs(g: EdgeColoredGraph, v: int, sel: XYSelection, corrected: bool = False) -> Fraction:
    """Lower bound on the rainbow triangles at ``v`` given an ``X``/``Y`` selection.

    The uncorrected form can exceed the true count when ``d^mon(v) = 1``: the
    lone ``X`` vertex may then receive arcs that close no 2-cycle. With
    ``corrected`` those are charged like the ``Y`` terms, subtracting
    ``(d^mon(x) - 1) / 2``.
    """
    if sel.center != v:
        raise ValueError(f"selection is centered at {sel.center}, not {v}")
    validate_selection(g, sel)
    dm = g.mono_degree(v)
    y = len(sel.Y)
    total = (dm + y) * (sel.f_value - g.n) + y * dm - sum(g.mono_degree(a) for a in sel.Y)
    if corrected and dm == 1:
        (x,) = sel.X
        total -= g.mono_degree(x) - 1
    return Fraction(total, 2)


def lemma2_verdict(
    g: EdgeColoredGraph, v: Optional[int] = None, reduce: bool = False, corrected: bool = False
) -> BoundVerdict:
    """Check the X/Y bound with the canonical full-size ``Y`` at ``v`` or at every vertex.

    Reported like :func:`lemma1_verdict`: the least-slack vertex is shown.
    Vertices without edges are skipped.
    """
    h, reasons, params = prepare_minimal(g, reduce)
    vertices = [v] if v is not None else list(range(h.n))
    vertices = [x for x in vertices if h.color_degree(x) > 0]
    if not vertices:
        return make_verdict(TheoremId.LEMMA2, ["no vertex with edges"], 0, 0, **params)
    worst = None
    violations = 0
    for x in vertices:
        sel = select_xy(h, x, h.color_degree(x) - 1)
        rhs = lemma2_rhs(h, x, sel, corrected=corrected)
        slack = rt_at_vertex(h, x) - rhs
        violations += slack < 0
        if worst is None or slack < worst[0]:
            worst = (slack, x, rhs, sel)
    slack, x, rhs, sel = worst
    return make_verdict(
        TheoremId.LEMMA2, reasons, rhs, int(rhs + slack), vertex=x, y_size=len(sel.Y),
        f_value=sel.f_value, vertices_checked=len(vertices), violations=violations,
        corrected=corrected, delta_c=min_color_degree(h), **params,
    )


def proposition2_check(g: EdgeColoredGraph, k: int) -> tuple[int, int]:
    """Both sides of the mono-degree averaging inequality for the top ``k`` vertices.

    ``Y`` at each of the first ``k`` vertices of :func:`mono_order` is the
    canonical selection of size ``delta^c - 1``.
    """
    d = min_color_degree(g)
    if not 1 <= k <= d - 1:
        raise ValueError(f"k must satisfy 1 <= k <= delta^c - 1 = {d - 1}, got {k}")
    order = mono_order(g)
    mono = [g.mono_degree(v) for v in order]
    lhs = 0
    for v in order[:k]:
        sel = select_xy(g, v, d - 1)
        lhs += len(sel.Y) * g.mono_degree(v) - sum(g.mono_degree(a) for a in sel.Y)
    rhs = d * sum(mono[:k]) - k * sum(mono[:d])
    return lhs, rhs


def lemma4_verdict(g: EdgeColoredGraph, reduce: bool = False) -> BoundVerdict:
    h, reasons, params = prepare_minimal(g, reduce)
    if h.n == 0:
        return make_verdict(TheoremId.LEMMA4, ["empty graph"], 0, 0, **params)
    v = mono_order(h)[0]
    top = h.mono_degree(v)
    if top == 0:
        reasons = reasons + ["graph has no edges"]
    dc = h.color_degree(v)
    bound = Fraction((top + dc - 1) * (min_color_degree(h) + dc - h.n), 2)
    return make_verdict(TheoremId.LEMMA4, reasons, bound, rt_at_vertex(h, v), vertex=v, **params)
