"""Exact lower-bound evaluators for rainbow-triangle counts.

Every evaluator returns a :class:`BoundVerdict`: the bound as a
:class:`fractions.Fraction`, the true count from the census, and whether the
hypotheses of the corresponding result hold. A verdict whose hypotheses fail is
vacuous and never counts as a violation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Any, NamedTuple, Optional

from rainbowtri.census import TriangleCensus, count_rainbow_fast
from rainbowtri.generators import EVEN_N2MOD4_NOTE, EXAMPLE3_MODULUS_NOTE
from rainbowtri.graph import (
    EdgeColoredGraph,
    is_proper_balanced_complete_bipartite,
    min_color_degree,
    mono_order,
    sigma2c,
)
from rainbowtri.reduction import edge_minimalize, is_edge_minimal


class TheoremId(str, enum.Enum):
    T1 = "T1"
    T2 = "T2"
    MAIN1 = "MAIN1"
    STRONG_MAIN1 = "STRONG_MAIN1"
    RT1 = "RT1"
    RT2 = "RT2"
    CN_UNION = "CN_UNION"
    MAIN2 = "MAIN2"
    TOPK = "TOPK"
    EFGS95 = "EFGS95"
    EG59 = "EG59"
    LEMMA1 = "LEMMA1"
    LEMMA2 = "LEMMA2"
    LEMMA4 = "LEMMA4"
    FRIENDSHIP = "FRIENDSHIP"


@dataclass
class BoundVerdict:
    theorem_id: TheoremId
    preconditions_met: bool
    bound: Fraction
    observed: int
    satisfied: bool
    reasons: list[str] = field(default_factory=list)
    parameters: dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        """``"vacuous"``, ``"checked"`` or ``"violated"``."""
        if not self.preconditions_met:
            return "vacuous"
        return "checked" if self.satisfied else "violated"

    @property
    def tight(self) -> bool:
        return self.preconditions_met and self.bound == self.observed


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_plain(x) for x in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


def make_verdict(
    theorem_id: TheoremId,
    reasons: list[str],
    bound: Fraction | int,
    observed: int,
    **parameters: Any,
) -> BoundVerdict:
    bound = Fraction(bound)
    met = not reasons
    return BoundVerdict(
        theorem_id=theorem_id,
        preconditions_met=met,
        bound=bound,
        observed=observed,
        satisfied=(not met) or observed >= bound,
        reasons=list(reasons),
        # JSON-ready values: rationals as "p/q" strings, tuples as lists
        parameters={k: _plain(v) for k, v in parameters.items()},
    )


@lru_cache(maxsize=64)
def census(g: EdgeColoredGraph) -> TriangleCensus:
    return count_rainbow_fast(g)


def high_color_degree(g: EdgeColoredGraph) -> bool:
    """``delta^c >= (n+1)/2``, compared in integers."""
    return g.n >= 1 and 2 * min_color_degree(g) >= g.n + 1


def prepare_minimal(
    g: EdgeColoredGraph, reduce: bool
) -> tuple[EdgeColoredGraph, list[str], dict[str, Any]]:
    """Resolve the edge-minimality hypothesis.

    With ``reduce`` the graph is minimalized first and both minimum color
    degrees are recorded; otherwise a non-minimal graph yields a reason.
    """
    if not reduce:
        return g, ([] if is_edge_minimal(g) else ["graph is not edge-minimal"]), {}
    h = edge_minimalize(g)
    params: dict[str, Any] = {
        "reduced": True,
        "edges_removed": g.num_edges - h.num_edges,
    }
    if g.n:
        params["delta_c_input"] = min_color_degree(g)
        params["delta_c_reduced"] = min_color_degree(h)
    return h, [], params


def _degree_excess_sum(g: EdgeColoredGraph) -> int:
    n = g.n
    return sum((n - g.degree(v) - 1) * (g.degree(v) - g.color_degree(v)) for v in range(n))


def _high_cdeg_reasons(g: EdgeColoredGraph) -> list[str]:
    if g.n == 0:
        return ["empty graph"]
    if not high_color_degree(g):
        return [f"delta^c = {min_color_degree(g)} < (n+1)/2 = {Fraction(g.n + 1, 2)}"]
    return []


def bound_main1(g: EdgeColoredGraph, reduce: bool = False) -> BoundVerdict:
    h, reasons, params = prepare_minimal(g, reduce)
    reasons = _high_cdeg_reasons(h) + reasons
    s2 = sigma2c(h)
    if s2 is None:
        bound = Fraction(0)
    else:
        bound = Fraction(h.num_edges * (s2 - h.n), 3) + Fraction(_degree_excess_sum(h), 6)
    return make_verdict(TheoremId.MAIN1, reasons, bound, census(h).total, sigma2c=s2, **params)


def strong_main1_value(g: EdgeColoredGraph) -> Fraction:
    n = g.n
    cd = [g.color_degree(v) for v in range(n)]
    total = _degree_excess_sum(g)
    for v in range(n):
        total += sum(cd[v] + cd[a] - n for a in g.adj[v])
    return Fraction(total, 6)


def bound_strong_main1(g: EdgeColoredGraph, reduce: bool = False) -> BoundVerdict:
    h, reasons, params = prepare_minimal(g, reduce)
    reasons = _high_cdeg_reasons(h) + reasons
    return make_verdict(TheoremId.STRONG_MAIN1, reasons, strong_main1_value(h), census(h).total, **params)


def bound_rt1(g: EdgeColoredGraph) -> BoundVerdict:
    """``rt(G) >= delta^c (2 delta^c - n) n / 6``; holds for every graph."""
    if g.n == 0:
        return make_verdict(TheoremId.RT1, [], 0, 0)
    d = min_color_degree(g)
    return make_verdict(TheoremId.RT1, [], Fraction(d * (2 * d - g.n) * g.n, 6), census(g).total)


def f_n_bounds(n: int) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds on the least rainbow-triangle count with ``delta^c >= (n+1)/2``."""
    if n < 3:
        raise ValueError(f"f(n) bounds need n >= 3, got {n}")
    if n % 2 == 0:
        return Fraction(n * n + 2 * n, 6), Fraction(n * n, 4)
    return Fraction(n * n + n, 12), Fraction(n * n - 1, 8)


def f_n_upper_witness(n: int) -> tuple[Optional[str], Optional[str]]:
    """Generator family realizing the ``f(n)`` upper bound at ``n``, and a caveat note.

    Returns ``("example2", None)`` for ``4 | n``, ``("example3", note)`` for
    ``n = 3 (mod 4)``, and ``(None, note)`` otherwise.
    """
    if n % 4 == 0:
        return "example2", None
    if n % 4 == 3:
        return "example3", EXAMPLE3_MODULUS_NOTE
    if n % 4 == 2:
        return None, EVEN_N2MOD4_NOTE
    return None, EXAMPLE3_MODULUS_NOTE


def bound_rt2(g: EdgeColoredGraph) -> BoundVerdict:
    n = g.n
    if n < 3:
        return make_verdict(TheoremId.RT2, ["n < 3"], 0, census(g).total)
    lower, upper = f_n_bounds(n)
    family, note = f_n_upper_witness(n)
    params: dict[str, Any] = {"upper": upper, "upper_witness": family}
    if note:
        params["note"] = note
    return make_verdict(TheoremId.RT2, _high_cdeg_reasons(g), lower, census(g).total, **params)


def min_color_union(g: EdgeColoredGraph) -> Optional[int]:
    """Smallest ``|CN(u) | CN(v)|`` over unordered vertex pairs; ``None`` if ``n < 2``."""
    cns = [g.color_neighborhood(v) for v in range(g.n)]
    best = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            size = len(cns[u] | cns[v])
            if best is None or size < best:
                best = size
    return best


def bound_color_union(g: EdgeColoredGraph) -> BoundVerdict:
    n = g.n
    reasons = []
    union = min_color_union(g)
    if n < 4:
        reasons.append("n < 4")
    elif union is not None and union < n:
        reasons.append(f"min |CN(u) | CN(v)| = {union} < n = {n}")
    return make_verdict(
        TheoremId.CN_UNION, reasons, Fraction(n * n - 2 * n, 24), census(g).total, min_union=union
    )


def _check_k(g: EdgeColoredGraph, k: int) -> int:
    d = min_color_degree(g)
    if not 1 <= k <= d - 1:
        raise ValueError(f"k must satisfy 1 <= k <= delta^c - 1 = {d - 1}, got {k}")
    return d


def delta_k(g: EdgeColoredGraph, k: int) -> int:
    """``delta^c * (top-k mono degree sum) - k * (top-delta^c mono degree sum)``."""
    d = min_color_degree(g)
    mono = [g.mono_degree(v) for v in mono_order(g)]
    return d * sum(mono[:k]) - k * sum(mono[:d])


def bound_main2(g: EdgeColoredGraph, k: int, reduce: bool = False) -> BoundVerdict:
    h, reasons, params = prepare_minimal(g, reduce)
    d = _check_k(h, k)
    order = mono_order(h)
    top = order[:k]
    mono_sum = sum(h.mono_degree(v) for v in top)
    s2 = sigma2c(h)
    dk = delta_k(h, k)
    bound = Fraction((mono_sum + k * (d - 1)) * ((s2 if s2 is not None else 0) - h.n) + dk, 2)
    per = census(h).per_vertex
    observed = sum(per[v] for v in top)
    return make_verdict(
        TheoremId.MAIN2,
        reasons,
        bound,
        observed,
        k=k,
        delta_k=dk,
        sigma2c=s2,
        high_color_degree=high_color_degree(h),
        **params,
    )


def bound_topk_simple(g: EdgeColoredGraph, k: int, reduce: bool = False) -> BoundVerdict:
    """Top-``k`` vertices by mono degree carry at least ``k * delta^c / 2`` rainbow-triangle corners.

    Minimality is not a hypothesis here; ``reduce`` evaluates on the
    minimalized graph instead (with its own vertex order).
    """
    if reduce:
        h, _, params = prepare_minimal(g, True)
    else:
        h, params = g, {}
    d = _check_k(h, k)
    per = census(h).per_vertex
    observed = sum(per[v] for v in mono_order(h)[:k])
    return make_verdict(TheoremId.TOPK, _high_cdeg_reasons(h), Fraction(k * d, 2), observed, k=k, **params)


def theorem1_verdict(g: EdgeColoredGraph) -> BoundVerdict:
    reasons = ["n < 3"] if g.n < 3 else _high_cdeg_reasons(g)
    return make_verdict(TheoremId.T1, reasons, 1, census(g).total)


def theorem2_verdict(g: EdgeColoredGraph) -> BoundVerdict:
    """At least one rainbow triangle when ``n >= 5`` and ``delta^c >= n/2``.

    The properly colored ``K_{n/2,n/2}`` is excluded; the verdict records
    whether ``g`` is that graph.
    """
    n = g.n
    exceptional = is_proper_balanced_complete_bipartite(g)
    reasons = []
    if n < 5:
        reasons.append("n < 5")
    elif 2 * min_color_degree(g) < n:
        reasons.append(f"delta^c = {min_color_degree(g)} < n/2")
    if exceptional:
        reasons.append("properly colored balanced complete bipartite graph")
    return make_verdict(TheoremId.T2, reasons, 1, census(g).total, exceptional=exceptional)


def proposition1_sum(g: EdgeColoredGraph) -> int:
    """``sum_v sum_{a in N(v)} (d_{C(va)}(v) - d_{C(va)}(a))``; zero on every graph."""
    total = 0
    for v in range(g.n):
        for a, c in g.adj[v].items():
            total += g.class_size(v, c) - g.class_size(a, c)
    return total


class TuranValue(NamedTuple):
    value: int
    in_range: bool


def turan_fk(n: int, k: int) -> TuranValue:
    """Turán number of the friendship graph ``F_k``; ``in_range`` iff ``n >= 50 k^2``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    base = n * n // 4
    value = base + k * k - k if k % 2 else base + k * k - 3 * k // 2
    return TuranValue(value, n >= 50 * k * k)


def erdos_gallai_bound(n: int, k: int) -> int:
    """Maximum edge count of an ``n``-vertex graph with matching number at most ``k``."""
    if not 0 <= k <= n // 2:
        raise ValueError(f"k must satisfy 0 <= k <= n // 2 = {n // 2}, got {k}")
    return max(comb(2 * k + 1, 2), comb(n, 2) - comb(n - k, 2))
