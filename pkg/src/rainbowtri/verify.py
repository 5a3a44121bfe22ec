"""Name-based dispatch over all verdict evaluators (used by the CLI)."""

from __future__ import annotations

from typing import Callable, Iterable, Optional

from rainbowtri import bounds, friendship, link
from rainbowtri.bounds import BoundVerdict
from rainbowtri.graph import EdgeColoredGraph, min_color_degree
from rainbowtri.reduction import edge_minimalize


def default_ks(delta_c: int) -> list[int]:
    """``1``, ``delta^c // 2`` and ``delta^c - 1``, restricted to ``1..delta^c-1``."""
    return sorted({k for k in (1, delta_c // 2, delta_c - 1) if 1 <= k <= delta_c - 1})


def _ks(g: EdgeColoredGraph, k: Optional[int], reduce: bool) -> list[int]:
    if g.n == 0:
        return []
    d = min_color_degree(edge_minimalize(g) if reduce else g)
    if k is not None:
        return [k] if 1 <= k <= d - 1 else []
    return default_ks(d)


Evaluator = Callable[[EdgeColoredGraph, Optional[int], bool], list[BoundVerdict]]

EVALUATORS: dict[str, Evaluator] = {
    "t1": lambda g, k, r: [bounds.theorem1_verdict(g)],
    "t2": lambda g, k, r: [bounds.theorem2_verdict(g)],
    "main1": lambda g, k, r: [bounds.bound_main1(g, reduce=r)],
    "strong_main1": lambda g, k, r: [bounds.bound_strong_main1(g, reduce=r)],
    "rt1": lambda g, k, r: [bounds.bound_rt1(g)],
    "rt2": lambda g, k, r: [bounds.bound_rt2(g)],
    "cn_union": lambda g, k, r: [bounds.bound_color_union(g)],
    "main2": lambda g, k, r: [bounds.bound_main2(g, j, reduce=r) for j in _ks(g, k, r)],
    "topk": lambda g, k, r: [bounds.bound_topk_simple(g, j, reduce=r) for j in _ks(g, k, r)],
    "lemma1": lambda g, k, r: [link.lemma1_verdict(g, reduce=r)],
    "lemma2": lambda g, k, r: [link.lemma2_verdict(g, reduce=r)],
    "lemma4": lambda g, k, r: [link.lemma4_verdict(g, reduce=r)],
    "efgs95": lambda g, k, r: [friendship.efgs95_verdict(g)],
    "eg59": lambda g, k, r: [friendship.eg59_verdict(g)],
    "friendship": lambda g, k, r: [friendship.theorem9_verdict(g, k if k is not None else 2)],
}

# lemma2 is opt-in: its stated form has counterexamples at mono degree 1
ALL_THEOREMS = [name for name in EVALUATORS if name != "lemma2"]


def resolve_names(spec: str | Iterable[str]) -> list[str]:
    """Parse ``"all"`` or a comma-separated list; dashes and case are ignored."""
    items = spec.split(",") if isinstance(spec, str) else list(spec)
    names: list[str] = []
    for item in items:
        name = item.strip().lower().replace("-", "_")
        if not name:
            continue
        if name == "all":
            names.extend(ALL_THEOREMS)
        elif name in EVALUATORS:
            names.append(name)
        else:
            raise ValueError(f"unknown theorem {item!r}; choose from {', '.join(EVALUATORS)} or all")
    return list(dict.fromkeys(names))


def evaluate(
    g: EdgeColoredGraph, names: Iterable[str], reduce: bool = False, k: Optional[int] = None
) -> list[BoundVerdict]:
    verdicts = []
    for name in names:
        verdicts.extend(EVALUATORS[name](g, k, reduce))
    return verdicts
