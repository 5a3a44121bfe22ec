"""Machine-readable analysis reports (JSON, schema ``format_version`` "1")."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from rainbowtri.bounds import BoundVerdict, TheoremId, proposition1_sum
from rainbowtri.census import TriangleCensus
from rainbowtri.friendship import FriendshipWitness
from rainbowtri.graph import EdgeColoredGraph, max_mono_degree, min_color_degree, sigma2c
from rainbowtri.reduction import MinimalityReport

FORMAT_VERSION = "1"


@dataclass
class GraphSummary:
    n: int
    e: int
    min_color_degree: Optional[int]
    sigma2c: Optional[int]
    max_mono_degree: int
    num_colors: int
    proposition1_sum: int = 0

    @classmethod
    def of(cls, g: EdgeColoredGraph) -> "GraphSummary":
        return cls(
            n=g.n,
            e=g.num_edges,
            min_color_degree=min_color_degree(g) if g.n else None,
            sigma2c=sigma2c(g),
            max_mono_degree=max_mono_degree(g),
            num_colors=len(g.colors),
            proposition1_sum=proposition1_sum(g),
        )


@dataclass
class Report:
    graph_summary: GraphSummary
    census: Optional[TriangleCensus] = None
    verdicts: list[BoundVerdict] = field(default_factory=list)
    minimality: Optional[MinimalityReport] = None
    witness: Optional[FriendshipWitness] = None
    notes: list[str] = field(default_factory=list)
    provenance: dict[str, Any] = field(default_factory=dict)


def verdict_to_dict(v: BoundVerdict) -> dict[str, Any]:
    return {
        "theorem_id": v.theorem_id.value,
        "status": v.status,
        "preconditions_met": v.preconditions_met,
        "reasons": list(v.reasons),
        "bound": str(v.bound),
        "observed": v.observed,
        "satisfied": v.satisfied,
        "parameters": dict(v.parameters),
    }


def verdict_from_dict(d: dict[str, Any]) -> BoundVerdict:
    return BoundVerdict(
        theorem_id=TheoremId(d["theorem_id"]),
        preconditions_met=d["preconditions_met"],
        bound=Fraction(d["bound"]),
        observed=d["observed"],
        satisfied=d["satisfied"],
        reasons=list(d["reasons"]),
        parameters=dict(d["parameters"]),
    )


def report_to_dict(r: Report) -> dict[str, Any]:
    s = r.graph_summary
    out: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "graph_summary": {
            "n": s.n,
            "e": s.e,
            "min_color_degree": s.min_color_degree,
            "sigma2c": s.sigma2c,
            "max_mono_degree": s.max_mono_degree,
            "num_colors": s.num_colors,
            "proposition1_sum": s.proposition1_sum,
        },
        "census": None,
        "verdicts": [verdict_to_dict(v) for v in r.verdicts],
        "minimality": None,
        "witness": None,
        "notes": list(r.notes),
        "provenance": dict(r.provenance),
    }
    if r.census is not None:
        out["census"] = {
            "total": r.census.total,
            "per_vertex": list(r.census.per_vertex),
            "triangles_examined": r.census.triangles_examined,
        }
    if r.minimality is not None:
        m = r.minimality
        out["minimality"] = {
            "is_minimal": m.is_minimal,
            "removable_edges": [list(e) for e in m.removable_edges],
            "mono_c3_found": list(m.mono_c3_found) if m.mono_c3_found else None,
            "mono_p4_found": list(m.mono_p4_found) if m.mono_p4_found else None,
            "star_forest_ok": {str(c): ok for c, ok in sorted(m.star_forest_ok.items())},
        }
    if r.witness is not None:
        out["witness"] = {
            "center": r.witness.center,
            "triangles": [list(t) for t in r.witness.triangles],
        }
    return out


def report_from_dict(d: dict[str, Any]) -> Report:
    version = d.get("format_version")
    if version != FORMAT_VERSION:
        raise ValueError(f"unsupported report format version {version!r}")
    c = d["census"]
    m = d["minimality"]
    w = d["witness"]
    return Report(
        graph_summary=GraphSummary(**d["graph_summary"]),
        census=TriangleCensus(c["total"], tuple(c["per_vertex"]), c["triangles_examined"]) if c else None,
        verdicts=[verdict_from_dict(v) for v in d["verdicts"]],
        minimality=MinimalityReport(
            is_minimal=m["is_minimal"],
            removable_edges=[tuple(e) for e in m["removable_edges"]],
            mono_c3_found=tuple(m["mono_c3_found"]) if m["mono_c3_found"] else None,
            mono_p4_found=tuple(m["mono_p4_found"]) if m["mono_p4_found"] else None,
            star_forest_ok={int(k): ok for k, ok in m["star_forest_ok"].items()},
        ) if m else None,
        witness=FriendshipWitness(w["center"], tuple(tuple(t) for t in w["triangles"])) if w else None,
        notes=list(d["notes"]),
        provenance=dict(d["provenance"]),
    )


def report_serialize(r: Report) -> str:
    return json.dumps(report_to_dict(r), indent=2)


def report_deserialize(text: str) -> Report:
    return report_from_dict(json.loads(text))
