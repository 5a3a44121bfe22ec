import json

import pytest
from hypothesis import given

from conftest import colored_graphs
from rainbowtri.bounds import TheoremId, bound_color_union, make_verdict
from rainbowtri.census import count_rainbow_fast
from rainbowtri.ecg import EcgParseError, parse_ecg, parse_ecg_metadata, write_ecg
from rainbowtri.friendship import find_friendship
from rainbowtri.generators import example2, rainbow_complete
from rainbowtri.graph import EdgeColoredGraph
from rainbowtri.reduction import check_minimal_structure
from rainbowtri.report import (
    FORMAT_VERSION,
    GraphSummary,
    Report,
    report_deserialize,
    report_from_dict,
    report_serialize,
    report_to_dict,
)
from rainbowtri.verify import evaluate, resolve_names


def test_parse_rainbow_triangle():
    g = parse_ecg("3 3\n0 1 0\n1 2 1\n0 2 2")
    assert g == EdgeColoredGraph(3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)])


def test_parse_comments_and_orientation():
    g = parse_ecg("# family: test\n\n2 1\n# mid comment\n1 0 4\n")
    assert g.edges == ((0, 1, 4),)


@pytest.mark.parametrize(
    "text, line",
    [
        ("2 1\n0 0 1", 2),
        ("3 2\n0 1 0", None),
        ("3 2\n0 1 0\n1 0 2", 3),
        ("3 1\n0 5 0", 2),
        ("3 1\n0 1 x", 2),
        ("3 1\n0 1", 2),
        ("# only a comment\n", None),
        ("3\n", 1),
        ("2 1\n0 1 -2", 2),
        ("-1 0", 1),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(EcgParseError) as info:
        parse_ecg(text)
    assert info.value.line == line
    if line is not None:
        assert str(info.value).startswith(f"line {line}:")


def test_edge_count_mismatch_message():
    with pytest.raises(EcgParseError, match="declares 2 edges but 1"):
        parse_ecg("3 2\n0 1 0")


def test_write_examples(rainbow_k4):
    assert parse_ecg(write_ecg(rainbow_k4)) == rainbow_k4
    assert write_ecg(EdgeColoredGraph(5, [])) == "5 0\n"
    g = example2(8)
    once = write_ecg(parse_ecg(write_ecg(g)))
    assert once == write_ecg(parse_ecg(once)) == write_ecg(g)


def test_metadata_roundtrip():
    text = write_ecg(rainbow_complete(3), {"family": "rainbow-complete", "params": "n=3"})
    assert parse_ecg_metadata(text) == {"family": "rainbow-complete", "params": "n=3"}
    assert parse_ecg(text) == rainbow_complete(3)


@given(colored_graphs(max_colors=20))
def test_parse_write_identity(g):
    text = write_ecg(g)
    assert parse_ecg(text) == g
    assert write_ecg(parse_ecg(text)) == text


def test_write_is_canonical_under_shuffled_input():
    messy = "3 2\n2 1 5\n1 0 3\n"
    assert write_ecg(parse_ecg(messy)) == "3 2\n0 1 3\n1 2 5\n"


def test_rational_rendering(rainbow_k4):
    v = bound_color_union(rainbow_k4)
    d = report_to_dict(Report(GraphSummary.of(rainbow_k4), verdicts=[v]))
    assert d["verdicts"][0]["bound"] == "1/3"
    assert d["format_version"] == FORMAT_VERSION


def test_empty_report_fields(rainbow_k4):
    r = Report(GraphSummary.of(rainbow_k4), census=count_rainbow_fast(rainbow_k4))
    d = json.loads(report_serialize(r))
    assert d["verdicts"] == []
    assert len(d["census"]["per_vertex"]) == 4
    assert d["witness"] is None


def test_full_report_roundtrip():
    g = rainbow_complete(6)
    r = Report(
        graph_summary=GraphSummary.of(g),
        census=count_rainbow_fast(g),
        verdicts=evaluate(g, resolve_names("all")),
        minimality=check_minimal_structure(g),
        witness=find_friendship(g, 2),
        notes=["a note"],
        provenance={"command": "rainbowtri analyze x.ecg", "seed": None},
    )
    text = report_serialize(r)
    back = report_deserialize(text)
    assert back == r
    assert report_serialize(back) == text


def test_report_roundtrip_with_structures():
    g = EdgeColoredGraph(4, [(0, 1, 2), (1, 2, 2), (2, 3, 2), (0, 2, 2)])
    r = Report(GraphSummary.of(g), minimality=check_minimal_structure(g))
    assert report_deserialize(report_serialize(r)) == r


def test_verdict_order_is_deterministic():
    g = rainbow_complete(7)
    a = report_serialize(Report(GraphSummary.of(g), verdicts=evaluate(g, resolve_names("all"))))
    b = report_serialize(Report(GraphSummary.of(g), verdicts=evaluate(g, resolve_names("all"))))
    assert a == b


def test_unknown_version_rejected(rainbow_k4):
    d = report_to_dict(Report(GraphSummary.of(rainbow_k4)))
    d["format_version"] = "99"
    with pytest.raises(ValueError):
        report_from_dict(d)


def test_verdict_parameters_json_ready():
    v = make_verdict(TheoremId.MAIN2, [], 1, 1, k=2, triangles=[(1, 2)])
    d = report_to_dict(Report(GraphSummary.of(EdgeColoredGraph(1, [])), verdicts=[v]))
    assert json.loads(json.dumps(d))["verdicts"][0]["parameters"] == {"k": 2, "triangles": [[1, 2]]}


def test_resolve_names():
    assert "lemma2" not in resolve_names("all")
    assert resolve_names("rt1,Strong-Main1,rt1") == ["rt1", "strong_main1"]
    with pytest.raises(ValueError):
        resolve_names("nonsense")
