import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given

from conftest import colored_graphs
from rainbowtri.bounds import (
    TheoremId,
    bound_color_union,
    bound_main1,
    bound_main2,
    bound_rt1,
    bound_rt2,
    bound_strong_main1,
    bound_topk_simple,
    delta_k,
    erdos_gallai_bound,
    f_n_bounds,
    f_n_upper_witness,
    make_verdict,
    min_color_union,
    proposition1_sum,
    strong_main1_value,
    theorem1_verdict,
    theorem2_verdict,
    turan_fk,
)
from rainbowtri.census import count_rainbow_bruteforce
from rainbowtri.generators import (
    example2,
    example3,
    proper_complete_bipartite,
    rainbow_complete,
    rainbow_turan,
    random_colored,
    random_high_color_degree,
)
from rainbowtri.graph import EdgeColoredGraph
from rainbowtri.reduction import edge_minimalize


def test_verdict_status():
    v = make_verdict(TheoremId.T1, [], 1, 0)
    assert v.status == "violated" and not v.satisfied
    v = make_verdict(TheoremId.T1, ["n < 3"], 1, 0)
    assert v.status == "vacuous" and v.satisfied and not v.tight
    v = make_verdict(TheoremId.T1, [], Fraction(3, 2), 2, x=Fraction(1, 3), t=(1, 2))
    assert v.status == "checked"
    assert v.parameters == {"x": "1/3", "t": [1, 2]}


def test_main1_rainbow_k4(rainbow_k4):
    v = bound_main1(rainbow_k4)
    assert v.preconditions_met
    assert (v.bound, v.observed) == (4, 4)
    assert v.tight


def test_main1_turan_tight():
    v = bound_main1(rainbow_turan(9, 3))
    assert (v.bound, v.observed, v.tight) == (27, 27, True)


def test_main1_exceptional_is_vacuous():
    v = bound_main1(proper_complete_bipartite(4))
    assert not v.preconditions_met and v.satisfied
    assert any("delta^c" in r for r in v.reasons)


def test_main1_needs_minimality():
    g = EdgeColoredGraph(
        5, [(u, v, i) for i, (u, v) in enumerate((a, b) for a in range(5) for b in range(a + 1, 5))]
    )
    # add a removable pair by recoloring two edges at 0 and 1 to a shared color
    edges = [(u, v, 99 if (u, v) in {(0, 2), (0, 3), (1, 2), (1, 3)} else c) for u, v, c in g.edges]
    g = EdgeColoredGraph(5, edges)
    v = bound_main1(g)
    assert "graph is not edge-minimal" in v.reasons
    r = bound_main1(g, reduce=True)
    assert r.parameters["reduced"] is True
    assert r.parameters["edges_removed"] >= 1


def _main1_oracle(g):
    # sum over ordered edge ends, grouped per vertex, compared with the edge form
    n = g.n
    s2 = min(g.color_degree(u) + g.color_degree(v) for u, v, _ in g.edges)
    excess = sum((n - g.degree(v) - 1) * (g.degree(v) - g.color_degree(v)) for v in range(n))
    return Fraction(g.num_edges * (s2 - n), 3) + Fraction(excess, 6)


def test_strong_main1_examples(rainbow_k4):
    assert strong_main1_value(rainbow_k4) == 4
    assert strong_main1_value(rainbow_turan(9, 3)) == 27


@given(colored_graphs(min_n=1, max_n=9, max_colors=6))
def test_strong_dominates_main1(g):
    if not g.edges:
        return
    assert strong_main1_value(g) >= _main1_oracle(g)
    if edge_minimalize(g) == g and 2 * min(g.color_degree(v) for v in range(g.n)) >= g.n + 1:
        v = bound_main1(g)
        assert v.bound == _main1_oracle(g)
        assert v.satisfied
        assert bound_strong_main1(g).satisfied


def test_rt1_examples():
    v = bound_rt1(rainbow_turan(9, 3))
    assert (v.bound, v.observed, v.tight) == (27, 27, True)
    v = bound_rt1(rainbow_complete(5))
    assert (v.bound, v.observed, v.tight) == (10, 10, True)


@given(colored_graphs(max_n=9, max_colors=6))
def test_rt1_holds_everywhere(g):
    assert bound_rt1(g).satisfied


@pytest.mark.parametrize(
    "n, lower, upper",
    [(8, Fraction(80, 6), 16), (7, Fraction(56, 12), 6), (3, 1, 1), (12, 28, 36)],
)
def test_f_n_bounds(n, lower, upper):
    assert f_n_bounds(n) == (lower, upper)


def test_f_n_bounds_domain():
    with pytest.raises(ValueError):
        f_n_bounds(2)


def test_f_n_upper_witnesses_realize_upper_bound():
    for n in (4, 8, 12):
        family, note = f_n_upper_witness(n)
        assert family == "example2" and note is None
        assert count_rainbow_bruteforce(example2(n)).total == f_n_bounds(n)[1]
    for n in (3, 7, 11):
        family, note = f_n_upper_witness(n)
        assert family == "example3" and "mod 4" in note
        assert count_rainbow_bruteforce(example3(n)).total == f_n_bounds(n)[1]
    assert f_n_upper_witness(6)[0] is None
    assert f_n_upper_witness(5)[0] is None


def test_rt2_on_examples():
    for g in (example2(8), example3(7), example3(11)):
        v = bound_rt2(g)
        assert v.preconditions_met and v.satisfied
        assert v.observed == Fraction(v.parameters["upper"])


def test_color_union_examples(rainbow_k4):
    v = bound_color_union(rainbow_k4)
    assert v.preconditions_met
    assert v.bound == Fraction(1, 3)
    assert v.parameters["min_union"] == 5
    assert bound_color_union(rainbow_complete(8)).bound == 2
    w = bound_color_union(proper_complete_bipartite(4))
    assert not w.preconditions_met
    assert min_color_union(proper_complete_bipartite(4)) == 4


def test_main2_examples(rainbow_k4):
    v = bound_main2(rainbow_k4, 1)
    assert delta_k(rainbow_k4, 1) == 0
    assert (v.bound, v.observed, v.tight) == (3, 3, True)
    v = bound_main2(rainbow_complete(5), 2)
    assert (v.bound, v.observed) == (12, 12)


def test_main2_rejects_bad_k(rainbow_k4):
    with pytest.raises(ValueError):
        bound_main2(rainbow_k4, 0)
    with pytest.raises(ValueError):
        bound_main2(rainbow_k4, 3)


def test_topk_examples(rainbow_k4):
    v = bound_topk_simple(rainbow_complete(5), 2)
    assert (v.bound, v.observed) == (4, 12)
    v = bound_topk_simple(rainbow_k4, 1)
    assert (v.bound, v.observed) == (Fraction(3, 2), 3)


def test_theorem1_and_2():
    assert theorem1_verdict(rainbow_complete(3)).status == "checked"
    assert theorem1_verdict(proper_complete_bipartite(4)).status == "vacuous"
    t2 = theorem2_verdict(proper_complete_bipartite(4))
    assert t2.status == "vacuous" and t2.parameters["exceptional"] is True
    assert t2.observed == 0
    t2 = theorem2_verdict(example2(8))
    assert t2.status == "checked" and t2.parameters["exceptional"] is False


def test_theorem2_sweep():
    # delta^c >= n/2 with n >= 5, excluding the exceptional graph, forces a rainbow triangle
    rng = random.Random(5)
    for seed in range(200):
        n = rng.randint(5, 14)
        g = random_high_color_degree(n, (n + 1) // 2, seed=seed, colors=rng.randint(1, 6))
        assert theorem2_verdict(g).satisfied
        assert theorem1_verdict(g).satisfied


def test_proposition1_examples(mono_star3):
    assert proposition1_sum(mono_star3) == 0
    for seed in range(30):
        assert proposition1_sum(random_colored(15, 0.4, 3, seed=seed)) == 0


@given(colored_graphs(max_n=9, max_colors=3))
def test_proposition1_zero(g):
    assert proposition1_sum(g) == 0


@pytest.mark.parametrize(
    "n, k, value, in_range",
    [(200, 2, 10001, True), (50, 1, 625, True), (10, 2, 26, False), (450, 3, 50631, True)],
)
def test_turan_fk(n, k, value, in_range):
    assert turan_fk(n, k) == (value, in_range)


@pytest.mark.parametrize("n, k, expected", [(5, 1, 4), (7, 3, 21), (6, 0, 0), (10, 2, 17)])
def test_erdos_gallai(n, k, expected):
    assert erdos_gallai_bound(n, k) == expected


def test_erdos_gallai_domain():
    with pytest.raises(ValueError):
        erdos_gallai_bound(5, 3)


@pytest.mark.parametrize("n", range(4, 10))
def test_rainbow_complete_tight(n):
    g = rainbow_complete(n)
    assert bound_rt1(g).bound == bound_main1(g).bound == comb(n, 3)
