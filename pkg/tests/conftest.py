from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from rainbowtri.graph import EdgeColoredGraph

# lines reported by test_acceptance.py, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def colored_graphs(draw, min_n: int = 0, max_n: int = 9, max_colors: int = 5) -> EdgeColoredGraph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    colors = draw(st.lists(st.integers(0, max_colors - 1), min_size=len(chosen), max_size=len(chosen)))
    return EdgeColoredGraph(n, [(u, v, c) for (u, v), c in zip(chosen, colors)])


def exhaustive_matching_number(n: int, edges) -> int:
    """Matching number by branching on the lowest unmatched vertex."""
    nbrs = [set() for _ in range(n)]
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)

    def best(free: frozenset) -> int:
        if not free:
            return 0
        v = min(free)
        rest = free - {v}
        result = best(rest)
        for u in nbrs[v] & rest:
            result = max(result, 1 + best(rest - {u}))
        return result

    return best(frozenset(range(n)))


@pytest.fixture
def rainbow_k4() -> EdgeColoredGraph:
    return EdgeColoredGraph(4, [(u, v, i) for i, (u, v) in enumerate(combinations(range(4), 2))])


@pytest.fixture
def mono_k3() -> EdgeColoredGraph:
    return EdgeColoredGraph(3, [(0, 1, 0), (1, 2, 0), (0, 2, 0)])


@pytest.fixture
def mono_star3() -> EdgeColoredGraph:
    return EdgeColoredGraph(4, [(0, 1, 7), (0, 2, 7), (0, 3, 7)])
