from __future__ import annotations

import os

from hypothesis import HealthCheck, settings, strategies as st

from vmchain.graph import Graph
from vmchain.verify.generate import pairs

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("quick", max_examples=30, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, (1 << len(pairs(n))) - 1))
    rows = [0] * n
    for k, (i, j) in enumerate(pairs(n)):
        if (code >> k) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


@st.composite
def graph_and_set(draw, min_n: int = 0, max_n: int = 9):
    g = draw(graphs(min_n, max_n))
    return g, draw(st.integers(0, g.vertex_mask))


@st.composite
def graph_and_vertex(draw, min_n: int = 1, max_n: int = 9):
    g = draw(graphs(max(min_n, 1), max_n))
    return g, draw(st.integers(0, g.n - 1))


ACCEPTANCE_LINES: list[str] = []


def report_criterion(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
