import numpy as np
import pytest

from beamplace.compat import CompatibilityGraph

ACCEPTANCE_LINES = []


def random_graph(n, p, rng):
    upper = np.triu(rng.random((n, n)) < p, 1)
    return CompatibilityGraph(upper | upper.T)


def cycle_graph(n):
    return CompatibilityGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture
def report_line():
    """Record a one-line criterion verdict, echoed in the terminal summary."""

    def _record(number, passed, detail):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
