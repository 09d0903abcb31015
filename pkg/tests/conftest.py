import pytest

from splitcm.graphs import SimpleGraph
from splitcm.monomial import MonomialIdeal


def ideal(n, *gens):
    return MonomialIdeal.parse("\n".join([f"ring {n}", *gens]))


EXAMPLE_GENS = ("x1^2", "x1*x3", "x3^2", "x1*x2*x4", "x2*x3*x4", "x2^2*x4^2")

# bi-CM graph and its non bi-CM companion from the worked graph examples
G_EDGES = [(1, 2), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)]
H_EDGES = [(1, 4), (1, 5), (2, 4), (2, 5), (3, 5)]


@pytest.fixture
def example_ideal():
    return ideal(4, *EXAMPLE_GENS)


@pytest.fixture
def graph_g():
    return SimpleGraph.from_edges(5, G_EDGES)


@pytest.fixture
def graph_h():
    return SimpleGraph.from_edges(5, H_EDGES)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
