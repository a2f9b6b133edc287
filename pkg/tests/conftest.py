import pytest

from coreflex import Digraph
from coreflex import fixtures


@pytest.fixture
def d1():
    return fixtures.d1()


@pytest.fixture
def c3():
    return Digraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])


@pytest.fixture
def k2hat():
    return fixtures.complete_with_loops(2)


@pytest.fixture
def d_bad():
    return Digraph.from_edges([("u", "w"), ("x", "w"), ("u", "z")])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
