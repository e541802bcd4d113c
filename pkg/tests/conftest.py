import pytest

from ctdom.graph import build_graph, make_named_graph


@pytest.fixture
def p4():
    return make_named_graph("P4")


@pytest.fixture
def c6():
    return make_named_graph("C6")


def graph(n, edges):
    return build_graph(n, edges)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import ACCEPTANCE_LINES

    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
