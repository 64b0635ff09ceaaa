from fractions import Fraction

import pytest

from maglab import (
    complete_graph,
    cycle_graph,
    graph_to_metric,
    k4_minus_edge,
    path_graph,
    rational_sample,
    standard_corpus,
)


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()


@pytest.fixture(scope="session")
def k2():
    return graph_to_metric(complete_graph(2))


@pytest.fixture(scope="session")
def k5():
    return graph_to_metric(complete_graph(5))


@pytest.fixture(scope="session")
def p3():
    return graph_to_metric(path_graph(3))


@pytest.fixture(scope="session")
def c5():
    return graph_to_metric(cycle_graph(5))


@pytest.fixture(scope="session")
def k4e():
    return graph_to_metric(k4_minus_edge())


@pytest.fixture(scope="session")
def half3():
    # the three-point line sample {0, 1/2, 1}
    return rational_sample([0, Fraction(1, 2), 1])


@pytest.fixture(scope="session")
def dyadic5():
    return rational_sample([0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1])
