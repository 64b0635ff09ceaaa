from fractions import Fraction

import pytest

from maglab import (
    Graph,
    complete_graph,
    cycle_graph,
    globally_straight,
    graph_to_metric,
    is_between,
    path_graph,
    seq_length,
    straight_from_to,
    straightness_profile,
    strictly_between,
    validate_metric,
)
from maglab.chains import iter_simple_chains
from maglab.errors import (
    AsymmetricDistance,
    DisconnectedGraph,
    EmptySequence,
    IndexOutOfRange,
    NegativeOrZeroOffDiagonal,
    NonzeroDiagonal,
    TriangleViolation,
)


def floyd_warshall(n, edges):
    """Independent shortest-path oracle for the graph metric."""
    INF = float("inf")
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


class TestValidateMetric:
    def test_two_point_space(self):
        s = validate_metric([[0, 1], [1, 0]])
        assert s.n_points == 2
        assert s.d(0, 1) == 1

    def test_asymmetric(self):
        with pytest.raises(AsymmetricDistance) as exc:
            validate_metric([[0, 1], [2, 0]])
        assert exc.value.indices == (0, 1)

    def test_triangle_violation(self):
        with pytest.raises(TriangleViolation) as exc:
            validate_metric([[0, 1, 3], [1, 0, 1], [3, 1, 0]])
        assert exc.value.indices == (0, 1, 2)

    def test_zero_off_diagonal(self):
        with pytest.raises(NegativeOrZeroOffDiagonal):
            validate_metric([[0, 0], [0, 0]])

    def test_nonzero_diagonal(self):
        with pytest.raises(NonzeroDiagonal):
            validate_metric([[1]])

    def test_not_square(self):
        with pytest.raises(ValueError):
            validate_metric([[0, 1]])

    def test_empty_and_singleton(self):
        assert validate_metric([]).n_points == 0
        assert validate_metric([[0]]).n_points == 1

    def test_rational_strings(self):
        s = validate_metric([["0", "1/2"], ["1/2", "0"]])
        assert s.d(0, 1) == Fraction(1, 2)

    def test_approximate_mode_tolerates_float_noise(self):
        eps = 1e-12
        m = [[0.0, 1.0, 2.0 + eps], [1.0, 0.0, 1.0], [2.0 + eps, 1.0 + eps, 0.0]]
        with pytest.raises(AsymmetricDistance):
            validate_metric(m)
        s = validate_metric(m, approximate=True)
        assert s.approximate
        assert s.d(1, 2) == s.d(2, 1)

    def test_exact_mode_not_flagged(self):
        assert not validate_metric([[0, 1], [1, 0]]).approximate


class TestGraphMetric:
    def test_k2(self):
        s = graph_to_metric(complete_graph(2))
        assert s.dist == ((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0)))

    def test_p3_distance(self, p3):
        assert p3.d(0, 2) == 2

    def test_c5_distance(self, c5):
        assert c5.d(0, 3) == 2

    @pytest.mark.parametrize("g", [path_graph(5), cycle_graph(6), complete_graph(4)])
    def test_matches_floyd_warshall(self, g):
        s = graph_to_metric(g)
        oracle = floyd_warshall(g.n, g.edges)
        for i in range(g.n):
            for j in range(g.n):
                assert s.d(i, j) == oracle[i][j]

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraph):
            Graph.from_edges(4, [(0, 1), (2, 3)])

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 0)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 1), (1, 0)])

    def test_output_is_valid_metric(self, corpus):
        for entry in corpus:
            if entry.graph is None:
                continue
            validate_metric([list(row) for row in entry.space.dist])


class TestBetweenness:
    def test_p3_between(self, p3):
        assert is_between(p3, 0, 1, 2)
        assert strictly_between(p3, 0, 1, 2)

    def test_endpoint_is_between(self, p3):
        for x in p3.points():
            for y in p3.points():
                assert is_between(p3, x, x, y)

    def test_c5_not_between(self, c5):
        assert not is_between(c5, 0, 2, 4)

    def test_strict_excludes_endpoints(self, p3):
        assert not strictly_between(p3, 0, 0, 2)
        assert not strictly_between(p3, 0, 2, 2)

    def test_outer_symmetry(self, corpus):
        for entry in corpus:
            s = entry.space
            for a in s.points():
                for b in s.points():
                    for c in s.points():
                        assert is_between(s, a, b, c) == is_between(s, c, b, a)


class TestStraightness:
    def test_half3_straight_at_1(self, half3):
        prof = straightness_profile(half3, (0, 1, 2))
        assert prof.straight_at(1)
        assert not prof.crooked_at(1)

    def test_k2_alternating_crooked(self, k2):
        prof = straightness_profile(k2, (0, 1, 0, 1))
        assert prof.crooked_at(1) and prof.crooked_at(2)
        assert prof.all_crooked

    def test_endpoints_both(self, k2):
        prof = straightness_profile(k2, (0, 1))
        assert prof.interior == ()
        assert prof.straight_at(0) and prof.crooked_at(0)
        assert prof.straight_at(1) and prof.crooked_at(1)

    def test_profile_index_bounds(self, k2):
        prof = straightness_profile(k2, (0, 1, 0))
        with pytest.raises(IndexOutOfRange):
            prof.straight_at(3)

    def test_straight_from_to_bounds(self, p3):
        with pytest.raises(IndexOutOfRange):
            straight_from_to(p3, (0, 1, 2), 2, 1)

    def test_seq_length(self, p3, k2):
        assert seq_length(p3, (0,)) == 0
        assert seq_length(p3, (0, 1, 2)) == 2
        assert seq_length(k2, (0, 1, 0, 1)) == 3
        with pytest.raises(EmptySequence):
            seq_length(p3, ())

    def test_globally_straight(self, p3, half3):
        assert globally_straight(p3, (0, 1, 2))
        assert globally_straight(half3, (0, 1, 2))
        assert not globally_straight(p3, (0, 1, 0))


# the four quadruple laws of the triangle-equality calculus, exhaustively
# on small spaces (repeats allowed; the laws are degenerate-safe)
QUAD_SPACES = ["p4", "c5", "half3"]


def _quad_space(name, p3, c5, half3):
    return {"p4": graph_to_metric(path_graph(4)), "c5": c5, "half3": half3}[name]


@pytest.mark.parametrize("name", QUAD_SPACES)
def test_quadruple_laws(name, p3, c5, half3):
    s = _quad_space(name, p3, c5, half3)
    pts = list(s.points())
    for x0 in pts:
        for x1 in pts:
            for x2 in pts:
                for x3 in pts:
                    q = (x0, x1, x2, x3)
                    if is_between(s, x0, x1, x2) and is_between(s, x0, x2, x3):
                        assert straight_from_to(s, q, 0, 3)
                        assert is_between(s, x1, x2, x3)
                    if is_between(s, x1, x2, x3) and is_between(s, x0, x1, x3):
                        assert straight_from_to(s, q, 0, 3)
                    if (
                        not is_between(s, x0, x1, x2)
                        and is_between(s, x1, x2, x3)
                    ):
                        assert not strictly_between(s, x0, x1, x3)
                    if (
                        is_between(s, x0, x1, x2)
                        and not is_between(s, x1, x2, x3)
                    ):
                        assert not strictly_between(s, x0, x2, x3)


def test_windows_preserve_straightness(c5, half3):
    for s in (c5, half3):
        for n in range(2, 5):
            for chain in iter_simple_chains(s, n):
                prof = chain.profile
                for i in range(n):
                    for j in range(i + 1, n + 1):
                        sub = straightness_profile(s, chain.seq[i:j + 1])
                        for k in range(1, j - i):
                            assert sub.straight_at(k) == prof.straight_at(i + k)


def test_globally_straight_hereditary(corpus):
    for entry in corpus:
        s = entry.space
        if s.n_points > 5:
            continue
        for n in range(2, 5):
            for chain in iter_simple_chains(s, n):
                if not globally_straight(s, chain.seq):
                    continue
                for i in range(n):
                    for j in range(i + 1, n + 1):
                        assert globally_straight(s, chain.seq[i:j + 1])


# randomized coverage beyond the corpus: shortest-path closures of random
# weights are metrics with plenty of equality triples

from hypothesis import given, settings
from hypothesis import strategies as st


@st.composite
def closure_metrics(draw):
    n = draw(st.integers(3, 6))
    weights = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            weights[i][j] = weights[j][i] = draw(st.integers(1, 9))
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if weights[i][k] + weights[k][j] < weights[i][j]:
                    weights[i][j] = weights[i][k] + weights[k][j]
    return validate_metric(weights)


@settings(max_examples=60, deadline=None)
@given(closure_metrics())
def test_random_metric_betweenness_symmetry(s):
    for a in s.points():
        for b in s.points():
            for c in s.points():
                assert is_between(s, a, b, c) == is_between(s, c, b, a)


@settings(max_examples=40, deadline=None)
@given(closure_metrics())
def test_random_metric_composition_law(s):
    pts = list(s.points())
    for x0 in pts:
        for x1 in pts:
            for x2 in pts:
                if not is_between(s, x0, x1, x2):
                    continue
                for x3 in pts:
                    if is_between(s, x0, x2, x3):
                        assert straight_from_to(s, (x0, x1, x2, x3), 0, 3)
