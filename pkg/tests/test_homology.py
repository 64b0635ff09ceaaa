from fractions import Fraction

from maglab import (
    AbelianGroup,
    enumerate_chains,
    h1_by_formula,
    homology_group,
    homology_table,
    realizable_grades,
    validate_metric,
)


class TestAbelianGroup:
    def test_str(self):
        assert str(AbelianGroup(0)) == "0"
        assert str(AbelianGroup(1)) == "Z"
        assert str(AbelianGroup(4)) == "Z^4"
        assert str(AbelianGroup(2, (2, 6))) == "Z^2 + Z/2 + Z/6"

    def test_zero(self):
        assert AbelianGroup.zero().is_zero
        assert not AbelianGroup(1).is_zero
        assert not AbelianGroup(0, (2,)).is_zero


class TestDegreeZero:
    def test_p3(self, p3):
        assert homology_group(p3, 0, 0) == AbelianGroup(3)

    def test_every_corpus_space(self, corpus):
        for entry in corpus:
            assert homology_group(entry.space, 0, 0) == AbelianGroup(entry.space.n_points)

    def test_positive_grade_vanishes(self, p3):
        assert homology_group(p3, 0, 1).is_zero


class TestDegreeOne:
    def test_p3_formula(self, p3):
        assert h1_by_formula(p3) == {Fraction(1): 4}

    def test_k5_formula(self, k5):
        assert h1_by_formula(k5) == {Fraction(1): 20}

    def test_singleton_formula(self):
        assert h1_by_formula(validate_metric([[0]])) == {}

    def test_p3_groups(self, p3):
        assert homology_group(p3, 1, 1) == AbelianGroup(4)
        assert homology_group(p3, 1, 2) == AbelianGroup(0)

    def test_oracle_agreement(self, corpus):
        for entry in corpus:
            s = entry.space
            formula = h1_by_formula(s)
            for grade in realizable_grades(s, 1) | set(formula):
                assert homology_group(s, 1, grade) == AbelianGroup(formula.get(grade, 0))


class TestHigherDegrees:
    def test_h2_k2(self, k2):
        assert homology_group(k2, 2, 2) == AbelianGroup(2)

    def test_k2_diagonal(self, k2):
        for n in range(6):
            assert homology_group(k2, n, n) == AbelianGroup(2)

    def test_half3_degree2_grade1(self, half3):
        # the two straight 2-chains die against the boundary; the four
        # crooked ones are unbounded cycles (degree 3 is empty at grade 1)
        assert homology_group(half3, 2, 1) == AbelianGroup(4)


class TestTable:
    def test_singleton(self):
        s = validate_metric([[0]])
        table = homology_table(s, 3, 3)
        assert table.entries == {(0, Fraction(0)): AbelianGroup(1)}
        assert table.group(2, Fraction(1)).is_zero

    def test_k2(self, k2):
        table = homology_table(k2, 3, 3)
        assert table.entries == {
            (0, Fraction(0)): AbelianGroup(2),
            (1, Fraction(1)): AbelianGroup(2),
            (2, Fraction(2)): AbelianGroup(2),
            (3, Fraction(3)): AbelianGroup(2),
        }

    def test_p3_includes_computed_zero(self, p3):
        table = homology_table(p3, 1, 2)
        assert table.entries[(0, Fraction(0))] == AbelianGroup(3)
        assert table.entries[(1, Fraction(1))] == AbelianGroup(4)
        assert table.entries[(1, Fraction(2))] == AbelianGroup(0)

    def test_cap_failure_is_per_block(self, k5):
        table = homology_table(k5, 2, 2, cap=30)
        assert table.failures  # some blocks blow the cap
        assert table.entries[(0, Fraction(0))] == AbelianGroup(5)

    def test_parallel_matches_serial(self, p3):
        serial = homology_table(p3, 2, 4)
        parallel = homology_table(p3, 2, 4, workers=2)
        assert serial.entries == parallel.entries
        assert serial.failures == parallel.failures


def test_euler_consistency_k2_and_singleton(k2):
    spaces = [k2, validate_metric([[0]])]
    for s in spaces:
        table = homology_table(s, 5, 5)
        for grade in {g for (_, g) in table.entries}:
            chi_dim = sum(
                (-1) ** n * len(enumerate_chains(s, n, grade)) for n in range(6)
            )
            chi_rank = sum((-1) ** n * table.group(n, grade).free_rank for n in range(6))
            assert chi_dim == chi_rank


def test_nonvanishing_examples(c5, half3):
    # the closest-pair alternating chain pins a nonzero class at grade n*delta
    for s in (c5, half3):
        delta = s.min_positive_distance()
        for n in (1, 2, 3):
            grades = sorted(realizable_grades(s, n, n * delta))
            assert any(not homology_group(s, n, g).is_zero for g in grades)
