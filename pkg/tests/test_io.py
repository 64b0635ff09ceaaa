from fractions import Fraction

import pytest

from maglab import ChainVector, homology_table
from maglab.errors import FileFormatError, TriangleViolation
from maglab.io import (
    dump_chain_vector,
    dump_graph_file,
    dump_matrix_csv,
    load_chain_vector,
    load_graph_file,
    load_matrix_csv,
    table_records,
)


MATRIX_TEXT = "a,b,c\n0,1/2,1\n1/2,0,1/2\n1,1/2,0\n"

GRAPH_TEXT = "3\n0 1\n1 2\n"


class TestMatrixCsv:
    def test_round_trip(self):
        space = load_matrix_csv(MATRIX_TEXT)
        assert space.labels == ("a", "b", "c")
        assert space.d(0, 1) == Fraction(1, 2)
        assert dump_matrix_csv(space) == MATRIX_TEXT

    def test_row_count_mismatch(self):
        with pytest.raises(FileFormatError):
            load_matrix_csv("a,b\n0,1\n")

    def test_cell_count_mismatch(self):
        with pytest.raises(FileFormatError) as exc:
            load_matrix_csv("a,b\n0,1\n1\n")
        assert exc.value.line == 3

    def test_bad_rational(self):
        with pytest.raises(FileFormatError) as exc:
            load_matrix_csv("a,b\n0,x\nx,0\n")
        assert exc.value.line == 2

    def test_metric_errors_propagate(self):
        with pytest.raises(TriangleViolation):
            load_matrix_csv("a,b,c\n0,1,3\n1,0,1\n3,1,0\n")

    def test_empty(self):
        with pytest.raises(FileFormatError):
            load_matrix_csv("")


class TestGraphFile:
    def test_round_trip(self):
        g = load_graph_file(GRAPH_TEXT)
        assert g.n == 3
        assert dump_graph_file(g) == GRAPH_TEXT

    def test_bad_count(self):
        with pytest.raises(FileFormatError):
            load_graph_file("three\n0 1\n")

    def test_bad_edge_line(self):
        with pytest.raises(FileFormatError) as exc:
            load_graph_file("2\n0 1 2\n")
        assert exc.value.line == 2

    def test_blank_lines_skipped(self):
        g = load_graph_file("3\n\n0 1\n\n1 2\n")
        assert len(g.edges) == 2


class TestChainVectorJson:
    def test_round_trip(self, k2):
        v = ChainVector.from_terms(k2, [(2, (0, 1, 0)), (-1, (1, 0, 1))])
        text = dump_chain_vector(v)
        assert load_chain_vector(k2, text) == v

    def test_zero(self, k2):
        text = dump_chain_vector(ChainVector.zero())
        assert load_chain_vector(k2, text).is_zero()


def test_table_records(p3):
    table = homology_table(p3, 1, 2)
    records = table_records(table)
    assert {"n": 0, "l_num": 0, "l_den": 1, "rank": 3, "torsion": []} in records
    assert {"n": 1, "l_num": 1, "l_den": 1, "rank": 4, "torsion": []} in records
    assert {"n": 1, "l_num": 2, "l_den": 1, "rank": 0, "torsion": []} in records
