"""Acceptance gate: the twelve exit criteria, at full scale.

Each test runs one criterion through the same claim functions the
``verify`` CLI uses, with the full corpus and full bounds (never the
quick-mode reductions), asserts the claim's exact verdict, and enforces
the stated wall-clock budget where one exists.  One pass/fail line is
printed per criterion; run with ``pytest -s tests/test_acceptance.py`` to
see them.
"""

import time

import pytest

from maglab.verify import (
    VerifyOptions,
    claim_boundary_squared,
    claim_crooked_cycle,
    claim_cutfree_equiv,
    claim_decomposition,
    claim_fill,
    claim_graph_theorems,
    claim_h0,
    claim_h1_formula,
    claim_k2_table,
    claim_named_classifications,
    claim_nonvanishing,
    claim_star_chain,
)

FULL = VerifyOptions(quick=False, exhaustive_graphs=5, six_vertex_cap=10_000)

CRITERIA = [
    (1, "h0 is free on the points for every corpus space", claim_h0, None),
    (2, "degree-1 groups match the independent pair-count oracle", claim_h1_formula, 5.0),
    (3, "boundaries square to zero and preserve the grading, n <= 5", claim_boundary_squared, 60.0),
    (4, "crooked iff cycle, and faces never cancel, exhaustively", claim_crooked_cycle, None),
    (5, "the two-point space shows Z^2 on the diagonal up to degree 5", claim_k2_table, 1.0),
    (6, "every space with >= 2 points has nonzero homology in degrees 1..3", claim_nonvanishing, 120.0),
    (7, "blockwise homology equals the direct computation on cut-free spaces", claim_decomposition, None),
    (8, "the named spaces carry their advertised classifications", claim_named_classifications, None),
    (9, "graph laws hold on all small connected graphs", claim_graph_theorems, 600.0),
    (10, "the filling construction inverts the boundary exactly", claim_fill, None),
    (11, "the insertion-property chain is never violated", claim_star_chain, None),
    (12, "cut-freeness equals straight-implies-globally-straight up to degree 5", claim_cutfree_equiv, None),
]


@pytest.mark.parametrize(
    "number,statement,fn,budget",
    CRITERIA,
    ids=[f"criterion-{num:02d}" for num, *_ in CRITERIA],
)
def test_acceptance_criterion(number, statement, fn, budget):
    start = time.perf_counter()
    ok, details = fn(FULL)
    elapsed = time.perf_counter() - start
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number:2d} [{status}] {statement} ({details}; {elapsed:.1f}s)")
    assert ok, f"criterion {number}: {details}"
    if budget is not None:
        assert elapsed < budget, f"criterion {number} took {elapsed:.1f}s, budget {budget}s"
