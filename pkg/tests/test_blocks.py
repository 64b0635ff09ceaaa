from fractions import Fraction

import pytest

from maglab import (
    AbelianGroup,
    ChainVector,
    SimpleChain,
    block_homology_breakdown,
    block_signature,
    boundary_of,
    decompose,
    enumerate_chains,
    fill_context,
    fill_cycle,
    homology_group,
    homology_via_blocks,
    rational_sample,
    realizable_grades,
)
from maglab.errors import (
    ClosureFailed,
    FillCheckFailed,
    MixedBlocks,
    NoMengerPoint,
    OrderNotTotal,
)


class TestSignature:
    def test_straight_chain(self, half3):
        chain = SimpleChain.build(half3, (0, 1, 2))  # points 0, 1/2, 1
        sig = block_signature(half3, chain)
        assert sig.u == (0, 2)
        assert sig.k == 1

    def test_fully_crooked(self, k2):
        chain = SimpleChain.build(k2, (0, 1, 0, 1))
        sig = block_signature(k2, chain)
        assert sig.u == (0, 1, 0, 1)
        assert sig.k == 3

    def test_mixed(self, half3):
        # (0, 1/2, 1, 1/2): straight at 1, crooked at 2
        chain = SimpleChain.build(half3, (0, 1, 2, 1))
        sig = block_signature(half3, chain)
        assert sig.u == (0, 2, 1)
        assert sig.k == 2

    def test_degree_zero(self, p3):
        chain = SimpleChain.build(p3, (1,))
        sig = block_signature(p3, chain)
        assert sig.u == (1,)
        assert sig.k == 0

    def test_degree_one(self, p3):
        chain = SimpleChain.build(p3, (0, 1))
        assert block_signature(p3, chain).u == (0, 1)


class TestDecompose:
    def test_p3_closure(self, p3):
        dec = decompose(p3, 2, 2)
        assert dec.closure_ok
        assert dec.violations == []

    def test_c5_closure_violation(self, c5):
        dec = decompose(c5, 3, 3)
        assert not dec.closure_ok
        assert dec.violations  # a (chain, index) certificate
        seq, i = dec.violations[0]
        assert 1 <= i <= 2

    def test_noncutfree_always_violates_at_witness(self, corpus):
        # a cut-freeness witness (x0, x1, x2, x3) is straight at both
        # interior indices, so it has the two-point signature, while its
        # middle face is crooked; closure must fail at degree 3 on the
        # witness grade
        from maglab import check_cut_free, seq_length

        for entry in corpus:
            s = entry.space
            verdict = check_cut_free(s)
            if verdict.holds:
                continue
            grade = seq_length(s, verdict.witness)
            dec = decompose(s, 3, grade)
            assert not dec.closure_ok
            assert (verdict.witness, 1) in dec.violations or any(
                v[0] == verdict.witness for v in dec.violations
            )

    def test_degree_one_blocks_are_singletons(self, c5):
        dec = decompose(c5, 1, 1)
        assert dec.closure_ok
        assert all(len(b) == 1 for b in dec.blocks.values())

    def test_partition(self, corpus):
        for entry in corpus:
            s = entry.space
            if s.n_points > 5:
                continue
            for n in range(0, 4):
                for grade in sorted(realizable_grades(s, n)):
                    dec = decompose(s, n, grade)
                    basis = enumerate_chains(s, n, grade)
                    assert dec.total_size() == len(basis)
                    seen = set()
                    for sig, block in dec.blocks.items():
                        for c in block.chains:
                            assert block_signature(s, c) == sig
                            assert c.seq not in seen
                            seen.add(c.seq)


class TestBlockHomology:
    def test_p3_matches_direct(self, p3):
        direct = homology_group(p3, 2, 2)
        assert homology_via_blocks(p3, 2, 2) == direct
        # four crooked 2-chains survive: nothing exists one degree up at
        # this grade to bound them
        assert direct == AbelianGroup(4)

    def test_k2_degree3(self, k2):
        assert homology_via_blocks(k2, 3, 3) == AbelianGroup(2)
        dec = decompose(k2, 3, 3)
        assert len(dec.blocks) == 2
        assert all(len(b) == 1 for b in dec.blocks.values())

    def test_half3_straight_block_dies(self, half3):
        breakdown = block_homology_breakdown(half3, 2, 1)
        from maglab import BlockSignature

        # the single straight chain (0, 1/2, 1) has a nonzero boundary
        assert breakdown[BlockSignature((0, 2))].is_zero

    def test_closure_failed(self, c5):
        with pytest.raises(ClosureFailed):
            homology_via_blocks(c5, 3, 3)

    def test_degree_zero(self, p3):
        assert homology_via_blocks(p3, 0, 0) == AbelianGroup(3)
        breakdown = block_homology_breakdown(p3, 0, 0)
        assert len(breakdown) == 3
        assert all(g == AbelianGroup(1) for g in breakdown.values())

    def test_oracle_on_cut_free_spaces(self, corpus):
        from maglab import check_cut_free

        for entry in corpus:
            s = entry.space
            if s.n_points > 5 or not check_cut_free(s).holds:
                continue
            for n in range(0, 4):
                for grade in sorted(realizable_grades(s, n)):
                    assert homology_via_blocks(s, n, grade) == homology_group(s, n, grade)


class TestFill:
    def test_half3_fixed_instance(self, half3):
        a = ChainVector.from_terms(half3, [(1, (0, 2, 0, 2))])
        filled = fill_cycle(half3, a)
        assert filled.terms() == [(1, (0, 1, 2, 0, 2))]
        assert boundary_of(half3, filled) == -a

    def test_context_choices(self, half3):
        a = ChainVector.from_terms(half3, [(1, (0, 2, 0, 2))])
        ctx = fill_context(half3, a)
        assert ctx.signature.u == (0, 2, 0, 2)
        assert ctx.support_points == (0, 2)
        assert ctx.s0 == 2
        assert ctx.filler == 1

    def test_k2_no_menger_point(self, k2):
        a = ChainVector.from_terms(k2, [(1, (0, 1, 0))])
        with pytest.raises(NoMengerPoint):
            fill_cycle(k2, a)

    def test_zero_fills_to_zero(self, half3):
        assert fill_cycle(half3, ChainVector.zero()).is_zero()

    def test_mixed_blocks(self, half3):
        a = ChainVector.from_terms(half3, [(1, (0, 2, 0)), (1, (2, 0, 2))])
        with pytest.raises(MixedBlocks):
            fill_cycle(half3, a)

    def test_order_not_total(self):
        line = rational_sample([-1, 0, 1])  # indices 0, 1, 2
        # fully crooked cycle visiting both sides of its start point
        a = ChainVector.from_terms(line, [(1, (1, 2, 0, 2))])
        with pytest.raises(OrderNotTotal):
            fill_cycle(line, a)

    def test_non_cycle_fails_check(self):
        line = rational_sample([0, Fraction(1, 4), Fraction(1, 2), 1])
        a = ChainVector.from_terms(line, [(1, (0, 2, 3))])  # straight, not a cycle
        with pytest.raises(FillCheckFailed):
            fill_cycle(line, a)

    def test_multi_chain_cycle_cross_terms_cancel(self):
        # two distinct straight chains with the same signature (0, 3/4),
        # combined into a kernel element; the lifted chains produce cross
        # faces that must cancel exactly for the boundary identity to hold
        line = rational_sample([0, Fraction(1, 8), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)])
        a = ChainVector.from_terms(line, [(1, (0, 2, 4)), (-1, (0, 3, 4))])
        assert boundary_of(line, a).is_zero()
        ctx = fill_context(line, a)
        assert ctx.signature.u == (0, 4)
        assert ctx.s0 == 2       # 1/4 is the least support point above 0
        assert ctx.filler == 1   # 1/8 sits strictly between
        filled = fill_cycle(line, a)
        assert filled.terms() == [(1, (0, 1, 2, 4)), (-1, (0, 1, 3, 4))]
        assert boundary_of(line, filled) == -a

    def test_higher_degree_alternating(self, half3):
        a = ChainVector.from_terms(half3, [(1, (0, 2, 0, 2, 0))])
        filled = fill_cycle(half3, a)
        assert filled.terms() == [(1, (0, 1, 2, 0, 2, 0))]
        assert boundary_of(half3, filled) == -a

    def test_scaled_cycle(self, half3):
        a = ChainVector.from_terms(half3, [(-3, (0, 2, 0, 2))])
        filled = fill_cycle(half3, a)
        assert boundary_of(half3, filled) == -a

    def test_random_line_cycles_fill(self):
        import random

        from maglab import random_rational_sample
        from maglab.predicates import iter_crooked_chains

        rng = random.Random(7)
        filled_count = 0
        for _ in range(8):
            sample = random_rational_sample(5, rng)
            for n in (2, 3):
                for seq in iter_crooked_chains(sample, n):
                    vec = ChainVector.from_terms(sample, [(1, seq)])
                    try:
                        lifted = fill_cycle(sample, vec)
                    except (NoMengerPoint, OrderNotTotal):
                        continue
                    assert boundary_of(sample, lifted) == -vec
                    filled_count += 1
        assert filled_count >= 8
