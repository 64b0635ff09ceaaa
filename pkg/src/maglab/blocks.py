"""Block decomposition of the chain groups and the constructive filler.

Every simple chain determines a signature: the subsequence sitting at its
crooked indices, endpoints always included.  Chains at a fixed degree and
grade partition by signature, and on cut-free spaces the boundary maps
each block into the block of the same signature of one degree lower, so
the homology splits as a direct sum over signatures.  ``decompose``
reports whether that closure actually holds on a given instance; failure
is data (a certificate that the space is not cut-free there), not an
error.

``fill_cycle`` realizes a cycle supported in one block as an explicit
boundary.  Writing u for the signature, it picks the least support point
s0 above u[0] in the betweenness order toward u[1], picks a point r
strictly between u[0] and s0, and splices r into every support chain just
after its first vertex.  The result t satisfies boundary(t) == -cycle,
which is verified before returning.  On finite spaces the required r may
simply not exist; that is the expected NoMengerPoint outcome rather than
a failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chains import (
    ChainBasis,
    ChainVector,
    SimpleChain,
    boundary_of,
    enumerate_chains,
)
from .errors import (
    ClosureFailed,
    FillCheckFailed,
    MixedBlocks,
    NoMengerPoint,
    OrderNotTotal,
)
from .homology import AbelianGroup
from .metric import MetricSpace, PointSeq, is_between, strictly_between
from .chains import SparseIntMatrix, boundary_matrix, face
from .snf import divisibility_chain, rational_rank, smith_normal_form


@dataclass(frozen=True)
class BlockSignature:
    """Subsequence of a chain at its crooked indices, endpoints included."""

    u: PointSeq

    @property
    def k(self) -> int:
        return len(self.u) - 1


def block_signature(space: MetricSpace, chain: SimpleChain) -> BlockSignature:
    n = chain.degree
    crooked = [0] + [i for i in range(1, n) if chain.profile.crooked_at(i)] + ([n] if n else [])
    return BlockSignature(tuple(chain.seq[i] for i in crooked))


@dataclass
class BlockDecomposition:
    """Partition of one (degree, grade) basis by signature."""

    degree: int
    grade: Fraction
    blocks: dict[BlockSignature, ChainBasis]
    closure_ok: bool
    violations: list[tuple[PointSeq, int]] = field(default_factory=list)

    def total_size(self) -> int:
        return sum(len(b) for b in self.blocks.values())


def _sub_basis(degree: int, grade: Fraction, chains: list[SimpleChain]) -> ChainBasis:
    return ChainBasis(
        degree=degree,
        grade=grade,
        chains=tuple(chains),
        index={c.seq: i for i, c in enumerate(chains)},
    )


def decompose(
    space: MetricSpace,
    n: int,
    grade: Fraction | int,
    cap: int | None = None,
) -> BlockDecomposition:
    """Split the (n, grade) basis by signature and check boundary closure.

    ``closure_ok`` is True when every nonzero face of every chain keeps its
    signature; cut-free spaces always close, others may not.
    """
    grade = grade if isinstance(grade, Fraction) else Fraction(grade)
    basis = enumerate_chains(space, n, grade, cap=cap)
    grouped: dict[BlockSignature, list[SimpleChain]] = {}
    for chain in basis.chains:
        sig = block_signature(space, chain)
        if sig.k == 1:
            assert chain.is_straight()  # only the endpoints are crooked
        if n >= 1 and sig.k == n:
            assert chain.is_crooked()
        grouped.setdefault(sig, []).append(chain)
    blocks = {sig: _sub_basis(n, grade, chains) for sig, chains in grouped.items()}

    violations: list[tuple[PointSeq, int]] = []
    for sig, block in blocks.items():
        for chain in block.chains:
            for i in range(1, n):
                f = face(space, chain, i)
                if f is not None and block_signature(space, f) != sig:
                    violations.append((chain.seq, i))
    return BlockDecomposition(
        degree=n,
        grade=grade,
        blocks=blocks,
        closure_ok=not violations,
        violations=violations,
    )


def _block_boundary(
    space: MetricSpace,
    dom: ChainBasis,
    cod_chains: list[SimpleChain],
) -> SparseIntMatrix:
    cod = _sub_basis(dom.degree - 1, dom.grade, cod_chains)
    return boundary_matrix(space, dom, cod)


def block_homology_breakdown(
    space: MetricSpace,
    n: int,
    grade: Fraction | int,
    cap: int | None = None,
) -> dict[BlockSignature, AbelianGroup]:
    """Per-signature homology at (n, grade); requires boundary closure.

    Closure is needed at degree n (so kernels restrict to blocks) and at
    degree n+1 (so images do); either failure raises ClosureFailed.
    """
    grade = grade if isinstance(grade, Fraction) else Fraction(grade)
    dec_n = decompose(space, n, grade, cap=cap)
    if not dec_n.closure_ok:
        raise ClosureFailed(n, grade)
    dec_up = decompose(space, n + 1, grade, cap=cap)
    if not dec_up.closure_ok:
        raise ClosureFailed(n + 1, grade)
    dec_down = (
        decompose(space, n - 1, grade, cap=cap)
        if n >= 1
        else BlockDecomposition(n - 1, grade, {}, True)
    )

    out: dict[BlockSignature, AbelianGroup] = {}
    for sig, block in dec_n.blocks.items():
        rank_out = 0
        if n >= 1:
            down = dec_down.blocks.get(sig)
            d_n = _block_boundary(space, block, list(down.chains) if down else [])
            if not d_n.is_zero():
                rank_out = rational_rank(d_n)
        up = dec_up.blocks.get(sig)
        if up is not None:
            d_up = _block_boundary(space, up, list(block.chains))
            snf = smith_normal_form(d_up)
        else:
            snf = smith_normal_form(SparseIntMatrix(len(block), 0, {}))
        free = len(block) - rank_out - snf.rank
        torsion = tuple(f for f in snf.invariant_factors if f > 1)
        out[sig] = AbelianGroup(free_rank=free, torsion=torsion)
    return out


def homology_via_blocks(
    space: MetricSpace,
    n: int,
    grade: Fraction | int,
    cap: int | None = None,
) -> AbelianGroup:
    """Direct sum of the per-signature groups; equals the direct computation."""
    breakdown = block_homology_breakdown(space, n, grade, cap=cap)
    free = sum(g.free_rank for g in breakdown.values())
    torsion_parts: list[int] = []
    for g in breakdown.values():
        torsion_parts.extend(g.torsion)
    torsion = tuple(f for f in divisibility_chain(torsion_parts) if f > 1)
    return AbelianGroup(free_rank=free, torsion=torsion)


# ------------------------------------------------------------------- fill

@dataclass(frozen=True)
class FillContext:
    """The data behind one filling step."""

    cycle: ChainVector
    signature: BlockSignature
    support_points: tuple[int, ...]
    s0: int
    filler: int


def _support_chains(space: MetricSpace, vector: ChainVector) -> list[SimpleChain]:
    return [SimpleChain.build(space, seq) for seq in vector.support()]


def fill_context(space: MetricSpace, vector: ChainVector) -> FillContext:
    """Choose the minimal support point and the filler for ``fill_cycle``.

    The support must lie in a single block; the betweenness order from
    u[0] must be total on the support points; and a point strictly between
    u[0] and the minimal support point must exist in the space.  Among
    admissible fillers the one nearest u[0] is taken, ties broken by
    index, so outputs are reproducible.
    """
    chains = _support_chains(space, vector)
    signatures = {block_signature(space, c) for c in chains}
    if len(signatures) != 1:
        raise MixedBlocks(sorted(sig.u for sig in signatures))
    sig = signatures.pop()
    u0 = sig.u[0]

    support: set[int] = set()
    for chain in chains:
        support.update(chain.seq)
    support_pts = tuple(sorted(support))

    others = [z for z in support_pts if z != u0]
    for i, z in enumerate(others):
        for z2 in others[i + 1:]:
            if not (is_between(space, u0, z, z2) or is_between(space, u0, z2, z)):
                raise OrderNotTotal((z, z2))
    s0 = others[0]
    for z in others[1:]:
        if is_between(space, u0, z, s0):
            s0 = z

    candidates = [r for r in space.points() if strictly_between(space, u0, r, s0)]
    if not candidates:
        raise NoMengerPoint((u0, s0))
    filler = min(candidates, key=lambda r: (space.dist[u0][r], r))
    return FillContext(
        cycle=vector,
        signature=sig,
        support_points=support_pts,
        s0=s0,
        filler=filler,
    )


def fill_cycle(space: MetricSpace, vector: ChainVector) -> ChainVector:
    """A chain whose boundary is exactly minus the given cycle.

    Splices the filler just after the first vertex of every support chain.
    The identity boundary(result) == -vector is checked before returning;
    a failed check means a hypothesis was violated (for example the input
    was not a cycle, or the space is not cut-free along the support).
    """
    if vector.is_zero():
        return ChainVector.zero()
    if vector.degree < 1:
        raise ValueError("fill needs degree >= 1")
    ctx = fill_context(space, vector)
    r = ctx.filler
    lifted: dict[PointSeq, int] = {}
    for coeff, seq in vector.terms():
        if r == seq[1]:
            raise FillCheckFailed(f"filler {r} collides with support chain {seq}")
        lifted_seq = (seq[0], r) + seq[1:]
        lifted[lifted_seq] = lifted.get(lifted_seq, 0) + coeff
    result = ChainVector(vector.degree + 1, {s: c for s, c in lifted.items() if c})
    if boundary_of(space, result) != -vector:
        raise FillCheckFailed("constructed chain does not bound the input")
    return result
