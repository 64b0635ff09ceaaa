"""Length-graded chain groups of a finite metric space.

A simple n-chain is a non-stuttering (n+1)-tuple of point indices; the
degree-n chain group is free abelian on them and splits by total length
into finite blocks.  The boundary deletes one interior vertex at a time,
with sign (-1)^i, and only where the sequence is straight; endpoint faces
are identically zero and never materialized.  Deleting a straight vertex
preserves total length, so each (degree, grade) block is an independent
complex and everything here is built per block.

Bases are enumerated in lexicographic order of the index tuples, so
repeated calls produce identical matrices.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import (
    GradeExplosion,
    IndexOutOfRange,
    MissingCodomainChain,
    MixedDegree,
)
from .metric import (
    MetricSpace,
    PointSeq,
    StraightnessProfile,
    seq_length,
    straightness_profile,
)

DEFAULT_CHAIN_CAP = 10**6
_CAP_ENV = "MAGLAB_CHAIN_CAP"


def chain_cap() -> int:
    """Basis-size cap; override with the MAGLAB_CHAIN_CAP env variable."""
    raw = os.environ.get(_CAP_ENV)
    if raw is None:
        return DEFAULT_CHAIN_CAP
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{_CAP_ENV} must be positive")
    return value


@dataclass(frozen=True)
class SimpleChain:
    """A non-stuttering point sequence with cached length and profile."""

    seq: PointSeq
    length: Fraction
    profile: StraightnessProfile

    @classmethod
    def build(cls, space: MetricSpace, seq: Sequence[int]) -> "SimpleChain":
        seq = tuple(seq)
        for a, b in zip(seq, seq[1:]):
            if a == b:
                raise ValueError(f"stuttering sequence {seq}")
        return cls(
            seq=seq,
            length=seq_length(space, seq),
            profile=straightness_profile(space, seq),
        )

    @property
    def degree(self) -> int:
        return len(self.seq) - 1

    def is_crooked(self) -> bool:
        return self.profile.all_crooked

    def is_straight(self) -> bool:
        return self.profile.all_straight


@dataclass
class ChainBasis:
    """Ordered basis of the simple chains at one (degree, grade) block."""

    degree: int
    grade: Fraction
    chains: tuple[SimpleChain, ...]
    index: dict[PointSeq, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.chains)


def _make_basis(degree: int, grade: Fraction, chains: list[SimpleChain]) -> ChainBasis:
    return ChainBasis(
        degree=degree,
        grade=grade,
        chains=tuple(chains),
        index={c.seq: i for i, c in enumerate(chains)},
    )


def enumerate_chains(
    space: MetricSpace,
    n: int,
    grade: Fraction | int,
    cap: int | None = None,
) -> ChainBasis:
    """All simple n-chains of total length exactly ``grade``, in lex order.

    Backtracking over index tuples; a partial sum plus (remaining steps)
    times the minimum positive distance already exceeding the grade prunes
    the branch, and every step keeps the running sum <= grade since
    distances are positive.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    grade = grade if isinstance(grade, Fraction) else Fraction(grade)
    if grade < 0:
        raise ValueError("grade must be nonnegative")
    cap = chain_cap() if cap is None else cap

    npts = space.n_points
    if npts == 0:
        return _make_basis(n, grade, [])
    if n == 0:
        if grade != 0:
            return _make_basis(n, grade, [])
        if npts > cap:
            raise GradeExplosion(f"C_0 at grade 0 ({npts} chains)", cap)
        return _make_basis(n, grade, [SimpleChain.build(space, (p,)) for p in space.points()])

    min_step = space.min_positive_distance()
    if min_step is None or min_step * n > grade:
        return _make_basis(n, grade, [])

    out: list[SimpleChain] = []
    seq = [0] * (n + 1)

    def extend(pos: int, acc: Fraction) -> None:
        if pos == n + 1:
            if acc == grade:
                if len(out) >= cap:
                    raise GradeExplosion(f"C_{n} at grade {grade}", cap)
                out.append(SimpleChain.build(space, tuple(seq)))
            return
        remaining = n + 1 - pos - 1
        prev = seq[pos - 1] if pos else None
        for p in range(npts):
            if p == prev:
                continue
            step = Fraction(0) if prev is None else space.dist[prev][p]
            nxt = acc + step
            if nxt + remaining * min_step > grade:
                continue
            seq[pos] = p
            extend(pos + 1, nxt)

    extend(0, Fraction(0))
    return _make_basis(n, grade, out)


def realizable_grades(
    space: MetricSpace,
    n: int,
    l_max: Fraction | int | None = None,
) -> set[Fraction]:
    """Lengths realized by some simple n-chain, capped at ``l_max``.

    Dynamic programming over (endpoint, set of reachable lengths): a step
    from v to w != v extends every length by d(v, w).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if l_max is not None:
        l_max = l_max if isinstance(l_max, Fraction) else Fraction(l_max)
        if l_max < 0:
            return set()
    if space.n_points == 0:
        return set()
    reach: list[set[Fraction]] = [{Fraction(0)} for _ in space.points()]
    for _ in range(n):
        nxt: list[set[Fraction]] = [set() for _ in space.points()]
        for v in space.points():
            if not reach[v]:
                continue
            for w in space.points():
                if w == v:
                    continue
                step = space.dist[v][w]
                for ln in reach[v]:
                    total = ln + step
                    if l_max is None or total <= l_max:
                        nxt[w].add(total)
        reach = nxt
    grades: set[Fraction] = set()
    for lengths in reach:
        grades |= lengths
    if l_max is not None:
        grades = {g for g in grades if g <= l_max}
    return grades


def iter_simple_chains(space: MetricSpace, n: int) -> Iterator[SimpleChain]:
    """All simple n-chains regardless of grade, in lex order."""
    npts = space.n_points
    if npts == 0 or (n >= 1 and npts < 2):
        return
    seq = [0] * (n + 1)

    def extend(pos: int) -> Iterator[SimpleChain]:
        if pos == n + 1:
            yield SimpleChain.build(space, tuple(seq))
            return
        prev = seq[pos - 1] if pos else None
        for p in range(npts):
            if p == prev:
                continue
            seq[pos] = p
            yield from extend(pos + 1)

    yield from extend(0)


# ---------------------------------------------------------------- faces --

def face(space: MetricSpace, chain: SimpleChain, i: int) -> SimpleChain | None:
    """The i-th face: delete vertex i where the chain is straight, else zero.

    Faces at the endpoints are zero by convention.  A nonzero face is
    automatically non-stuttering and has the same total length.
    """
    n = chain.degree
    if not (0 <= i <= n):
        raise IndexOutOfRange(i, f"0..{n}")
    if i == 0 or i == n:
        return None
    if chain.profile.crooked_at(i):
        return None
    result = SimpleChain.build(space, chain.seq[:i] + chain.seq[i + 1:])
    assert result.length == chain.length  # the boundary preserves the grading
    return result


# -------------------------------------------------------- sparse matrices --

@dataclass
class SparseIntMatrix:
    """Integer matrix stored as {(row, col): value} with no zero entries."""

    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @classmethod
    def from_entries(cls, rows: int, cols: int, items) -> "SparseIntMatrix":
        entries = {}
        for r, c, v in items:
            if v:
                entries[(r, c)] = entries.get((r, c), 0) + v
        return cls(rows, cols, {k: v for k, v in entries.items() if v})

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def matmul(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_col: dict[int, list[tuple[int, int]]] = {}
        for (r, k), v in self.entries.items():
            by_col.setdefault(k, []).append((r, v))
        out: dict[tuple[int, int], int] = {}
        for (k, c), w in other.entries.items():
            for r, v in by_col.get(k, ()):
                key = (r, c)
                out[key] = out.get(key, 0) + v * w
        return SparseIntMatrix(self.rows, other.cols, {k: v for k, v in out.items() if v})

    def dump_triplets(self) -> str:
        """Plain-text sparse dump: "rows cols nnz" then sorted "r c v" lines."""
        lines = [f"{self.rows} {self.cols} {self.nnz}"]
        for (r, c) in sorted(self.entries):
            lines.append(f"{r} {c} {self.entries[(r, c)]}")
        return "\n".join(lines) + "\n"


def boundary_matrix(
    space: MetricSpace,
    dom: ChainBasis,
    cod: ChainBasis,
) -> SparseIntMatrix:
    """Matrix of the boundary from ``dom`` (degree n) into ``cod`` (degree n-1).

    Column j holds the alternating sum of the faces of the j-th domain
    chain, signs (-1)^i with i the deleted index.
    """
    if cod.degree != dom.degree - 1 or cod.grade != dom.grade:
        raise ValueError("codomain basis must sit one degree below at the same grade")
    n = dom.degree
    entries: dict[tuple[int, int], int] = {}
    for j, chain in enumerate(dom.chains):
        for i in range(1, n):
            f = face(space, chain, i)
            if f is None:
                continue
            row = cod.index.get(f.seq)
            if row is None:
                raise MissingCodomainChain(f.seq)
            key = (row, j)
            entries[key] = entries.get(key, 0) + (-1) ** i
    return SparseIntMatrix(len(cod), len(dom), {k: v for k, v in entries.items() if v})


# ------------------------------------------------------------ chain vectors

class ChainVector:
    """Finitely supported integer combination of simple chains of one degree."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int | None = None, coeffs: dict[PointSeq, int] | None = None):
        self.degree = degree
        self.coeffs: dict[PointSeq, int] = {}
        if coeffs:
            for seq, c in coeffs.items():
                if c:
                    if len(seq) - 1 != degree:
                        raise MixedDegree()
                    self.coeffs[tuple(seq)] = c
        if not self.coeffs:
            self.degree = None

    @classmethod
    def zero(cls) -> "ChainVector":
        return cls()

    @classmethod
    def from_terms(cls, space: MetricSpace, terms) -> "ChainVector":
        """Build from (coefficient, index sequence) pairs, validating each chain."""
        degree = None
        coeffs: dict[PointSeq, int] = {}
        for coeff, seq in terms:
            chain = SimpleChain.build(space, seq)
            if degree is None:
                degree = chain.degree
            elif chain.degree != degree:
                raise MixedDegree()
            coeffs[chain.seq] = coeffs.get(chain.seq, 0) + int(coeff)
        coeffs = {k: v for k, v in coeffs.items() if v}
        return cls(degree if coeffs else None, coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> list[PointSeq]:
        return sorted(self.coeffs)

    def terms(self) -> list[tuple[int, PointSeq]]:
        return [(self.coeffs[s], s) for s in sorted(self.coeffs)]

    def __neg__(self) -> "ChainVector":
        return ChainVector(self.degree, {s: -c for s, c in self.coeffs.items()})

    def __add__(self, other: "ChainVector") -> "ChainVector":
        if self.is_zero():
            return ChainVector(other.degree, dict(other.coeffs))
        if other.is_zero():
            return ChainVector(self.degree, dict(self.coeffs))
        if self.degree != other.degree:
            raise MixedDegree()
        merged = dict(self.coeffs)
        for s, c in other.coeffs.items():
            merged[s] = merged.get(s, 0) + c
        return ChainVector(self.degree, {s: c for s, c in merged.items() if c})

    def __sub__(self, other: "ChainVector") -> "ChainVector":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainVector):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        if self.is_zero():
            return "ChainVector(0)"
        parts = [f"{c:+d}*{s}" for c, s in self.terms()]
        return f"ChainVector({' '.join(parts)})"


def boundary_of(space: MetricSpace, vector: ChainVector) -> ChainVector:
    """Boundary of a homogeneous chain vector."""
    if vector.is_zero():
        return ChainVector.zero()
    n = vector.degree
    out: dict[PointSeq, int] = {}
    for seq, coeff in vector.coeffs.items():
        chain = SimpleChain.build(space, seq)
        for i in range(1, n):
            f = face(space, chain, i)
            if f is None:
                continue
            out[f.seq] = out.get(f.seq, 0) + coeff * (-1) ** i
    out = {s: c for s, c in out.items() if c}
    return ChainVector(n - 1 if out else None, out)


def is_cycle(space: MetricSpace, vector: ChainVector) -> bool:
    return boundary_of(space, vector).is_zero()
