"""Graded homology groups of the magnitude complex.

At a fixed grade the block of degree n sits between the blocks of degrees
n+1 and n-1.  The group there is ker(d_n)/im(d_{n+1}); its free rank is
dim C_n - rank d_n - rank d_{n+1} and its torsion is read off the Smith
form of d_{n+1}.  Degree-0 and degree-1 boundaries are zero (the sum over
interior faces is empty), which gives the familiar degree-0 answer: the
free group on the points, concentrated at grade 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .chains import (
    ChainBasis,
    SparseIntMatrix,
    boundary_matrix,
    chain_cap,
    enumerate_chains,
    realizable_grades,
)
from .errors import GradeExplosion
from .metric import MetricSpace, strictly_between
from .snf import rational_rank, smith_normal_form


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group: free rank plus invariant factors > 1."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    @classmethod
    def zero(cls) -> "AbelianGroup":
        return cls(0, ())

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


@lru_cache(maxsize=8192)
def _cached_basis(space: MetricSpace, n: int, grade: Fraction, cap: int) -> ChainBasis:
    return enumerate_chains(space, n, grade, cap=cap)


def _boundary(space: MetricSpace, n: int, grade: Fraction, cap: int | None) -> SparseIntMatrix:
    """Boundary matrix out of degree n at the given grade (n >= 1)."""
    dom = _cached_basis(space, n, grade, cap)
    cod = _cached_basis(space, n - 1, grade, cap)
    return boundary_matrix(space, dom, cod)


def homology_group(
    space: MetricSpace,
    n: int,
    grade: Fraction | int,
    cap: int | None = None,
) -> AbelianGroup:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    # resolve the cap before touching the basis cache, so an env override
    # always takes effect and never aliases a differently-capped entry
    cap = chain_cap() if cap is None else cap
    grade = grade if isinstance(grade, Fraction) else Fraction(grade)
    dim = len(_cached_basis(space, n, grade, cap))
    if dim == 0:
        return AbelianGroup.zero()
    rank_out = 0
    if n >= 1:
        d_n = _boundary(space, n, grade, cap)
        if not d_n.is_zero():
            rank_out = rational_rank(d_n)
    snf_in = smith_normal_form(_boundary(space, n + 1, grade, cap))
    free = dim - rank_out - snf_in.rank
    torsion = tuple(f for f in snf_in.invariant_factors if f > 1)
    return AbelianGroup(free_rank=free, torsion=torsion)


@dataclass
class HomologyTable:
    """Graded table; keys absent from ``entries`` are zero groups."""

    n_max: int
    l_max: Fraction
    entries: dict[tuple[int, Fraction], AbelianGroup] = field(default_factory=dict)
    failures: dict[tuple[int, Fraction], str] = field(default_factory=dict)

    def group(self, n: int, grade: Fraction) -> AbelianGroup:
        return self.entries.get((n, grade), AbelianGroup.zero())


def _table_block(space: MetricSpace, n: int, grade: Fraction, cap: int | None):
    try:
        return (n, grade), homology_group(space, n, grade, cap=cap), None
    except GradeExplosion as exc:
        return (n, grade), None, str(exc)


def homology_table(
    space: MetricSpace,
    n_max: int,
    l_max: Fraction | int,
    cap: int | None = None,
    workers: int = 1,
) -> HomologyTable:
    """Groups at every degree <= n_max and realizable grade <= l_max.

    A GradeExplosion in one block is recorded in ``failures`` and does not
    abort the others.  Blocks are independent, so with ``workers > 1``
    they are computed in a process pool.
    """
    l_max = l_max if isinstance(l_max, Fraction) else Fraction(l_max)
    jobs = []
    for n in range(n_max + 1):
        for grade in sorted(realizable_grades(space, n, l_max)):
            jobs.append((n, grade))
    table = HomologyTable(n_max=n_max, l_max=l_max)
    if workers > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(_table_block, *zip(*[(space, n, g, cap) for n, g in jobs]))
            )
    else:
        results = [_table_block(space, n, g, cap) for n, g in jobs]
    for key, group, failure in results:
        if failure is not None:
            table.failures[key] = failure
        else:
            table.entries[key] = group
    return table


def h1_by_formula(space: MetricSpace) -> dict[Fraction, int]:
    """Independent degree-1 oracle.

    Rank of the degree-1 group per grade: the number of ordered pairs of
    distinct points at distance equal to the grade that admit no third
    point strictly between them.  Grades with count zero are omitted.
    """
    counts: dict[Fraction, int] = {}
    for a in space.points():
        for b in space.points():
            if a == b:
                continue
            if any(strictly_between(space, a, z, b) for z in space.points()):
                continue
            grade = space.dist[a][b]
            counts[grade] = counts.get(grade, 0) + 1
    return counts
