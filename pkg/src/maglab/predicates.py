"""Decidable metric predicates with explicit witnesses.

Every checker scans its defining quantifier exhaustively (quartic in the
point count at worst) and stops at the first counterexample, which it
returns as the witness.  Corpus spaces stay small enough that exhaustion
is cheap and verdicts are definitive; nothing here samples.

Insertion properties quantify over crooked configurations and ask for a
point z that splices in while keeping the surrounding crookedness flags;
the candidate z ranges over the whole space, including points already in
the configuration, since reuse is not excluded by the property.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from .chains import chain_cap
from .errors import GradeExplosion, OrderAxiomViolation, UnknownPredicate
from .metric import (
    Graph,
    MetricSpace,
    PointSeq,
    is_between,
    strictly_between,
)


@dataclass(frozen=True)
class Verdict:
    """Boolean result; a failed check always carries a witness tuple."""

    holds: bool
    witness: PointSeq | None = None
    tag: str | None = None

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        if self.holds:
            return "true"
        return f"false  witness={self.witness} ({self.tag})"


# ------------------------------------------------------------------ Menger

def check_menger(space: MetricSpace) -> Verdict:
    """Between any two distinct points there is a third, strictly."""
    for a in space.points():
        for b in range(a + 1, space.n_points):
            if not any(strictly_between(space, a, z, b) for z in space.points()):
                return Verdict(False, (a, b), "pair with no strict between point")
    return Verdict(True)


def check_strongly_menger(space: MetricSpace, alpha: Fraction) -> Verdict:
    """Each ordered pair (x, y) has z strictly between with d(x, z) >= alpha*d(x, y).

    The insertion point is required to differ from both endpoints; with
    z = y admitted the condition would hold vacuously.
    """
    alpha = alpha if isinstance(alpha, Fraction) else Fraction(alpha)
    if not (0 < alpha <= 1):
        raise ValueError("alpha must satisfy 0 < alpha <= 1")
    for x in space.points():
        for y in space.points():
            if x == y:
                continue
            bound = alpha * space.dist[x][y]
            if not any(
                strictly_between(space, x, z, y) and space.dist[x][z] >= bound
                for z in space.points()
            ):
                return Verdict(False, (x, y), "pair with no deep between point")
    return Verdict(True)


# ---------------------------------------------------------------- cut-free

def check_cut_free(space: MetricSpace) -> Verdict:
    """Two overlapping straight windows along a quadruple force the skipped one.

    Scans non-stuttering quadruples (a, b, c, e) straight at both interior
    indices and requires c between a and e.
    """
    pts = space.points()
    for a in pts:
        for b in pts:
            if b == a:
                continue
            for c in pts:
                if c == b or not is_between(space, a, b, c):
                    continue
                for e in pts:
                    if e == c or not is_between(space, b, c, e):
                        continue
                    if not is_between(space, a, c, e):
                        return Verdict(False, (a, b, c, e), "straight-straight quadruple with a shortcut")
    return Verdict(True)


# ---------------------------------------------------------------- geodetic

def check_geodetic(space: MetricSpace) -> Verdict:
    """Any two points strictly between a fixed pair are comparable."""
    pts = space.points()
    for x0 in pts:
        for x2 in pts:
            if x0 == x2:
                continue
            inner = [z for z in pts if strictly_between(space, x0, z, x2)]
            for i, z in enumerate(inner):
                for z2 in inner[i + 1:]:
                    if not (is_between(space, x0, z, z2) or is_between(space, x0, z2, z)):
                        return Verdict(False, (x0, z, z2, x2), "incomparable between points")
    return Verdict(True)


# --------------------------------------------------- insertion properties

def iter_crooked_chains(space: MetricSpace, n: int, cap: int | None = None) -> Iterator[PointSeq]:
    """Non-stuttering (n+1)-sequences crooked at every interior index, lex order."""
    cap = chain_cap() if cap is None else cap
    npts = space.n_points
    if npts == 0 or (n >= 1 and npts < 2):
        return
    seq = [0] * (n + 1)
    count = 0

    def extend(pos: int) -> Iterator[PointSeq]:
        nonlocal count
        if pos == n + 1:
            count += 1
            if count > cap:
                raise GradeExplosion(f"crooked {n}-chains", cap)
            yield tuple(seq)
            return
        for p in range(npts):
            if pos >= 1 and p == seq[pos - 1]:
                continue
            if pos >= 2 and is_between(space, seq[pos - 2], seq[pos - 1], p):
                continue
            seq[pos] = p
            yield from extend(pos + 1)

    yield from extend(0)


def iter_straight_chains(space: MetricSpace, n: int, cap: int | None = None) -> Iterator[PointSeq]:
    """Non-stuttering (n+1)-sequences straight at every interior index, lex order."""
    cap = chain_cap() if cap is None else cap
    npts = space.n_points
    if npts == 0 or (n >= 1 and npts < 2):
        return
    seq = [0] * (n + 1)
    count = 0

    def extend(pos: int) -> Iterator[PointSeq]:
        nonlocal count
        if pos == n + 1:
            count += 1
            if count > cap:
                raise GradeExplosion(f"straight {n}-chains", cap)
            yield tuple(seq)
            return
        for p in range(npts):
            if pos >= 1 and p == seq[pos - 1]:
                continue
            if pos >= 2 and not is_between(space, seq[pos - 2], seq[pos - 1], p):
                continue
            seq[pos] = p
            yield from extend(pos + 1)

    yield from extend(0)


def _insertion_ok(space: MetricSpace, seq: PointSeq, i: int, z: int) -> bool:
    """Can z be spliced between positions i-1 and i, straight there and
    crooked at both displaced neighbours (endpoints are exempt)?"""
    n = len(seq) - 1
    a, b = seq[i - 1], seq[i]
    if z == a or z == b:
        return False
    if not is_between(space, a, z, b):
        return False
    if i - 1 >= 1 and is_between(space, seq[i - 2], a, z):
        return False
    if i + 1 <= n and is_between(space, z, b, seq[i + 1]):
        return False
    return True


def check_star(space: MetricSpace, which: str, n: int | None = None,
               cap: int | None = None) -> Verdict:
    """Insertion properties, strongest first: "star3", "star2", "star_n".

    * star3: every non-stuttering 4-sequence crooked at 1 and 2 admits z
      splicing into the middle step, crooked on both sides.
    * star2: every non-stuttering 3-sequence crooked at 1 admits z
      splicing into the first step, crooked after.
    * star_n: every crooked simple n-chain admits such a splice at some
      step (requires the degree argument n >= 1).
    """
    pts = space.points()
    if which == "star3":
        for x0, x1 in product(pts, pts):
            if x1 == x0:
                continue
            for x2 in pts:
                if x2 == x1 or is_between(space, x0, x1, x2):
                    continue
                for x3 in pts:
                    if x3 == x2 or is_between(space, x1, x2, x3):
                        continue
                    seq = (x0, x1, x2, x3)
                    if not any(_insertion_ok(space, seq, 2, z) for z in pts):
                        return Verdict(False, seq, "crooked 3-chain with no middle insertion")
        return Verdict(True)
    if which == "star2":
        for x0, x1 in product(pts, pts):
            if x1 == x0:
                continue
            for x2 in pts:
                if x2 == x1 or is_between(space, x0, x1, x2):
                    continue
                seq = (x0, x1, x2)
                if not any(_insertion_ok(space, seq, 1, z) for z in pts):
                    return Verdict(False, seq, "crooked 2-chain with no leading insertion")
        return Verdict(True)
    if which == "star_n":
        if n is None or n < 1:
            raise ValueError("star_n needs a degree n >= 1")
        for seq in iter_crooked_chains(space, n, cap=cap):
            if not any(
                _insertion_ok(space, seq, i, z)
                for i in range(1, n + 1)
                for z in pts
            ):
                return Verdict(False, seq, f"crooked {n}-chain with no insertion")
        return Verdict(True)
    raise UnknownPredicate(which)


# ------------------------------------------------- straight implies global

def check_straight_implies_global(space: MetricSpace, n_max: int,
                                  cap: int | None = None) -> Verdict:
    """Every straight simple chain of degree <= n_max is globally straight.

    Degrees up to 2 hold by definition, so the scan starts at 3.  The
    verdict is equivalent to cut-freeness once n_max >= 3.
    """
    for n in range(3, n_max + 1):
        for seq in iter_straight_chains(space, n, cap=cap):
            total = Fraction(0)
            for a, b in zip(seq, seq[1:]):
                total += space.dist[a][b]
            if total != space.dist[seq[0]][seq[-1]]:
                return Verdict(False, seq, "straight chain that is not globally straight")
    return Verdict(True)


# --------------------------------------------------------- segment orders

@dataclass(frozen=True)
class BetweennessOrder:
    """Betweenness order on the points between a fixed anchor pair.

    z precedes z' when z lies between the first anchor and z'.  The anchors
    are always the least and greatest elements; the order is total exactly
    on geodetic-like instances.
    """

    anchors: tuple[int, int]
    elements: tuple[int, ...]
    relation: frozenset[tuple[int, int]]
    total: bool

    def leq(self, z: int, z2: int) -> bool:
        return (z, z2) in self.relation


def betweenness_order(space: MetricSpace, x0: int, x1: int) -> BetweennessOrder:
    if not (0 <= x0 < space.n_points and 0 <= x1 < space.n_points):
        raise ValueError("anchors must be points of the space")
    elements = tuple(z for z in space.points() if is_between(space, x0, z, x1))
    relation = frozenset(
        (z, z2)
        for z in elements
        for z2 in elements
        if is_between(space, x0, z, z2)
    )
    # these all follow from the triangle-equality calculus; failure means
    # the space is corrupt or there is a bug upstream
    for z in elements:
        if (z, z) not in relation:
            raise OrderAxiomViolation(f"not reflexive at {z}")
        if (x0, z) not in relation or (z, x1) not in relation:
            raise OrderAxiomViolation(f"anchors not extreme for {z}")
    for z, z2 in relation:
        if z != z2 and (z2, z) in relation:
            raise OrderAxiomViolation(f"antisymmetry fails on ({z}, {z2})")
    for a, b in relation:
        for c in elements:
            if (b, c) in relation and (a, c) not in relation:
                raise OrderAxiomViolation(f"transitivity fails on ({a}, {b}, {c})")
    total = all(
        (z, z2) in relation or (z2, z) in relation
        for z in elements
        for z2 in elements
    )
    return BetweennessOrder((x0, x1), elements, relation, total)


# ------------------------------------------------------------------- holes

@dataclass(frozen=True)
class Hole:
    """A chordless cycle of length >= 4, stored in canonical rotation."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def find_holes(g: Graph) -> list[Hole]:
    """All holes up to rotation and reflection.

    Paths grow from their minimal vertex; an interior extension must avoid
    chords to every earlier path vertex, and a closing vertex must be
    adjacent to the anchor alone.  Reflections are deduplicated by
    requiring the second vertex to be smaller than the closing one.
    """
    adj = g.adjacency()
    holes: list[Hole] = []

    def grow(path: list[int]) -> None:
        last = path[-1]
        anchor = path[0]
        for w in sorted(adj[last]):
            if w <= anchor or w in path:
                continue
            # a chord to any mid-path vertex disqualifies w entirely
            if any(v in adj[w] for v in path[1:-1]):
                continue
            if len(path) >= 2 and anchor in adj[w]:
                # w can only close the cycle; mid-path it would chord the anchor
                if len(path) >= 3 and path[1] < w:
                    holes.append(Hole(tuple(path) + (w,)))
                continue
            path.append(w)
            grow(path)
            path.pop()

    for a in range(g.n):
        grow([a])
    return holes
