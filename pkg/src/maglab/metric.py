"""Finite metric spaces with exact rational distances.

Everything downstream (betweenness, straightness, chain boundaries) rests
on equality tests of the form ``d(a, c) == d(a, b) + d(b, c)``, which
floating point would silently corrupt, so distances are `Fraction` values
throughout.  An opt-in approximate ingestion mode exists solely for
sampled Euclidean point sets; spaces built that way carry a flag and the
theorem-verification surface refuses them.

Points are identified by their index into a fixed ordered list; labels are
display metadata only.  A point sequence is a plain tuple of indices.
Index conventions for an n-sequence ``q = (q[0], ..., q[n])``:

* ``seq_length`` is the sum of consecutive distances,
* q is *straight from i to j* when ``d(q[i], q[j])`` equals the sum of
  consecutive distances from i to j, *straight at k* when straight from
  k-1 to k+1, and *crooked at k* otherwise,
* indices 0 and n count as both straight and crooked, so a profile stores
  flags for the interior indices 1 .. n-1 only.

All straightness APIs are index-based, never point-based: the same point
may occur at several indices of a sequence with different flags.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    AsymmetricDistance,
    DisconnectedGraph,
    EmptySequence,
    IndexOutOfRange,
    NegativeOrZeroOffDiagonal,
    NonzeroDiagonal,
    TriangleViolation,
)

PointSeq = tuple[int, ...]
RationalLike = Union[Fraction, int, str, float]

DEFAULT_APPROX_TOL = Fraction(1, 10**9)


def to_fraction(value: RationalLike) -> Fraction:
    """Convert an int, "p/q" string, float or Fraction to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(value)  # exact binary expansion
    return Fraction(str(value).strip())


@dataclass(frozen=True)
class MetricSpace:
    """An immutable finite metric space over an ordered point list."""

    labels: tuple[str, ...]
    dist: tuple[tuple[Fraction, ...], ...]
    approximate: bool = False

    @property
    def n_points(self) -> int:
        return len(self.labels)

    def points(self) -> range:
        return range(len(self.labels))

    def d(self, i: int, j: int) -> Fraction:
        return self.dist[i][j]

    def min_positive_distance(self) -> Fraction | None:
        """Smallest off-diagonal distance, or None for spaces with < 2 points."""
        best = None
        for i in range(self.n_points):
            for j in range(i + 1, self.n_points):
                v = self.dist[i][j]
                if best is None or v < best:
                    best = v
        return best

    def max_distance(self) -> Fraction:
        return max((v for row in self.dist for v in row), default=Fraction(0))


def validate_metric(
    matrix: Sequence[Sequence[RationalLike]],
    labels: Sequence[str] | None = None,
    *,
    approximate: bool = False,
    tol: Fraction = DEFAULT_APPROX_TOL,
) -> MetricSpace:
    """Check the metric axioms on a square matrix and build a MetricSpace.

    In exact mode every axiom must hold on the nose.  In approximate mode,
    meant for float distance matrices of sampled Euclidean point sets,
    asymmetry up to ``tol`` is averaged away and the triangle inequality is
    allowed to fail by up to ``tol``; the resulting space is flagged.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("distance matrix must be square")
    rows = [[to_fraction(v) for v in row] for row in matrix]

    slack = tol if approximate else Fraction(0)
    for i in range(n):
        if abs(rows[i][i]) > slack:
            raise NonzeroDiagonal(i)
        rows[i][i] = Fraction(0)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(rows[i][j] - rows[j][i]) > slack:
                raise AsymmetricDistance(i, j)
            if approximate and rows[i][j] != rows[j][i]:
                mean = (rows[i][j] + rows[j][i]) / 2
                rows[i][j] = rows[j][i] = mean
            if rows[i][j] <= 0:
                raise NegativeOrZeroOffDiagonal(i, j)
    for i in range(n):
        for j in range(n):
            if j == i:
                continue
            for k in range(n):
                if k == i or k == j:
                    continue
                if rows[i][k] > rows[i][j] + rows[j][k] + slack:
                    raise TriangleViolation(i, j, k)

    if labels is None:
        labels = [str(i) for i in range(n)]
    elif len(labels) != n:
        raise ValueError("label count does not match matrix size")
    return MetricSpace(
        labels=tuple(str(x) for x in labels),
        dist=tuple(tuple(row) for row in rows),
        approximate=approximate,
    )


# ------------------------------------------------------------------ graphs

@dataclass(frozen=True)
class Graph:
    """A connected simple graph on vertices 0 .. n-1."""

    n: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        normalized: list[tuple[int, int]] = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            normalized.append((u, v) if u < v else (v, u))
        if len(set(normalized)) != len(normalized):
            raise ValueError("duplicate edge")
        g = cls(n=n, edges=frozenset(normalized))
        reached = _bfs_reach(g, 0) if n else set()
        if len(reached) != n:
            raise DisconnectedGraph(len(reached), n)
        return g

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges


def _bfs_reach(g: Graph, start: int) -> set[int]:
    adj = g.adjacency()
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def graph_to_metric(g: Graph) -> MetricSpace:
    """Shortest-path edge-count metric of a connected graph."""
    n = g.n
    adj = g.adjacency()
    dist = [[Fraction(0)] * n for _ in range(n)]
    for src in range(n):
        depth = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in depth:
                    depth[w] = depth[u] + 1
                    queue.append(w)
        if len(depth) != n:
            raise DisconnectedGraph(len(depth), n)
        for v, k in depth.items():
            dist[src][v] = Fraction(k)
    return MetricSpace(
        labels=tuple(str(i) for i in range(n)),
        dist=tuple(tuple(row) for row in dist),
    )


# ------------------------------------------------------------- betweenness

def is_between(space: MetricSpace, a: int, b: int, c: int) -> bool:
    """True when d(a, c) = d(a, b) + d(b, c)."""
    return space.dist[a][c] == space.dist[a][b] + space.dist[b][c]


def strictly_between(space: MetricSpace, a: int, b: int, c: int) -> bool:
    """Betweenness with b distinct from both endpoints."""
    return b != a and b != c and is_between(space, a, b, c)


# ------------------------------------------------------------ straightness

def _check_seq(space: MetricSpace, q: Sequence[int]) -> PointSeq:
    seq = tuple(q)
    for idx in seq:
        if not (0 <= idx < space.n_points):
            raise IndexOutOfRange(idx, f"0..{space.n_points - 1}")
    return seq


def seq_length(space: MetricSpace, q: Sequence[int]) -> Fraction:
    """Total length of a point sequence; 0 for a single point."""
    seq = _check_seq(space, q)
    if not seq:
        raise EmptySequence()
    total = Fraction(0)
    for a, b in zip(seq, seq[1:]):
        total += space.dist[a][b]
    return total


def straight_from_to(space: MetricSpace, q: Sequence[int], i: int, j: int) -> bool:
    seq = _check_seq(space, q)
    if not seq:
        raise EmptySequence()
    n = len(seq) - 1
    if not (0 <= i <= j <= n):
        raise IndexOutOfRange((i, j), f"0 <= i <= j <= {n}")
    total = Fraction(0)
    for k in range(i + 1, j + 1):
        total += space.dist[seq[k - 1]][seq[k]]
    return space.dist[seq[i]][seq[j]] == total


def globally_straight(space: MetricSpace, q: Sequence[int]) -> bool:
    seq = _check_seq(space, q)
    if not seq:
        raise EmptySequence()
    return seq_length(space, seq) == space.dist[seq[0]][seq[-1]]


@dataclass(frozen=True)
class StraightnessProfile:
    """Straight/crooked flags per interior index of an n-sequence.

    ``interior[k - 1]`` is True when the sequence is straight at k, for
    k in 1 .. n-1.  The endpoints 0 and n report as both straight and
    crooked, matching the convention used everywhere else.
    """

    n: int
    interior: tuple[bool, ...]

    def _check(self, k: int) -> None:
        if not (0 <= k <= self.n):
            raise IndexOutOfRange(k, f"0..{self.n}")

    def straight_at(self, k: int) -> bool:
        self._check(k)
        if k == 0 or k == self.n:
            return True
        return self.interior[k - 1]

    def crooked_at(self, k: int) -> bool:
        self._check(k)
        if k == 0 or k == self.n:
            return True
        return not self.interior[k - 1]

    @property
    def all_straight(self) -> bool:
        return all(self.interior)

    @property
    def all_crooked(self) -> bool:
        return not any(self.interior)


def straightness_profile(space: MetricSpace, q: Sequence[int]) -> StraightnessProfile:
    seq = _check_seq(space, q)
    if not seq:
        raise EmptySequence()
    n = len(seq) - 1
    interior = tuple(
        is_between(space, seq[k - 1], seq[k], seq[k + 1]) for k in range(1, n)
    )
    return StraightnessProfile(n=n, interior=interior)
