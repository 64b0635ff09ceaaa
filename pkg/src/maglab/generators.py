"""Named example spaces, graph enumeration and random-space generation.

The named cast covers everything the checkers and the verification suite
talk about: complete graphs, cycles, paths, stars and other small trees,
the complete graph on four vertices minus an edge, the five-cycle with a
universal vertex, and rational samples of the line.  Graph enumeration
provides all labeled connected graphs up to five vertices exhaustively
and one representative per isomorphism class on six.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterator, Sequence

from .errors import MetricError
from .metric import Graph, MetricSpace, graph_to_metric, to_fraction, validate_metric


# ------------------------------------------------------------ named graphs

def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def star_graph(k: int) -> Graph:
    if k < 2:
        raise ValueError("star needs at least 2 vertices")
    return Graph.from_edges(k, [(0, i) for i in range(1, k)])


def tree_from_edges(n: int, edges: Sequence[tuple[int, int]]) -> Graph:
    if len(edges) != n - 1:
        raise ValueError("a tree on n vertices has n - 1 edges")
    return Graph.from_edges(n, edges)


def k4_minus_edge() -> Graph:
    """Complete graph on four vertices with the edge (0, 1) removed."""
    return Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def c5_plus_two_edges() -> Graph:
    """Five-cycle with vertex 0 made adjacent to all others."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2), (0, 3)])


_NAMED = {
    "k4minus": k4_minus_edge,
    "c5plus2": c5_plus_two_edges,
}

_FAMILY = re.compile(r"^(k|complete|c|cycle|p|path|star)(\d+)$")


def named_graph(name: str) -> Graph:
    """Resolve names like k5, c4, path3, star6, k4minus, c5plus2."""
    key = name.strip().lower()
    if key in _NAMED:
        return _NAMED[key]()
    m = _FAMILY.match(key)
    if not m:
        raise ValueError(f"unknown graph name {name!r}")
    family, k = m.group(1), int(m.group(2))
    if family in ("k", "complete"):
        return complete_graph(k)
    if family in ("c", "cycle"):
        return cycle_graph(k)
    if family in ("p", "path"):
        return path_graph(k)
    return star_graph(k)


# -------------------------------------------------------- rational samples

def rational_sample(values: Sequence) -> MetricSpace:
    """Finite subset of the rational line with the absolute-value metric."""
    vals = [to_fraction(v) for v in values]
    if len(set(vals)) != len(vals):
        raise ValueError("sample points must be distinct")
    dist = tuple(tuple(abs(a - b) for b in vals) for a in vals)
    return MetricSpace(labels=tuple(str(v) for v in vals), dist=dist)


def parse_points(text: str) -> MetricSpace:
    """Comma-separated rationals, e.g. "0,1/2,1"."""
    return rational_sample([part for part in text.split(",") if part.strip()])


# ---------------------------------------------------------- random spaces

def random_metric(
    n_points: int,
    rng: random.Random,
    lo: int = 4,
    hi: int = 9,
    max_tries: int = 500,
) -> MetricSpace:
    """Random integer metric by rejection sampling.

    Symmetric matrices with entries uniform in lo..hi are drawn until the
    triangle inequality holds; should rejection drag on, the lower bound
    is raised to ceil(hi/2), after which every draw is a metric.
    """
    for attempt in range(max_tries + 1):
        if attempt == max_tries:
            lo = max(lo, (hi + 1) // 2)
        m = [[0] * n_points for _ in range(n_points)]
        for i in range(n_points):
            for j in range(i + 1, n_points):
                m[i][j] = m[j][i] = rng.randint(lo, hi)
        try:
            return validate_metric(m)
        except MetricError:
            continue
    raise AssertionError("unreachable: the narrowed range always validates")


def random_rational_sample(n_points: int, rng: random.Random) -> MetricSpace:
    """Random rational sample guaranteed to contain a point below the
    smallest positive element (so alternating cycles from 0 admit fillers)."""
    if n_points < 3:
        raise ValueError("need at least 3 points")
    vals = {Fraction(0)}
    while len(vals) < n_points - 1:
        vals.add(Fraction(rng.randint(1, 48), 2 ** rng.randint(0, 4)))
    smallest = min(v for v in vals if v > 0)
    vals.add(smallest / 2)
    return rational_sample(sorted(vals))


# -------------------------------------------------------- graph enumeration

def _vertex_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _mask_connected(n: int, pairs, mask: int) -> bool:
    if n <= 1:
        return True
    adj = [[] for _ in range(n)]
    for b, (u, v) in enumerate(pairs):
        if mask >> b & 1:
            adj[u].append(v)
            adj[v].append(u)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def _mask_to_graph(n: int, pairs, mask: int) -> Graph:
    return Graph.from_edges(n, [pairs[b] for b in range(len(pairs)) if mask >> b & 1])


def connected_graphs(n: int) -> Iterator[Graph]:
    """All labeled connected graphs on exactly n vertices."""
    pairs = _vertex_pairs(n)
    for mask in range(1 << len(pairs)):
        if _mask_connected(n, pairs, mask):
            yield _mask_to_graph(n, pairs, mask)


def _degree_sorting_perms(n: int, degs: list[int]) -> Iterator[tuple[int, ...]]:
    """Permutations relabeling so that degrees come out sorted descending."""
    target = sorted(degs, reverse=True)
    positions: dict[int, list[int]] = {}
    for pos, d in enumerate(target):
        positions.setdefault(d, []).append(pos)
    groups = sorted(positions)
    members = {d: [v for v in range(n) if degs[v] == d] for d in groups}
    for assignment in product(*(permutations(positions[d]) for d in groups)):
        perm = [0] * n
        for d, slots in zip(groups, assignment):
            for v, pos in zip(members[d], slots):
                perm[v] = pos
        yield tuple(perm)


def _canonical_mask(n: int, pairs, bit: dict, edges) -> int:
    degs = [0] * n
    for u, v in edges:
        degs[u] += 1
        degs[v] += 1
    best = None
    for perm in _degree_sorting_perms(n, degs):
        m = 0
        for u, v in edges:
            a, b = perm[u], perm[v]
            m |= bit[(a, b) if a < b else (b, a)]
        if best is None or m < best:
            best = m
    return best


def canonical_connected_graphs(n: int, cap: int = 10_000) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on n
    vertices, in deterministic order, at most ``cap`` of them."""
    pairs = _vertex_pairs(n)
    bit = {p: 1 << i for i, p in enumerate(pairs)}
    seen: set[int] = set()
    reps: list[Graph] = []
    for mask in range(1 << len(pairs)):
        if not _mask_connected(n, pairs, mask):
            continue
        edges = [pairs[b] for b in range(len(pairs)) if mask >> b & 1]
        key = _canonical_mask(n, pairs, bit, edges)
        if key in seen:
            continue
        seen.add(key)
        reps.append(_mask_to_graph(n, pairs, mask))
        if len(reps) >= cap:
            break
    return reps


def has_cycle_of_length_at_least(g: Graph, k: int) -> bool:
    """Does any simple cycle of length >= k exist?"""
    adj = g.adjacency()

    def grow(path: list[int], member: set[int]) -> bool:
        last = path[-1]
        anchor = path[0]
        for w in adj[last]:
            if w == anchor and len(path) >= max(3, k):
                return True
            if w <= anchor or w in member:
                continue
            path.append(w)
            member.add(w)
            if grow(path, member):
                return True
            path.pop()
            member.remove(w)
        return False

    return any(grow([a], {a}) for a in range(g.n))


# ------------------------------------------------------------------ corpus

@dataclass(frozen=True)
class CorpusEntry:
    name: str
    space: MetricSpace
    graph: Graph | None = None


def _graph_entry(name: str, g: Graph) -> CorpusEntry:
    return CorpusEntry(name=name, space=graph_to_metric(g), graph=g)


def standard_corpus() -> list[CorpusEntry]:
    """The fixed test corpus: 23 spaces covering every named example."""
    half = Fraction(1, 2)
    quarter = Fraction(1, 4)
    entries = [
        CorpusEntry("singleton", validate_metric([[0]], labels=["*"])),
        _graph_entry("k1", complete_graph(1)),
        _graph_entry("k2", complete_graph(2)),
        _graph_entry("k3", complete_graph(3)),
        _graph_entry("k4", complete_graph(4)),
        _graph_entry("k5", complete_graph(5)),
        _graph_entry("path2", path_graph(2)),
        _graph_entry("path3", path_graph(3)),
        _graph_entry("path4", path_graph(4)),
        _graph_entry("path5", path_graph(5)),
        _graph_entry("path6", path_graph(6)),
        _graph_entry("cycle4", cycle_graph(4)),
        _graph_entry("cycle5", cycle_graph(5)),
        _graph_entry("cycle6", cycle_graph(6)),
        _graph_entry("star4", star_graph(4)),
        _graph_entry("star5", star_graph(5)),
        _graph_entry("spider5", tree_from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)])),
        _graph_entry("caterpillar6", tree_from_edges(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)])),
        _graph_entry("k4minus", k4_minus_edge()),
        _graph_entry("c5plus2", c5_plus_two_edges()),
        CorpusEntry("half3", rational_sample([0, half, 1])),
        CorpusEntry("dyadic5", rational_sample([0, quarter, half, 3 * quarter, 1])),
        CorpusEntry("lopsided4", rational_sample([0, 1, 3, 7])),
    ]
    return entries
