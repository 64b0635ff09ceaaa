"""Exception hierarchy for maglab.

Errors that report a concrete offending configuration carry the relevant
point indices as attributes, so callers and the CLI can render witnesses
without parsing messages.
"""

from __future__ import annotations


class MaglabError(Exception):
    """Base class for all package-specific errors."""


# ---------------------------------------------------------------- metric --

class MetricError(MaglabError):
    """A distance matrix violates one of the metric axioms."""


class AsymmetricDistance(MetricError):
    def __init__(self, i: int, j: int):
        self.indices = (i, j)
        super().__init__(f"dist[{i}][{j}] != dist[{j}][{i}]")


class NegativeOrZeroOffDiagonal(MetricError):
    def __init__(self, i: int, j: int):
        self.indices = (i, j)
        super().__init__(f"dist[{i}][{j}] must be positive for distinct points")


class NonzeroDiagonal(MetricError):
    def __init__(self, i: int):
        self.indices = (i,)
        super().__init__(f"dist[{i}][{i}] must be zero")


class TriangleViolation(MetricError):
    def __init__(self, i: int, j: int, k: int):
        self.indices = (i, j, k)
        super().__init__(f"dist[{i}][{k}] > dist[{i}][{j}] + dist[{j}][{k}]")


class DisconnectedGraph(MaglabError):
    def __init__(self, reached: int, total: int):
        self.reached = reached
        self.total = total
        super().__init__(f"graph is disconnected: reached {reached} of {total} vertices")


# ----------------------------------------------------- sequences, chains --

class IndexOutOfRange(MaglabError, IndexError):
    def __init__(self, index, bound):
        self.index = index
        self.bound = bound
        super().__init__(f"index {index} outside {bound}")


class EmptySequence(MaglabError):
    def __init__(self):
        super().__init__("point sequence must be nonempty")


class GradeExplosion(MaglabError):
    """An enumeration would exceed the configured basis-size cap."""

    def __init__(self, what: str, cap: int):
        self.what = what
        self.cap = cap
        super().__init__(f"{what} exceeds the cap of {cap} chains")


class MissingCodomainChain(MaglabError):
    """A face fell outside the supplied codomain basis (inconsistent bases)."""

    def __init__(self, seq):
        self.seq = seq
        super().__init__(f"face {seq} not present in codomain basis")


class MixedDegree(MaglabError):
    def __init__(self):
        super().__init__("chain vector mixes degrees")


# ------------------------------------------------------------ block/fill --

class MixedBlocks(MaglabError):
    def __init__(self, signatures):
        self.signatures = tuple(signatures)
        super().__init__(f"support spans {len(self.signatures)} blocks")


class ClosureFailed(MaglabError):
    def __init__(self, degree: int, grade):
        self.degree = degree
        self.grade = grade
        super().__init__(f"boundary does not preserve blocks at degree {degree}, grade {grade}")


class OrderNotTotal(MaglabError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"support points {pair} are incomparable in the betweenness order")


class NoMengerPoint(MaglabError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"no point strictly between {pair[0]} and {pair[1]}")


class FillCheckFailed(MaglabError):
    """The constructed filler does not bound the input (hypothesis violation or bug)."""


class OrderAxiomViolation(MaglabError):
    """The betweenness relation failed a partial-order axiom (invalid metric or bug)."""


# -------------------------------------------------------------- surface --

class UnknownPredicate(MaglabError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown predicate {name!r}")


class FileFormatError(MaglabError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class ApproximateModeRefused(MaglabError):
    def __init__(self):
        super().__init__("theorem verification refuses spaces ingested in approximate mode")
