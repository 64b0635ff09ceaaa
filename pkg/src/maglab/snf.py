"""Exact integer linear algebra for boundary matrices.

Smith normal form by sparse elimination over arbitrary-precision integers:
pivots are chosen by minimal absolute value, ties broken by minimal fill
(the classic guard against entry blow-up), and a pivot is first improved
by gcd row/column operations until it divides everything in its row and
column, after which both are cleared with exact quotients.  Divisibility
of the resulting diagonal is restored at the end by pairwise gcd/lcm
exchanges, which are themselves realizable by unimodular operations.

Ranks that do not need torsion go through a cheaper Gaussian elimination
over the rationals (:func:`rational_rank`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .chains import SparseIntMatrix

Rows = dict[int, dict[int, int]]
Cols = dict[int, dict[int, int]]


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d1 | d2 | ... | dr of an integer matrix."""

    invariant_factors: tuple[int, ...]
    rank: int


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, x, y with x*a + y*b == g == gcd(a, b) >= 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def _load(m: SparseIntMatrix) -> tuple[Rows, Cols]:
    rows: Rows = {}
    cols: Cols = {}
    for (r, c), v in m.entries.items():
        rows.setdefault(r, {})[c] = v
        cols.setdefault(c, {})[r] = v
    return rows, cols


def _set(rows: Rows, cols: Cols, r: int, c: int, v: int) -> None:
    if v:
        rows.setdefault(r, {})[c] = v
        cols.setdefault(c, {})[r] = v
    else:
        row = rows.get(r)
        if row and c in row:
            del row[c]
            if not row:
                del rows[r]
        col = cols.get(c)
        if col and r in col:
            del col[r]
            if not col:
                del cols[c]


def _row_combine(rows: Rows, cols: Cols, r1: int, r2: int,
                 a11: int, a12: int, a21: int, a22: int) -> None:
    # (row r1, row r2) <- (a11*r1 + a12*r2, a21*r1 + a22*r2); caller keeps it unimodular
    row1 = dict(rows.get(r1, {}))
    row2 = dict(rows.get(r2, {}))
    for c in set(row1) | set(row2):
        v1 = row1.get(c, 0)
        v2 = row2.get(c, 0)
        _set(rows, cols, r1, c, a11 * v1 + a12 * v2)
        _set(rows, cols, r2, c, a21 * v1 + a22 * v2)


def _col_combine(rows: Rows, cols: Cols, c1: int, c2: int,
                 a11: int, a12: int, a21: int, a22: int) -> None:
    col1 = dict(cols.get(c1, {}))
    col2 = dict(cols.get(c2, {}))
    for r in set(col1) | set(col2):
        v1 = col1.get(r, 0)
        v2 = col2.get(r, 0)
        _set(rows, cols, r, c1, a11 * v1 + a12 * v2)
        _set(rows, cols, r, c2, a21 * v1 + a22 * v2)


def _pick_pivot(rows: Rows, cols: Cols) -> tuple[int, int]:
    best_key = None
    best = None
    for r, row in rows.items():
        rlen = len(row)
        for c, v in row.items():
            key = (abs(v), (rlen - 1) * (len(cols[c]) - 1), r, c)
            if best_key is None or key < best_key:
                best_key = key
                best = (r, c)
            if key[0] == 1 and key[1] == 0:
                return best  # cannot improve on a lonely unit
    return best


def _diagonalize(m: SparseIntMatrix) -> list[int]:
    """Diagonal entries (positive, no divisibility ordering yet) of m."""
    rows, cols = _load(m)
    diag: list[int] = []
    while rows:
        pr, pc = _pick_pivot(rows, cols)
        # improve the pivot until it divides its whole row and column
        while True:
            v = rows[pr][pc]
            bad = next((r for r, w in cols[pc].items() if r != pr and w % v), None)
            if bad is not None:
                g, x, y = _xgcd(v, cols[pc][bad])
                w = cols[pc][bad]
                _row_combine(rows, cols, pr, bad, x, y, -(w // g), v // g)
                continue
            bad = next((c for c, w in rows[pr].items() if c != pc and w % v), None)
            if bad is not None:
                g, x, y = _xgcd(v, rows[pr][bad])
                w = rows[pr][bad]
                _col_combine(rows, cols, pc, bad, x, y, -(w // g), v // g)
                continue
            break
        v = rows[pr][pc]
        for r in [r for r in cols[pc] if r != pr]:
            q = cols[pc][r] // v
            row_p = dict(rows[pr])
            for c, w in row_p.items():
                cur = rows.get(r, {}).get(c, 0)
                _set(rows, cols, r, c, cur - q * w)
        # the pivot column now holds only the pivot; column ops touch row pr alone
        for c in [c for c in rows[pr] if c != pc]:
            _set(rows, cols, pr, c, 0)
        _set(rows, cols, pr, pc, 0)
        diag.append(abs(v))
    return diag


def divisibility_chain(values) -> tuple[int, ...]:
    """Normalize positive integers into the invariant-factor chain d1 | d2 | ..."""
    items = [abs(int(v)) for v in values if v]
    changed = True
    while changed:
        changed = False
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                a, b = items[i], items[j]
                if b % a:
                    g = gcd(a, b)
                    items[i], items[j] = g, a // g * b
                    changed = True
    items.sort()
    return tuple(items)


def smith_normal_form(m: SparseIntMatrix) -> SmithForm:
    diag = _diagonalize(m)
    factors = divisibility_chain(diag)
    return SmithForm(invariant_factors=factors, rank=len(factors))


def rational_rank(m: SparseIntMatrix) -> int:
    """Rank over Q by sparse Gaussian elimination with fill-minimizing pivots."""
    rows: dict[int, dict[int, Fraction]] = {}
    cols: dict[int, set[int]] = {}
    for (r, c), v in m.entries.items():
        rows.setdefault(r, {})[c] = Fraction(v)
        cols.setdefault(c, set()).add(r)
    rank = 0
    while rows:
        best_key = None
        pivot = None
        for r, row in rows.items():
            rlen = len(row)
            for c in row:
                key = ((rlen - 1) * (len(cols[c]) - 1), rlen, r, c)
                if best_key is None or key < best_key:
                    best_key = key
                    pivot = (r, c)
        pr, pc = pivot
        prow = rows.pop(pr)
        for c in prow:
            cols[c].discard(pr)
            if not cols[c]:
                del cols[c]
        pv = prow[pc]
        for r in list(cols.get(pc, ())):
            row = rows[r]
            factor = row[pc] / pv
            for c, w in prow.items():
                cur = row.get(c, None)
                new = (cur if cur is not None else Fraction(0)) - factor * w
                if new:
                    if cur is None:
                        cols.setdefault(c, set()).add(r)
                    row[c] = new
                elif cur is not None:
                    del row[c]
                    cols[c].discard(r)
                    if not cols[c]:
                        del cols[c]
            if not row:
                del rows[r]
        rank += 1
    return rank
