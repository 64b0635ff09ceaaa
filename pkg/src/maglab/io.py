"""File formats.

Distance-matrix CSV (exact bytes):
    line 1: comma-separated point labels;
    lines 2..n+1: comma-separated rationals, each "p/q" or an integer,
    row i giving the distances from point i in label order.
    No padding, no quoting, newline-terminated.

Graph file (exact bytes):
    line 1: the vertex count;
    each further nonempty line: "u v", one 0-indexed edge per line.

Chain-vector JSON:
    {"degree": n, "terms": [{"coeff": c, "seq": [i0, ..., in]}, ...]}

Homology tables serialize as a list of records
    {"n": int, "l_num": int, "l_den": int, "rank": int, "torsion": [int]}
and sparse matrices dump as a "rows cols nnz" header followed by
"r c v" triplet lines (see SparseIntMatrix.dump_triplets).
"""

from __future__ import annotations

import json
from typing import TextIO

from .chains import ChainVector
from .errors import FileFormatError
from .homology import HomologyTable
from .metric import Graph, MetricSpace, to_fraction, validate_metric


def load_matrix_csv(text: str, *, approximate: bool = False) -> MetricSpace:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FileFormatError(1, "empty matrix file")
    labels = [cell.strip() for cell in lines[0].split(",")]
    n = len(labels)
    if len(lines) != n + 1:
        raise FileFormatError(len(lines), f"expected {n} matrix rows after the label line")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        cells = [cell.strip() for cell in line.split(",")]
        if len(cells) != n:
            raise FileFormatError(lineno, f"expected {n} entries, got {len(cells)}")
        try:
            rows.append([to_fraction(cell) for cell in cells])
        except (ValueError, ZeroDivisionError) as exc:
            raise FileFormatError(lineno, f"bad rational: {exc}") from None
    return validate_metric(rows, labels, approximate=approximate)


def dump_matrix_csv(space: MetricSpace) -> str:
    lines = [",".join(space.labels)]
    for row in space.dist:
        lines.append(",".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def load_graph_file(text: str) -> Graph:
    lines = text.splitlines()
    stripped = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not stripped:
        raise FileFormatError(1, "empty graph file")
    first_no, first = stripped[0]
    try:
        n = int(first)
    except ValueError:
        raise FileFormatError(first_no, f"vertex count expected, got {first!r}") from None
    edges = []
    for lineno, line in stripped[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FileFormatError(lineno, f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FileFormatError(lineno, f"edge endpoints must be integers, got {line!r}") from None
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FileFormatError(first_no, str(exc)) from None


def dump_graph_file(g: Graph) -> str:
    lines = [str(g.n)]
    for u, v in sorted(g.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------- chain vectors

def load_chain_vector(space: MetricSpace, text: str) -> ChainVector:
    data = json.loads(text)
    terms = [(int(t["coeff"]), tuple(int(i) for i in t["seq"])) for t in data["terms"]]
    vector = ChainVector.from_terms(space, terms)
    stated = data.get("degree")
    if stated is not None and not vector.is_zero() and vector.degree != stated:
        raise FileFormatError(1, f"terms have degree {vector.degree}, header says {stated}")
    return vector


def dump_chain_vector(vector: ChainVector) -> str:
    return json.dumps(
        {
            "degree": vector.degree if not vector.is_zero() else None,
            "terms": [{"coeff": c, "seq": list(s)} for c, s in vector.terms()],
        },
        sort_keys=True,
    )


# -------------------------------------------------------------- homology

def table_records(table: HomologyTable) -> list[dict]:
    records = []
    for (n, grade), group in sorted(table.entries.items()):
        records.append(
            {
                "n": n,
                "l_num": grade.numerator,
                "l_den": grade.denominator,
                "rank": group.free_rank,
                "torsion": list(group.torsion),
            }
        )
    return records


def render_table(table: HomologyTable, out: TextIO) -> None:
    header = f"{'n':>3}  {'l':>8}  group"
    out.write(header + "\n")
    for (n, grade), group in sorted(table.entries.items()):
        out.write(f"{n:>3}  {str(grade):>8}  {group}\n")
    for (n, grade), message in sorted(table.failures.items()):
        out.write(f"{n:>3}  {str(grade):>8}  SKIPPED: {message}\n")
