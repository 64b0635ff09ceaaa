"""Command-line surface.

Subcommands:
    compute    graded homology table of one space
    check      metric predicates with witnesses
    decompose  per-signature block dimensions and blockwise homology
    fill       fill a cycle read from a chain-vector JSON file
    verify     run the claim suite; exit code 0 iff everything passes
    generate   emit a named or random space as a matrix CSV

A space is selected with exactly one of --graph NAME|FILE (named graphs
like k5, c4, path3, star6, k4minus, c5plus2, or a graph file), --matrix
FILE (distance-matrix CSV) or --points LIST (comma-separated rationals on
the line).  Rationals are written "p/q" everywhere, never as decimals.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import io as mio
from .blocks import block_homology_breakdown, decompose, fill_cycle
from .chains import realizable_grades
from .errors import GradeExplosion, MaglabError
from .generators import named_graph, parse_points, random_metric
from .homology import homology_table
from .metric import Graph, MetricSpace, graph_to_metric
from .predicates import (
    check_cut_free,
    check_geodetic,
    check_menger,
    check_star,
    check_straight_implies_global,
    check_strongly_menger,
)
from .errors import UnknownPredicate
from .verify import CLAIM_IDS, VerifyOptions, run_claims


@dataclass(frozen=True)
class SpaceSpec:
    """One space selector: a graph (named or file), a matrix file, or a
    point list; resolves to exactly one metric space."""

    graph: str | None = None
    matrix: str | None = None
    points: str | None = None
    approx: bool = False

    @classmethod
    def from_args(cls, args) -> "SpaceSpec":
        spec = cls(graph=args.graph, matrix=args.matrix, points=args.points,
                   approx=args.approx)
        if sum(1 for x in (spec.graph, spec.matrix, spec.points) if x) != 1:
            raise MaglabError("select exactly one of --graph, --matrix, --points")
        return spec

    def resolve(self) -> MetricSpace:
        if self.points:
            return parse_points(self.points)
        if self.matrix:
            return mio.load_matrix_csv(Path(self.matrix).read_text(),
                                       approximate=self.approx)
        return graph_to_metric(_load_graph(self.graph))

    def resolve_graph(self) -> Graph | None:
        return _load_graph(self.graph) if self.graph else None


def _add_space_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", help="named graph or graph file")
    p.add_argument("--matrix", help="distance-matrix CSV file")
    p.add_argument("--points", help="comma-separated rationals on the line")
    p.add_argument("--approx", action="store_true",
                   help="ingest --matrix with the approximate tolerance")


def _resolve_space(args) -> MetricSpace:
    return SpaceSpec.from_args(args).resolve()


def _load_graph(spec: str) -> Graph:
    path = Path(spec)
    if path.exists():
        return mio.load_graph_file(path.read_text())
    return named_graph(spec)


def _resolve_graph(args) -> Graph | None:
    return SpaceSpec.from_args(args).resolve_graph()


def _fraction(text: str) -> Fraction:
    return Fraction(text)


def _write_json(path: str, payload) -> None:
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


# ------------------------------------------------------------ subcommands


def cmd_compute(args) -> int:
    space = _resolve_space(args)
    l_max = args.lmax if args.lmax is not None else Fraction(args.nmax) * space.max_distance()
    table = homology_table(space, args.nmax, l_max, workers=args.workers)
    mio.render_table(table, sys.stdout)
    if args.json:
        _write_json(args.json, mio.table_records(table))
    if args.dump_boundaries:
        _dump_boundaries(space, args.nmax, l_max, Path(args.dump_boundaries))
    if table.failures:
        for key, msg in sorted(table.failures.items()):
            print(f"warning: block {key} skipped: {msg}", file=sys.stderr)
        if args.strict:
            return 1
    return 0


def _dump_boundaries(space: MetricSpace, n_max: int, l_max: Fraction, outdir: Path) -> None:
    """Triplet-format boundary matrices for external cross-checking."""
    from .chains import boundary_matrix, enumerate_chains

    outdir.mkdir(parents=True, exist_ok=True)
    for n in range(1, n_max + 1):
        for grade in sorted(realizable_grades(space, n, l_max)):
            dom = enumerate_chains(space, n, grade)
            cod = enumerate_chains(space, n - 1, grade)
            m = boundary_matrix(space, dom, cod)
            name = f"d{n}_l{grade.numerator}_{grade.denominator}.txt"
            (outdir / name).write_text(m.dump_triplets())


def _run_predicate(space: MetricSpace, graph: Graph | None, name: str, args):
    if name == "menger":
        return check_menger(space)
    if name == "cutfree":
        return check_cut_free(space)
    if name == "geodetic":
        return check_geodetic(space)
    if name == "star3":
        return check_star(space, "star3")
    if name == "star2":
        return check_star(space, "star2")
    if name.startswith("star_"):
        return check_star(space, "star_n", int(name.removeprefix("star_")))
    if name == "strong_menger":
        return check_strongly_menger(space, args.alpha)
    if name == "straight_global":
        return check_straight_implies_global(space, args.nmax)
    if name == "holes":
        from .predicates import find_holes

        if graph is None:
            raise MaglabError("the holes predicate needs --graph")
        holes = find_holes(graph)
        from .predicates import Verdict

        if holes:
            return Verdict(False, holes[0].vertices, f"{len(holes)} hole(s)")
        return Verdict(True)
    raise UnknownPredicate(name)


def cmd_check(args) -> int:
    space = _resolve_space(args)
    graph = _resolve_graph(args)
    names = [p.strip() for p in args.pred.split(",") if p.strip()]
    records = []
    for name in names:
        verdict = _run_predicate(space, graph, name, args)
        records.append(
            {
                "predicate": name,
                "holds": verdict.holds,
                "witness": list(verdict.witness) if verdict.witness else None,
                "tag": verdict.tag,
            }
        )
        print(f"{name}: {verdict}")
    if args.json:
        _write_json(args.json, records)
    return 0


def cmd_decompose(args) -> int:
    space = _resolve_space(args)
    grades = (
        [args.l]
        if args.l is not None
        else sorted(realizable_grades(space, args.n, args.lmax))
    )
    payload = []
    for grade in grades:
        dec = decompose(space, args.n, grade)
        print(f"degree {args.n}, grade {grade}: closure_ok={dec.closure_ok}")
        sigs = sorted(dec.blocks, key=lambda s: s.u)
        groups = None
        if dec.closure_ok:
            try:
                groups = block_homology_breakdown(space, args.n, grade)
            except MaglabError as exc:
                print(f"  blockwise homology unavailable: {exc}")
        for sig in sigs:
            line = f"  u={sig.u} k={sig.k} dim={len(dec.blocks[sig])}"
            if groups is not None:
                line += f"  H={groups[sig]}"
            print(line)
        payload.append(
            {
                "n": args.n,
                "l_num": grade.numerator,
                "l_den": grade.denominator,
                "closure_ok": dec.closure_ok,
                "blocks": [
                    {
                        "u": list(sig.u),
                        "dim": len(dec.blocks[sig]),
                        "homology": str(groups[sig]) if groups is not None else None,
                    }
                    for sig in sigs
                ],
            }
        )
    if args.json:
        _write_json(args.json, payload)
    return 0


def cmd_fill(args) -> int:
    space = _resolve_space(args)
    vector = mio.load_chain_vector(space, Path(args.cycle).read_text())
    try:
        filled = fill_cycle(space, vector)
    except MaglabError as exc:
        print(f"refused: {type(exc).__name__}: {exc}")
        return 1
    print(mio.dump_chain_vector(filled))
    if args.json:
        Path(args.json).write_text(mio.dump_chain_vector(filled) + "\n")
    return 0


def cmd_verify(args) -> int:
    extra = []
    if args.matrix:
        extra.append(mio.load_matrix_csv(Path(args.matrix).read_text(), approximate=args.approx))
    opts = VerifyOptions(
        quick=args.quick,
        exhaustive_graphs=args.exhaustive_graphs,
        seed=args.seed,
        extra_spaces=tuple(extra),
    )
    report = run_claims(opts, only=args.claim or None)
    for r in report.results:
        mark = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[r.status]
        timing = ""
        if not args.no_timing and r.elapsed_ms is not None:
            timing = f"  [{r.elapsed_ms:.0f} ms]"
        print(f"{mark}  {r.id}: {r.details}{timing}")
    summary = report.to_json_dict(timing=not args.no_timing)
    print(f"{summary['passed']} passed, {summary['failed']} failed, {summary['skipped']} skipped")
    if args.json:
        _write_json(args.json, summary)
    return 0 if report.ok else 1


def cmd_generate(args) -> int:
    if args.name:
        space = graph_to_metric(named_graph(args.name))
    elif args.random is not None:
        space = random_metric(args.random, random.Random(args.seed))
    else:
        raise MaglabError("generate needs --name or --random N")
    text = mio.dump_matrix_csv(space)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maglab", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="graded homology table")
    _add_space_flags(p)
    p.add_argument("--nmax", type=int, default=2)
    p.add_argument("--lmax", type=_fraction, default=None)
    p.add_argument("--json", help="write the table records to this file")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--strict", action="store_true",
                   help="nonzero exit when any block hits the size cap")
    p.add_argument("--dump-boundaries", metavar="DIR",
                   help="write every boundary matrix as a sparse triplet file")
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("check", help="predicate checks with witnesses")
    _add_space_flags(p)
    p.add_argument("--pred", required=True,
                   help="comma list: menger,cutfree,geodetic,star3,star2,star_N,"
                        "strong_menger,straight_global,holes")
    p.add_argument("--alpha", type=_fraction, default=Fraction(1, 2),
                   help="threshold for strong_menger")
    p.add_argument("--nmax", type=int, default=5, help="degree bound for straight_global")
    p.add_argument("--json")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("decompose", help="signature blocks and blockwise homology")
    _add_space_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=_fraction, default=None, help="single grade")
    p.add_argument("--lmax", type=_fraction, default=Fraction(10), help="grade sweep bound")
    p.add_argument("--json")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("fill", help="fill a cycle from a chain-vector JSON file")
    _add_space_flags(p)
    p.add_argument("--cycle", required=True)
    p.add_argument("--json")
    p.set_defaults(fn=cmd_fill)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--exhaustive-graphs", type=int, default=5,
                   help="largest vertex count scanned exhaustively")
    p.add_argument("--claim", action="append", help="run only this claim id (repeatable)")
    p.add_argument("--json")
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("--seed", type=int, default=20260808)
    p.add_argument("--matrix", help="also verify against this user space")
    p.add_argument("--approx", action="store_true")
    p.add_argument("--list-claims", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("generate", help="emit a space as a matrix CSV")
    p.add_argument("--name", help="named graph")
    p.add_argument("--random", type=int, help="random metric on this many points")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_generate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.list_claims:
        for cid in CLAIM_IDS:
            print(cid)
        return 0
    try:
        return args.fn(args)
    except GradeExplosion as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except MaglabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
