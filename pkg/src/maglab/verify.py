"""Machine-checkable verification suite.

Each claim is a finitely checkable law: an exact identity between two
independently computed quantities, an exhaustive scan of a quantifier on
a fixed corpus, or a structural property of the machinery itself.  The
suite runs every claim, times it, and reports pass/fail with a witness in
the details on failure.  Claim ids are stable across releases.

Spaces ingested in approximate mode are refused: every claim here is an
equality-of-rationals statement and tolerance would make the verdicts
meaningless.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .blocks import (
    block_signature,
    decompose,
    fill_cycle,
    homology_via_blocks,
)
from .chains import (
    ChainVector,
    SimpleChain,
    SparseIntMatrix,
    boundary_matrix,
    boundary_of,
    enumerate_chains,
    face,
    is_cycle,
    iter_simple_chains,
    realizable_grades,
)
from .errors import ApproximateModeRefused, NoMengerPoint, OrderNotTotal
from .generators import (
    CorpusEntry,
    canonical_connected_graphs,
    complete_graph,
    connected_graphs,
    has_cycle_of_length_at_least,
    random_metric,
    random_rational_sample,
    standard_corpus,
)
from .homology import AbelianGroup, h1_by_formula, homology_group, homology_table
from .metric import (
    MetricSpace,
    graph_to_metric,
    is_between,
    seq_length,
    straight_from_to,
    straightness_profile,
    strictly_between,
)
from .predicates import (
    betweenness_order,
    check_cut_free,
    check_geodetic,
    check_menger,
    check_star,
    check_straight_implies_global,
    find_holes,
)
from .snf import smith_normal_form


@dataclass
class VerifyOptions:
    quick: bool = False
    exhaustive_graphs: int = 5
    six_vertex_cap: int = 10_000
    seed: int = 20260808
    extra_spaces: tuple[MetricSpace, ...] = ()

    @property
    def n_max(self) -> int:
        return 4 if self.quick else 5


@dataclass
class ClaimResult:
    id: str
    statement: str
    status: str  # pass | fail | skipped
    details: str
    elapsed_ms: float | None = None


@dataclass
class SuiteReport:
    results: list[ClaimResult] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.results if r.status == "fail")

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json_dict(self, timing: bool = True) -> dict:
        claims = []
        for r in self.results:
            rec = {
                "id": r.id,
                "statement": r.statement,
                "status": r.status,
                "details": r.details,
            }
            if timing and r.elapsed_ms is not None:
                rec["elapsed_ms"] = round(r.elapsed_ms, 3)
            claims.append(rec)
        return {
            "claims": claims,
            "passed": sum(1 for r in self.results if r.status == "pass"),
            "failed": self.failed,
            "skipped": sum(1 for r in self.results if r.status == "skipped"),
        }


def _corpus(opts: VerifyOptions) -> list[CorpusEntry]:
    entries = standard_corpus()
    for i, space in enumerate(opts.extra_spaces):
        if space.approximate:
            raise ApproximateModeRefused()
        entries.append(CorpusEntry(name=f"user{i}", space=space))
    return entries


def _small(entries, max_points):
    return [e for e in entries if e.space.n_points <= max_points]


# ------------------------------------------------------------- the claims


def claim_h0(opts: VerifyOptions):
    """Degree 0, grade 0 is free on the points, for every corpus space."""
    worst_ms = 0.0
    entries = _corpus(opts)
    for entry in entries:
        t0 = time.perf_counter()
        group = homology_group(entry.space, 0, 0)
        ms = (time.perf_counter() - t0) * 1000
        worst_ms = max(worst_ms, ms)
        expected = AbelianGroup(entry.space.n_points)
        if group != expected:
            return False, f"{entry.name}: got {group}, expected {expected}"
        if ms >= 1000:
            return False, f"{entry.name}: took {ms:.0f} ms (budget 1000 ms per space)"
    return True, f"{len(entries)} spaces, slowest {worst_ms:.1f} ms"


def claim_h1_formula(opts: VerifyOptions):
    """Degree-1 groups equal the no-middle-point pair count, gradewise."""
    checked = 0
    for entry in _corpus(opts):
        space = entry.space
        formula = h1_by_formula(space)
        grades = realizable_grades(space, 1) | set(formula)
        for grade in sorted(grades):
            group = homology_group(space, 1, grade)
            expected = AbelianGroup(formula.get(grade, 0))
            if group != expected:
                return False, f"{entry.name} at grade {grade}: {group} != {expected}"
            checked += 1
    return True, f"{checked} (space, grade) blocks agree"


def claim_boundary_squared(opts: VerifyOptions):
    """d(d(x)) = 0 and faces preserve the grade, on every block."""
    n_max = opts.n_max
    products = 0
    faces = 0
    for entry in _corpus(opts):
        space = entry.space
        for n in range(1, n_max + 1):
            for grade in sorted(realizable_grades(space, n)):
                dom = enumerate_chains(space, n, grade)
                for chain in dom.chains:
                    for i in range(1, n):
                        f = face(space, chain, i)
                        if f is not None:
                            faces += 1
                            if f.length != chain.length:
                                return False, f"{entry.name}: face of {chain.seq} changed grade"
                if n < 2:
                    continue
                mid = enumerate_chains(space, n - 1, grade)
                low = enumerate_chains(space, n - 2, grade)
                d_n = boundary_matrix(space, dom, mid)
                d_mid = boundary_matrix(space, mid, low)
                if not d_mid.matmul(d_n).is_zero():
                    return False, f"{entry.name}: d.d != 0 at degree {n}, grade {grade}"
                products += 1
    return True, f"{products} consecutive products vanish, {faces} faces keep their grade"


def claim_crooked_cycle(opts: VerifyOptions):
    """A simple chain is a cycle iff crooked, and distinct faces never collide."""
    n_max = opts.n_max
    chains = 0
    for entry in _small(_corpus(opts), 5):
        space = entry.space
        for n in range(0, n_max + 1):
            for chain in iter_simple_chains(space, n):
                chains += 1
                vec = ChainVector.from_terms(space, [(1, chain.seq)])
                if chain.is_crooked() != is_cycle(space, vec):
                    return False, f"{entry.name}: {chain.seq} breaks crooked<->cycle"
                nonzero = [f for f in (face(space, chain, i) for i in range(1, n)) if f]
                for a in range(len(nonzero)):
                    for b in range(a + 1, len(nonzero)):
                        if nonzero[a].seq == nonzero[b].seq:
                            return False, f"{entry.name}: faces of {chain.seq} collide"
    return True, f"{chains} chains scanned"


def claim_k2_table(opts: VerifyOptions):
    """The two-point space has Z^2 at (n, n) for n = 0..5 and nothing else."""
    space = graph_to_metric(complete_graph(2))
    table = homology_table(space, 5, Fraction(5))
    expected = {(n, Fraction(n)): AbelianGroup(2) for n in range(6)}
    if table.failures:
        return False, f"unexpected failures: {table.failures}"
    if table.entries != expected:
        return False, f"table {table.entries} != {expected}"
    return True, "Z^2 at (n, n) for n = 0..5, all other blocks empty"


def claim_nonvanishing(opts: VerifyOptions):
    """Every space with >= 2 points has a nonzero group in degrees 1..3.

    The scan is bounded: at grade n*(minimal distance) the block one degree
    up is empty and the alternating chain on a closest pair is a nonzero
    class, so the ascending search always terminates by then.
    """
    checked = 0
    for entry in _corpus(opts):
        space = entry.space
        if space.n_points < 2:
            continue
        delta = space.min_positive_distance()
        for n in range(1, 4):
            bound = n * delta
            found = None
            for grade in sorted(realizable_grades(space, n, bound)):
                if not homology_group(space, n, grade).is_zero:
                    found = grade
                    break
            if found is None:
                return False, f"{entry.name}: no nonzero group at degree {n} up to grade {bound}"
            checked += 1
    return True, f"{checked} (space, degree) pairs have a nonzero grade"


def claim_decomposition(opts: VerifyOptions):
    """On cut-free spaces the boundary preserves blocks and the blockwise
    groups sum to the direct computation, rank and torsion alike."""
    n_max = 3 if opts.quick else 4
    entries = _corpus(opts)
    if opts.quick:
        entries = _small(entries, 5)
    blocks_checked = 0
    cut_free_names = []
    for entry in entries:
        space = entry.space
        if not check_cut_free(space).holds:
            continue
        cut_free_names.append(entry.name)
        for n in range(0, n_max + 1):
            for grade in sorted(realizable_grades(space, n)):
                dec = decompose(space, n, grade)
                if not dec.closure_ok:
                    return False, f"{entry.name}: closure fails at ({n}, {grade}): {dec.violations[:1]}"
                basis = enumerate_chains(space, n, grade)
                if dec.total_size() != len(basis):
                    return False, f"{entry.name}: blocks do not partition ({n}, {grade})"
                for sig in dec.blocks:
                    u_chain = SimpleChain.build(space, sig.u)  # raises if stuttering
                    if not u_chain.is_crooked():
                        return False, f"{entry.name}: signature {sig.u} not crooked"
                via_blocks = homology_via_blocks(space, n, grade)
                direct = homology_group(space, n, grade)
                if via_blocks != direct:
                    return False, (
                        f"{entry.name} at ({n}, {grade}): blocks give {via_blocks}, "
                        f"direct gives {direct}"
                    )
                blocks_checked += 1
    return True, f"{blocks_checked} blocks on {len(cut_free_names)} cut-free spaces"


def claim_named_classifications(opts: VerifyOptions):
    """The named spaces carry their advertised predicate profile."""
    by_name = {e.name: e for e in standard_corpus()}
    k5 = by_name["k5"].space
    c5 = by_name["cycle5"].space
    k4e = by_name["k4minus"].space
    p3 = by_name["path3"].space
    c5p = by_name["c5plus2"]

    checks = [
        ("k5 cut-free", check_cut_free(k5).holds),
        ("k5 geodetic", check_geodetic(k5).holds),
        ("c5 geodetic", check_geodetic(c5).holds),
        ("c5 not cut-free", not check_cut_free(c5).holds),
        ("c5 cut-free witness", check_cut_free(c5).witness is not None),
        ("k4minus cut-free", check_cut_free(k4e).holds),
        ("k4minus not geodetic", not check_geodetic(k4e).holds),
        ("k4minus geodetic witness", check_geodetic(k4e).witness is not None),
        ("path3 cut-free", check_cut_free(p3).holds),
        ("c5plus2 hole-free", not find_holes(c5p.graph)),
        ("c5plus2 not cut-free", not check_cut_free(c5p.space).holds),
    ]
    bad = [name for name, ok in checks if not ok]
    if bad:
        return False, f"failed: {', '.join(bad)}"
    return True, f"{len(checks)} classifications verified"


def claim_graph_theorems(opts: VerifyOptions):
    """Cut-free graphs have no hole; hole-free graphs without long cycles
    are cut-free; complete graphs are cut-free."""
    scanned = 0

    def check(g) -> str | None:
        nonlocal scanned
        scanned += 1
        space = graph_to_metric(g)
        cut_free = check_cut_free(space).holds
        holes = find_holes(g)
        if cut_free and holes:
            return f"cut-free graph with hole {holes[0].vertices} on {sorted(g.edges)}"
        if not holes and not has_cycle_of_length_at_least(g, 5) and not cut_free:
            return f"hole-free short-cycle graph not cut-free: {sorted(g.edges)}"
        if len(g.edges) == g.n * (g.n - 1) // 2 and not cut_free:
            return f"complete graph not cut-free: n={g.n}"
        return None

    for m in range(1, opts.exhaustive_graphs + 1):
        for g in connected_graphs(m):
            bad = check(g)
            if bad:
                return False, bad
    six = 0
    if not opts.quick:
        for g in canonical_connected_graphs(6, cap=opts.six_vertex_cap):
            six += 1
            bad = check(g)
            if bad:
                return False, bad
    return True, f"{scanned} graphs ({six} six-vertex classes), no counterexample"


def claim_fill(opts: VerifyOptions):
    """The filling construction inverts the boundary exactly where its
    hypotheses hold, and refuses cleanly where they cannot."""
    from .generators import rational_sample

    half3 = rational_sample([0, Fraction(1, 2), 1])
    a = ChainVector.from_terms(half3, [(1, (0, 2, 0, 2))])
    filled = fill_cycle(half3, a)
    if filled.terms() != [(1, (0, 1, 2, 0, 2))]:
        return False, f"fixed instance produced {filled.terms()}"
    if boundary_of(half3, filled) != -a:
        return False, "fixed instance does not bound"

    k2 = graph_to_metric(complete_graph(2))
    try:
        fill_cycle(k2, ChainVector.from_terms(k2, [(1, (0, 1, 0))]))
        return False, "two-point alternating cycle should refuse"
    except NoMengerPoint:
        pass

    if not fill_cycle(half3, ChainVector.zero()).is_zero():
        return False, "zero input should fill to zero"

    from .predicates import iter_crooked_chains

    rng = random.Random(opts.seed)
    n_samples = 10 if opts.quick else 50
    total_filled = 0
    for _ in range(n_samples):
        sample = random_rational_sample(rng.randint(4, 6), rng)
        if not (check_geodetic(sample).holds and check_cut_free(sample).holds):
            return False, "random line sample not geodetic cut-free"
        sample_filled = 0
        for n in (2, 3):
            for seq in iter_crooked_chains(sample, n):
                if sample_filled >= 12:
                    break
                vec = ChainVector.from_terms(sample, [(1, seq)])
                try:
                    lifted = fill_cycle(sample, vec)
                except (NoMengerPoint, OrderNotTotal):
                    continue
                if boundary_of(sample, lifted) != -vec:
                    return False, f"fill of {seq} fails to bound"
                sample_filled += 1
        if sample_filled == 0:
            return False, "sample with no fillable crooked cycle"
        total_filled += sample_filled
    return True, f"{total_filled} crooked cycles filled across {n_samples} samples"


def claim_star_chain(opts: VerifyOptions):
    """The insertion properties weaken in order: star3, star2, star_n, Menger."""
    rng = random.Random(opts.seed)
    spaces = [(e.name, e.space) for e in _corpus(opts)]
    n_random = 20 if opts.quick else 100
    for i in range(n_random):
        spaces.append((f"random{i}", random_metric(rng.randint(3, 7), rng)))
    for name, space in spaces:
        s3 = check_star(space, "star3").holds
        s2 = check_star(space, "star2").holds
        sn = {n: check_star(space, "star_n", n).holds for n in (1, 2, 3)}
        menger = check_menger(space).holds
        if s3 and not s2:
            return False, f"{name}: star3 without star2"
        for n, v in sn.items():
            if s2 and not v:
                return False, f"{name}: star2 without star_{n}"
            if v and not menger:
                return False, f"{name}: star_{n} without Menger"
    return True, f"{len(spaces)} spaces respect the implication chain"


def claim_cutfree_equiv(opts: VerifyOptions):
    """Cut-freeness equals 'straight chains are globally straight' up to degree 5."""
    n_max = opts.n_max
    for entry in _corpus(opts):
        space = entry.space
        a = check_cut_free(space).holds
        b = check_straight_implies_global(space, n_max).holds
        if a != b:
            return False, f"{entry.name}: cut-free={a} but straight=>global={b}"
    return True, f"equivalence holds on {len(_corpus(opts))} spaces at degree <= {n_max}"


# ------------------------------------------------- supplementary invariants


def claim_menger_iff_h1(opts: VerifyOptions):
    """Menger-convexity is equivalent to a vanishing degree-1 group."""
    for entry in _corpus(opts):
        menger = check_menger(entry.space).holds
        h1_empty = not h1_by_formula(entry.space)
        if menger != h1_empty:
            return False, f"{entry.name}: menger={menger}, rank-1 table empty={h1_empty}"
    return True, "equivalence holds on the corpus"


def claim_betweenness_symmetry(opts: VerifyOptions):
    """Betweenness is symmetric in its outer arguments."""
    for entry in _corpus(opts):
        space = entry.space
        for a in space.points():
            for b in space.points():
                for c in space.points():
                    if is_between(space, a, b, c) != is_between(space, c, b, a):
                        return False, f"{entry.name}: asymmetry at {(a, b, c)}"
    return True, "all triples of all corpus spaces"


def claim_straightness_calculus(opts: VerifyOptions):
    """The two quadruple laws of the triangle-equality calculus."""
    for entry in _small(_corpus(opts), 6):
        space = entry.space
        pts = list(space.points())
        for x0 in pts:
            for x1 in pts:
                for x2 in pts:
                    for x3 in pts:
                        q = (x0, x1, x2, x3)
                        if is_between(space, x0, x1, x2) and is_between(space, x0, x2, x3):
                            if not (
                                straight_from_to(space, q, 0, 3)
                                and is_between(space, x0, x1, x2)
                                and is_between(space, x1, x2, x3)
                            ):
                                return False, f"{entry.name}: composition law fails at {q}"
                        if (
                            not is_between(space, x0, x1, x2)
                            and is_between(space, x1, x2, x3)
                            and strictly_between(space, x0, x1, x3)
                        ):
                            return False, f"{entry.name}: contraction law fails at {q}"
    return True, "all quadruples of corpus spaces with <= 6 points"


def claim_window_monotone(opts: VerifyOptions):
    """Contiguous windows inherit straight/crooked; globally straight
    sequences stay globally straight on every window."""
    for entry in _small(_corpus(opts), 5):
        space = entry.space
        for n in range(2, 5):
            for chain in iter_simple_chains(space, n):
                for i in range(n):
                    for j in range(i + 1, n + 1):
                        window = chain.seq[i:j + 1]
                        wp = straightness_profile(space, window)
                        if chain.is_straight() and not wp.all_straight:
                            return False, f"{entry.name}: straight window breaks at {chain.seq}"
                        if chain.is_crooked() and not wp.all_crooked:
                            return False, f"{entry.name}: crooked window breaks at {chain.seq}"
                if seq_length(space, chain.seq) == space.dist[chain.seq[0]][chain.seq[-1]]:
                    for i in range(n):
                        for j in range(i + 1, n + 1):
                            window = chain.seq[i:j + 1]
                            if seq_length(space, window) != space.dist[window[0]][window[-1]]:
                                return False, f"{entry.name}: global straightness not hereditary on {chain.seq}"
    return True, "windows checked on corpus spaces with <= 5 points"


def claim_menger_cutfree_star3(opts: VerifyOptions):
    """No corpus space is Menger-convex and cut-free yet lacks the
    double-sided insertion property (vacuous on finite corpora, asserted
    as absence of counterexamples)."""
    for entry in _corpus(opts):
        space = entry.space
        if check_menger(space).holds and check_cut_free(space).holds:
            if not check_star(space, "star3").holds:
                return False, f"{entry.name} is a counterexample"
    return True, "no counterexample on the corpus"


def claim_geodetic_orders(opts: VerifyOptions):
    """On geodetic spaces every segment order is total."""
    for entry in _corpus(opts):
        space = entry.space
        if not check_geodetic(space).holds:
            continue
        for x0 in space.points():
            for x1 in space.points():
                order = betweenness_order(space, x0, x1)
                if not order.total:
                    return False, f"{entry.name}: order not total at anchors {(x0, x1)}"
    return True, "all anchor pairs of all geodetic corpus spaces"


def naive_invariant_factors(rows: list[list[int]]) -> tuple[int, ...]:
    """Textbook dense Smith reduction, used as the independent oracle.

    Plain euclidean row and column steps, no pivoting strategy, no
    sparsity; slow but obviously correct on small matrices.
    """
    m = [list(map(int, row)) for row in rows]
    if not m or not m[0]:
        return ()
    nr, nc = len(m), len(m[0])
    diag = []
    top = 0
    while top < min(nr, nc):
        pivot = next(
            ((i, j) for i in range(top, nr) for j in range(top, nc) if m[i][j]),
            None,
        )
        if pivot is None:
            break
        i, j = pivot
        m[top], m[i] = m[i], m[top]
        for row in m:
            row[top], row[j] = row[j], row[top]
        while True:
            if m[top][top] < 0:
                m[top] = [-v for v in m[top]]
            for i in range(top + 1, nr):
                while m[i][top]:
                    q = m[i][top] // m[top][top]
                    for c in range(top, nc):
                        m[i][c] -= q * m[top][c]
                    if m[i][top]:
                        m[top], m[i] = m[i], m[top]
                        if m[top][top] < 0:
                            m[top] = [-v for v in m[top]]
            for j in range(top + 1, nc):
                while m[top][j]:
                    q = m[top][j] // m[top][top]
                    for r in range(top, nr):
                        m[r][j] -= q * m[r][top]
                    if m[top][j]:
                        for r in range(top, nr):
                            m[r][top], m[r][j] = m[r][j], m[r][top]
                        if m[top][top] < 0:
                            for r in range(top, nr):
                                m[r][top] = -m[r][top]
            if all(m[i][top] == 0 for i in range(top + 1, nr)) and all(
                m[top][j] == 0 for j in range(top + 1, nc)
            ):
                break
        diag.append(abs(m[top][top]))
        top += 1
    from .snf import divisibility_chain

    return divisibility_chain(diag)


def claim_snf_oracle(opts: VerifyOptions):
    """Sparse Smith form agrees with a naive dense reduction on random input."""
    rng = random.Random(opts.seed)
    trials = 30 if opts.quick else 80
    for t in range(trials):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        rows = [
            [rng.randint(-9, 9) if rng.random() < 0.6 else 0 for _ in range(nc)]
            for _ in range(nr)
        ]
        sparse = SparseIntMatrix.from_entries(
            nr, nc, [(r, c, rows[r][c]) for r in range(nr) for c in range(nc)]
        )
        mine = smith_normal_form(sparse).invariant_factors
        oracle = naive_invariant_factors(rows)
        if mine != oracle:
            return False, f"trial {t}: {rows} -> {mine} vs oracle {oracle}"
    return True, f"{trials} random matrices agree with the dense oracle"


def claim_euler(opts: VerifyOptions):
    """Alternating sums of block dimensions and of ranks agree per grade on
    spaces whose blocks vanish beyond the computed degree."""
    for name in ("singleton", "k2"):
        entry = next(e for e in standard_corpus() if e.name == name)
        space = entry.space
        n_max = 5
        table = homology_table(space, n_max, Fraction(n_max))
        grades = {g for (_, g) in table.entries}
        for grade in grades:
            chi_c = sum(
                (-1) ** n * len(enumerate_chains(space, n, grade))
                for n in range(n_max + 1)
            )
            chi_h = sum(
                (-1) ** n * table.group(n, grade).free_rank for n in range(n_max + 1)
            )
            if chi_c != chi_h:
                return False, f"{name} at grade {grade}: {chi_c} != {chi_h}"
    return True, "euler characteristics match per grade"


def claim_block_signatures(opts: VerifyOptions):
    """Blocks partition every basis, and the extreme signature shapes mean
    straight (two-point signature) and crooked (full signature) chains."""
    checked = 0
    for entry in _small(_corpus(opts), 5):
        space = entry.space
        for n in range(0, 4):
            for grade in sorted(realizable_grades(space, n)):
                dec = decompose(space, n, grade)
                basis = enumerate_chains(space, n, grade)
                if dec.total_size() != len(basis):
                    return False, f"{entry.name}: partition fails at ({n}, {grade})"
                seen = set()
                for block in dec.blocks.values():
                    for c in block.chains:
                        if c.seq in seen:
                            return False, f"{entry.name}: chain in two blocks"
                        seen.add(c.seq)
                for sig, block in dec.blocks.items():
                    for c in block.chains:
                        if block_signature(space, c) != sig:
                            return False, f"{entry.name}: signature mismatch"
                checked += 1
    return True, f"{checked} blocks partition their bases"


CLAIMS: list[tuple[str, str, Callable]] = [
    ("h0-free-on-points", "degree-0 homology at grade 0 is free on the points", claim_h0),
    ("h1-matches-formula", "degree-1 homology equals the extremal-pair count per grade", claim_h1_formula),
    ("boundary-squared-zero", "consecutive boundaries compose to zero and faces keep their grade", claim_boundary_squared),
    ("crooked-iff-cycle", "a simple chain is a cycle exactly when crooked, and its faces are distinct", claim_crooked_cycle),
    ("k2-table", "the two-point space has Z^2 in every degree along the diagonal grades", claim_k2_table),
    ("nonvanishing-low-degrees", "spaces with two or more points have nonzero homology in degrees 1..3", claim_nonvanishing),
    ("block-decomposition-oracle", "blockwise homology equals the direct computation on cut-free spaces", claim_decomposition),
    ("named-classifications", "the named example spaces have their advertised predicate profiles", claim_named_classifications),
    ("graph-theorems", "cut-free implies hole-free; hole-free without long cycles implies cut-free", claim_graph_theorems),
    ("fill-construction", "the filling construction bounds cycles exactly where its hypotheses hold", claim_fill),
    ("star-implication-chain", "the insertion properties weaken in order down to Menger-convexity", claim_star_chain),
    ("cutfree-equiv-straight-global", "cut-freeness equals global straightness of straight chains", claim_cutfree_equiv),
    ("menger-iff-h1-empty", "Menger-convexity is equivalent to vanishing degree-1 homology", claim_menger_iff_h1),
    ("betweenness-symmetric", "betweenness is symmetric in its outer arguments", claim_betweenness_symmetry),
    ("straightness-calculus", "the composition and contraction laws hold on all quadruples", claim_straightness_calculus),
    ("window-monotone", "contiguous windows inherit straightness, crookedness and global straightness", claim_window_monotone),
    ("menger-cutfree-star3", "Menger-convex cut-free spaces have the double-sided insertion property", claim_menger_cutfree_star3),
    ("geodetic-orders-total", "segment orders are total on geodetic spaces", claim_geodetic_orders),
    ("snf-oracle", "the sparse Smith form agrees with a naive dense reduction", claim_snf_oracle),
    ("euler-consistency", "alternating dimension and rank sums agree per grade", claim_euler),
    ("block-partition", "signature blocks partition every basis", claim_block_signatures),
]

CLAIM_IDS = [cid for cid, _, _ in CLAIMS]


def run_claims(opts: VerifyOptions, only: list[str] | None = None) -> SuiteReport:
    for space in opts.extra_spaces:
        if space.approximate:
            raise ApproximateModeRefused()
    report = SuiteReport()
    selected = set(only) if only else None
    for cid, statement, fn in CLAIMS:
        if selected is not None and cid not in selected:
            continue
        t0 = time.perf_counter()
        try:
            ok, details = fn(opts)
            status = "pass" if ok else "fail"
        except ApproximateModeRefused:
            raise
        except Exception as exc:  # a crash is a failed claim, not a crashed suite
            status = "fail"
            details = f"{type(exc).__name__}: {exc}"
        elapsed = (time.perf_counter() - t0) * 1000
        report.results.append(ClaimResult(cid, statement, status, details, elapsed))
    if selected is not None:
        missing = selected - set(CLAIM_IDS)
        for name in sorted(missing):
            report.results.append(ClaimResult(name, "unknown claim id", "fail", "no such claim"))
    return report
