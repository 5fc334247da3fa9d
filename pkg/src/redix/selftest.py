"""Bundled verification suites behind the `selftest` CLI command.

Each suite names one law and checks it on either a seeded random sample
or an exhaustive enumeration.  The two sides of every law are computed
by routes that share as little code as the arena allows: splitting
against socle scans, formulas against direct recomputation in the
target ring, factor counts against submodule lattices, corner counts
against cover searches.  Random suites honor the seed; exhaustive
suites ignore it.

Two statements the arenas cannot reach are listed as documented,
untested, rather than silently dropped; see DOCUMENTED_UNTESTED.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .abelian import (
    FiniteAbelianGroup,
    abelian_group_classes,
    additivity_report,
    attached_primes,
    characterization_report,
    quotient_monotonicity_report,
    secondary_representation,
    sum_index_formula,
    sum_reducibility_index_bruteforce,
)
from .bass import bass0, reducibility_index_by_bass
from .basechange import extension_report, localization_report
from .decompose import decompose
from .gfpoly import (
    ExtField,
    PrimeField,
    UniPoly,
    factor,
    field_extension_report,
    hypersurface_index,
    hypersurface_index_bruteforce,
    irreducible_modulus,
    is_irreducible,
    monic_polys,
)
from .monomial import Monomial, MonomialIdeal, RingContext
from .staircase import (
    Staircase,
    dual_single_generator_check,
    irredundant_cover_sizes,
    maximal_elements,
    min_cover_oracle,
    quotient_index,
    socle_matches_dual_generators,
    sum_covers_iff_dual_disjoint,
    sum_irreducible_representation,
    DownsetSubmodule,
    dual_index_report,
)

FAILURE_SAMPLE_CAP = 5

DOCUMENTED_UNTESTED = (
    "Strict gap between the index of a module and the sum-index of its"
    " dual: the known witness is a one-dimensional local domain whose"
    " completion is not reduced (a construction of Ferrand and Raynaud),"
    " which has no finite presentation at desk scale. Documented,"
    " untested.",
    "Growth of the index when passing to the completion: the same ring is"
    " the only known witness, and every arena built here is already"
    " complete for length reasons, so completion changes nothing that can"
    " be exercised. Documented, untested.",
)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    scope: str
    mode: str
    law: str
    checks: int
    failure_count: int
    failure_samples: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.failure_count == 0


@dataclass(frozen=True)
class SelftestReport:
    scope: str
    seed: int
    results: tuple[SuiteResult, ...]
    documented_untested: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def total_checks(self) -> int:
        return sum(r.checks for r in self.results)


class _Recorder:
    def __init__(self):
        self.checks = 0
        self.failure_count = 0
        self.samples: list[str] = []

    def check(self, ok: bool, detail: str) -> None:
        self.checks += 1
        if not ok:
            self.failure_count += 1
            if len(self.samples) < FAILURE_SAMPLE_CAP:
                self.samples.append(detail)


# ------------------------------------------------------------- samplers


def random_ideal(rng: random.Random, ring: RingContext, max_exp: int, max_gens: int = 6) -> MonomialIdeal:
    """Random proper monomial ideal; may come out zero, never unit."""
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(ring.n))
        if any(exps):
            gens.append(Monomial(exps, ring))
    return MonomialIdeal.from_gens(ring, gens)


def ideal_sample(seed: int, count: int, max_vars: int, max_exp: int) -> list[MonomialIdeal]:
    rng = random.Random(f"{seed}:ideals:{count}:{max_vars}:{max_exp}")
    rings = {n: RingContext.default(n) for n in range(1, max_vars + 1)}
    return [random_ideal(rng, rings[rng.randint(1, max_vars)], max_exp) for _ in range(count)]


def finite_colength_sample(seed: int, count: int) -> list[MonomialIdeal]:
    """Random finite-colength ideals with staircases of at most 25 monomials."""
    rng = random.Random(f"{seed}:boxes:{count}")
    rings = {n: RingContext.default(n) for n in (1, 2, 3)}
    out = []
    attempts = 0
    while len(out) < count and attempts < 40 * count:
        attempts += 1
        ring = rings[rng.randint(1, 3)]
        gens = []
        for i in range(ring.n):
            exps = [0] * ring.n
            exps[i] = rng.randint(1, 4)
            gens.append(Monomial(tuple(exps), ring))
        for _ in range(rng.randint(0, 3)):
            exps = tuple(rng.randint(0, 3) for _ in range(ring.n))
            if any(exps):
                gens.append(Monomial(exps, ring))
        ideal = MonomialIdeal.from_gens(ring, gens)
        if ideal.is_unit:
            continue
        if len(ideal.standard_monomials()) <= 25:
            out.append(ideal)
    return out


def two_variable_ideals(max_exp: int = 3):
    """Every monomial ideal in two variables with generator exponents <= max_exp.

    Enumerated as antichains in the exponent box; includes the zero
    ideal (empty antichain) and the unit ideal (the single monomial 1).
    """
    ring = RingContext.default(2)
    box = [(a, b) for a in range(max_exp + 1) for b in range(max_exp + 1)]

    def divides(u, v):
        return u[0] <= v[0] and u[1] <= v[1]

    out = []

    def grow(i, chosen):
        if i == len(box):
            out.append(MonomialIdeal.from_gens(ring, [Monomial(e, ring) for e in chosen]))
            return
        grow(i + 1, chosen)
        cand = box[i]
        if all(not divides(cand, c) and not divides(c, cand) for c in chosen):
            grow(i + 1, chosen + [cand])

    grow(0, [])
    return out


def all_staircases(n: int, max_size: int) -> list[Staircase]:
    """Every staircase on at most max_size monomials in n variables."""
    ring = RingContext.default(n)
    origin = (0,) * n
    seen = {frozenset([origin])}
    frontier = [frozenset([origin])]
    while frontier:
        new = []
        for s in frontier:
            if len(s) == max_size:
                continue
            for m in s:
                for i in range(n):
                    up = list(m)
                    up[i] += 1
                    up = tuple(up)
                    if up in s:
                        continue
                    if all(
                        tuple(up[j] - (1 if j == k else 0) for j in range(n)) in s
                        for k in range(n)
                        if up[k]
                    ):
                        grown = s | {up}
                        if grown not in seen:
                            seen.add(grown)
                            new.append(grown)
        frontier = new
    ordered = sorted(seen, key=lambda s: (len(s), sorted(s)))
    return [Staircase.from_exponents(ring, s) for s in ordered]


def _downset_masks(g: Staircase) -> tuple[list[tuple[int, ...]], list[int]]:
    """Element order and the masks of every downset of the staircase."""
    order = [m.exponents for m in g.sorted_monomials()]
    pos = {e: i for i, e in enumerate(order)}
    n = g.ring.n
    preds = []
    for e in order:
        pm = 0
        for k in range(n):
            if e[k]:
                below = tuple(e[j] - (1 if j == k else 0) for j in range(n))
                pm |= 1 << pos[below]
        preds.append(pm)
    masks = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            for i in range(len(order)):
                bit = 1 << i
                if not (mask & bit) and not (preds[i] & ~mask):
                    grown = mask | bit
                    if grown not in masks:
                        masks.add(grown)
                        nxt.append(grown)
        frontier = nxt
    return order, sorted(masks)


# --------------------------------------------------------------- suites


def _suite_index_socle_agreement(seed: int, rec: _Recorder) -> None:
    for ideal in ideal_sample(seed, 1000, 4, 5):
        a = decompose(ideal).count
        b = reducibility_index_by_bass(ideal).index
        rec.check(a == b, f"{ideal.render()}: splitting {a} vs socle sum {b}")
    for ideal in two_variable_ideals(3):
        if ideal.is_unit:
            continue
        a = decompose(ideal).count
        b = reducibility_index_by_bass(ideal).index
        rec.check(a == b, f"{ideal.render()}: splitting {a} vs socle sum {b}")


def _suite_decomposition_uniqueness(seed: int, rec: _Recorder) -> None:
    strategies = (("first", None), ("last", None), ("random", 0), ("random", 1))
    for ideal in ideal_sample(seed, 1000, 4, 5):
        outcomes = []
        for strategy, extra in strategies:
            dec = decompose(ideal, strategy=strategy, seed=extra)
            outcomes.append(frozenset(c.bounds for c in dec.components))
        rec.check(
            all(o == outcomes[0] for o in outcomes),
            f"{ideal.render()}: components differ across strategies",
        )
        dec = decompose(ideal)
        by_support: dict[frozenset, int] = {}
        for comp in dec.components:
            sup = comp.support()
            by_support[sup] = by_support.get(sup, 0) + 1
        n = ideal.ring.n
        socle_counts = {}
        for r in range(n + 1):
            for subset in itertools.combinations(range(n), r):
                cnt, _ = bass0(ideal, subset)
                if cnt:
                    socle_counts[frozenset(subset)] = cnt
        rec.check(
            by_support == socle_counts,
            f"{ideal.render()}: per-prime counts {by_support} vs socle {socle_counts}",
        )


def _suite_variable_extension(seed: int, rec: _Recorder) -> None:
    sample = ideal_sample(seed, 500, 3, 4)
    for j, ideal in enumerate(sample):
        rep = extension_report(ideal, 1 + (j % 2))
        rec.check(
            rep.passed and rep.ir_after_direct == rep.ir_before,
            f"{ideal.render()} + {1 + (j % 2)} vars: {rep.ir_before} -> {rep.ir_after_direct}",
        )


def _suite_localization(seed: int, rec: _Recorder) -> None:
    for ideal in ideal_sample(seed, 200, 3, 4):
        n = ideal.ring.n
        for r in range(n + 1):
            for subset in itertools.combinations(range(n), r):
                rep = localization_report(ideal, subset)
                rec.check(
                    rep.passed,
                    f"{ideal.render()} inverting {subset}: formula "
                    f"{rep.ir_after_formula} vs direct {rep.ir_after_direct}",
                )


def _suite_factorization_soundness(seed: int, rec: _Recorder) -> None:
    def check_poly(f: UniPoly) -> None:
        fac = factor(f)
        keys = [p.sort_key() for p, _ in fac.factors]
        rec.check(
            fac.reconstruct() == f
            and len(set(keys)) == len(keys)
            and keys == sorted(keys)
            and all(is_irreducible(p) for p, _ in fac.factors),
            f"{f.render()} over {f.field.render()}: bad factorization",
        )

    for d in range(1, 7):
        for f in monic_polys(PrimeField(2), d):
            check_poly(f)
    for d in range(1, 5):
        for f in monic_polys(PrimeField(3), d):
            check_poly(f)
    rng = random.Random(f"{seed}:factor")
    for p, dmax, count in ((5, 4, 60), (13, 3, 40)):
        field = PrimeField(p)
        for _ in range(count):
            deg = rng.randint(1, dmax)
            coeffs = [rng.randrange(p) for _ in range(deg)] + [1]
            check_poly(UniPoly.make(field, coeffs))


def _suite_field_extension(seed: int, rec: _Recorder) -> None:
    base = PrimeField(2)
    for k in (2, 3):
        ext = ExtField(base, irreducible_modulus(2, k))
        for d in range(1, 6):
            for f in monic_polys(base, d):
                rep = field_extension_report(f, ext)
                rec.check(
                    rep.passed,
                    f"{f.render()} into GF(2^{k}): "
                    + "; ".join(name for name, ok in rep.checks if not ok),
                )


def _suite_hypersurface(seed: int, rec: _Recorder) -> None:
    for p, dmax in ((2, 6), (3, 4)):
        field = PrimeField(p)
        for d in range(1, dmax + 1):
            for f in monic_polys(field, d):
                by_factors = hypersurface_index(f)
                by_lattice = hypersurface_index_bruteforce(f)
                single = factor(f).distinct_count == 1
                rec.check(
                    by_factors == by_lattice and (by_lattice == 1) == single,
                    f"{f.render()} over GF({p}): factors {by_factors},"
                    f" lattice {by_lattice}",
                )


def _dual_sample(seed: int) -> list[MonomialIdeal]:
    sample = finite_colength_sample(seed, 120)
    for ideal in two_variable_ideals(3):
        if not ideal.is_unit and ideal.is_finite_colength():
            if len(ideal.standard_monomials()) <= 25:
                sample.append(ideal)
    return sample


def _suite_finite_length_duality(seed: int, rec: _Recorder) -> None:
    for ideal in _dual_sample(seed):
        rep = dual_index_report(ideal)
        rec.check(
            rep.all_equal,
            f"{ideal.render()}: splitting {rep.ir_decomposition}, socle "
            f"{rep.ir_socle_formula}, corners {rep.dual_generator_count}, "
            f"cover {rep.min_cover}",
        )
        soc, corners = socle_matches_dual_generators(ideal)
        rec.check(soc == corners, f"{ideal.render()}: socle {soc} vs corners {corners}")
        one_dec, one_dual = dual_single_generator_check(ideal)
        rec.check(
            one_dec == one_dual,
            f"{ideal.render()}: irreducible {one_dec} vs one-generated dual {one_dual}",
        )


def _suite_cover_uniqueness(seed: int, rec: _Recorder) -> None:
    for ideal in _dual_sample(seed):
        g = Staircase.from_ideal(ideal)
        if g.size > 12:
            continue
        sizes = irredundant_cover_sizes(g)
        expected = len(maximal_elements(g))
        rec.check(
            sizes == {expected},
            f"{ideal.render()}: irredundant cover sizes {sorted(sizes)}",
        )


def _suite_downset_sum(seed: int, rec: _Recorder) -> None:
    for n in (1, 2, 3):
        for g in all_staircases(n, 10):
            order, masks = _downset_masks(g)
            full = (1 << len(order)) - 1
            bad = 0
            pairs = 0
            for i, bm in enumerate(masks):
                nb = full ^ bm
                for cm in masks[i:]:
                    # sum side: the union of the two downsets is everything;
                    # dual side: the complement upsets (the quotient duals)
                    # meet in nothing
                    covers = (bm | cm) == full
                    duals_disjoint = (nb & (full ^ cm)) == 0
                    if covers != duals_disjoint:
                        bad += 1
                    pairs += 1
            rec.checks += pairs - 1
            rec.check(bad == 0, f"staircase {sorted(order)}: {bad} mismatched pairs")
    # set-level route on the small staircases, sharing no mask logic
    for n in (1, 2):
        for g in all_staircases(n, 6):
            members = list(g.monomials)
            downsets = []
            for size in range(len(members) + 1):
                for combo in itertools.combinations(members, size):
                    chosen = frozenset(combo)
                    if all(
                        m in chosen
                        for u in chosen
                        for m in g.monomials
                        if m.divides(u)
                    ):
                        downsets.append(DownsetSubmodule(g, chosen))
            for b in downsets:
                for c in downsets:
                    left, right = sum_covers_iff_dual_disjoint(g, b, c)
                    rec.check(
                        left == right,
                        f"staircase {g.size}: set-level sum lemma mismatch",
                    )


def _suite_dual_corner_counts(seed: int, rec: _Recorder) -> None:
    for n in (1, 2, 3):
        for g in all_staircases(n, 10):
            ideal = g.ideal()
            soc, corners = socle_matches_dual_generators(ideal)
            rec.check(soc == corners, f"{ideal.render()}: socle {soc} vs corners {corners}")
            parts, count = sum_irreducible_representation(g)
            rec.check(
                count == corners,
                f"{ideal.render()}: representation size {count} vs corners {corners}",
            )
            order, masks = _downset_masks(g)
            by_exp = {e: m for e, m in zip(order, g.sorted_monomials())}
            worst = 0
            for mask in masks:
                chosen = frozenset(
                    by_exp[order[i]] for i in range(len(order)) if mask >> i & 1
                )
                worst = max(worst, quotient_index(g, DownsetSubmodule(g, chosen)))
            rec.check(
                worst <= corners,
                f"{ideal.render()}: quotient index {worst} above {corners}",
            )


def _suite_abelian_agreement(seed: int, rec: _Recorder) -> None:
    for group in abelian_group_classes(64):
        report = sum_reducibility_index_bruteforce(group)
        formula = sum_index_formula(group)
        rec.check(
            report.index == formula,
            f"{group.render()}: search {report.index} vs formula {formula}",
        )


def _suite_abelian_attached_bound(seed: int, rec: _Recorder) -> None:
    for group in abelian_group_classes(64):
        if group.is_trivial:
            continue
        index = sum_reducibility_index_bruteforce(group).index
        att = attached_primes(group)
        rec.check(
            index >= len(att),
            f"{group.render()}: index {index} below attached count {len(att)}",
        )


def _suite_abelian_classification(seed: int, rec: _Recorder) -> None:
    for group in abelian_group_classes(64):
        report = characterization_report(group)
        rec.checks += report.subgroups_checked - 1 if report.subgroups_checked else 0
        rec.check(
            report.passed,
            f"{group.render()}: {len(report.mismatches)} subgroups misclassified",
        )


def _suite_abelian_secondary(seed: int, rec: _Recorder) -> None:
    for group in abelian_group_classes(64):
        if group.is_trivial:
            continue
        report = secondary_representation(group)
        divisors = tuple(sorted({p for p in group.primes}))
        rec.check(
            report.passed and report.attached == divisors,
            f"{group.render()}: secondary split failed",
        )


def _suite_abelian_additivity(seed: int, rec: _Recorder) -> None:
    for group in abelian_group_classes(64):
        report = additivity_report(group)
        rec.check(
            report.passed,
            f"{group.render()}: whole {report.whole_index}, parts "
            f"{report.part_indices}, formula {report.formula_index}",
        )


def _suite_abelian_quotients(seed: int, rec: _Recorder) -> None:
    for group in abelian_group_classes(32):
        report = quotient_monotonicity_report(group)
        rec.checks += report.quotients_checked - 1 if report.quotients_checked else 0
        rec.check(
            report.passed,
            f"{group.render()}: quotient index up to {report.max_quotient_index}"
            f" vs whole {report.whole_index}",
        )


@dataclass(frozen=True)
class Suite:
    name: str
    scope: str
    mode: str
    law: str
    run: object


SUITES: tuple[Suite, ...] = (
    Suite(
        "index-socle-agreement",
        "monomial",
        "mixed",
        "the splitting count of an irredundant decomposition equals the sum"
        " of socle dimensions over all coordinate localizations",
        _suite_index_socle_agreement,
    ),
    Suite(
        "decomposition-uniqueness",
        "monomial",
        "random",
        "the irredundant decomposition is independent of splitting strategy"
        " and its per-prime multiplicities are the socle dimensions",
        _suite_decomposition_uniqueness,
    ),
    Suite(
        "variable-extension-invariance",
        "basechange",
        "random",
        "adjoining polynomial variables preserves the index, matching the"
        " fiber formula with every fiber trivial",
        _suite_variable_extension,
    ),
    Suite(
        "localization-formula",
        "basechange",
        "random",
        "inverting variables keeps exactly the surviving primes: the fiber"
        " formula matches direct recomputation, the index never grows, and"
        " it is preserved exactly when every associated prime survives",
        _suite_localization,
    ),
    Suite(
        "factorization-soundness",
        "univariate",
        "mixed",
        "trial-division factorizations reconstruct their input from distinct"
        " irreducible factors in canonical order",
        _suite_factorization_soundness,
    ),
    Suite(
        "field-extension-fibers",
        "univariate",
        "exhaustive",
        "after a finite field extension the index is the sum of the fiber"
        " indices, bounded between the old index and its multiple by the"
        " extension degree, with equality exactly when all factors stay"
        " irreducible",
        _suite_field_extension,
    ),
    Suite(
        "hypersurface-index",
        "univariate",
        "exhaustive",
        "for one-variable hypersurfaces the index is the number of distinct"
        " irreducible factors, confirmed by the submodule-lattice oracle,"
        " and equals one exactly for powers of a single irreducible",
        _suite_hypersurface,
    ),
    Suite(
        "finite-length-duality",
        "dual",
        "mixed",
        "for finite-colength ideals the splitting count, the socle sum, the"
        " staircase corner count, and the minimum principal-downset cover"
        " agree",
        _suite_finite_length_duality,
    ),
    Suite(
        "cover-uniqueness",
        "dual",
        "mixed",
        "every irredundant cover of a staircase by principal downsets has"
        " the same size",
        _suite_cover_uniqueness,
    ),
    Suite(
        "downset-sum-lemma",
        "dual",
        "exhaustive",
        "two downsets sum to the whole dual module exactly when their"
        " complement upsets are disjoint",
        _suite_downset_sum,
    ),
    Suite(
        "dual-corner-counts",
        "dual",
        "exhaustive",
        "socle dimension equals staircase corner count, the dual is"
        " one-generated exactly when zero is irreducible, and dual"
        " quotients never gain corners",
        _suite_dual_corner_counts,
    ),
    Suite(
        "abelian-index-agreement",
        "abelian",
        "exhaustive",
        "the exhaustive search index equals the cyclic-factor count for"
        " every abelian group of order at most 64, with all irredundant"
        " representations equicardinal",
        _suite_abelian_agreement,
    ),
    Suite(
        "abelian-attached-bound",
        "abelian",
        "exhaustive",
        "the index is at least the number of attached primes",
        _suite_abelian_attached_bound,
    ),
    Suite(
        "abelian-irreducible-classification",
        "abelian",
        "exhaustive",
        "a nontrivial subgroup is sum-irreducible exactly when it is cyclic"
        " of prime-power order",
        _suite_abelian_classification,
    ),
    Suite(
        "abelian-secondary-split",
        "abelian",
        "exhaustive",
        "the primary decomposition is a secondary representation: every"
        " integer acts surjectively or nilpotently on each part, and the"
        " attached primes are the primes dividing the order",
        _suite_abelian_secondary,
    ),
    Suite(
        "abelian-additivity",
        "abelian",
        "exhaustive",
        "the index of a finite abelian group is the sum of the indices of"
        " its primary parts",
        _suite_abelian_additivity,
    ),
    Suite(
        "abelian-quotient-monotonicity",
        "abelian",
        "exhaustive",
        "quotients never raise the index, and quotients of a sum-irreducible"
        " group stay sum-irreducible",
        _suite_abelian_quotients,
    ),
)

SCOPES = ("all",) + tuple(dict.fromkeys(s.scope for s in SUITES))


def run_selftest(scope: str = "all", seed: int = 0) -> SelftestReport:
    """Run the selected suites and collect one result per law."""
    names = {s.name for s in SUITES}
    if scope not in SCOPES and scope not in names:
        raise ValueError(
            f"unknown scope {scope!r}; choose one of {', '.join(SCOPES)}"
            " or a suite name"
        )
    results = []
    for suite in SUITES:
        if scope not in ("all", suite.scope, suite.name):
            continue
        rec = _Recorder()
        suite.run(seed, rec)
        results.append(
            SuiteResult(
                name=suite.name,
                scope=suite.scope,
                mode=suite.mode,
                law=suite.law,
                checks=rec.checks,
                failure_count=rec.failure_count,
                failure_samples=tuple(rec.samples),
            )
        )
    return SelftestReport(
        scope=scope,
        seed=seed,
        results=tuple(results),
        documented_untested=DOCUMENTED_UNTESTED,
    )
