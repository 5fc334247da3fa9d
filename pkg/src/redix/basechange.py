"""Behavior of the reducibility index under flat ring maps, monomial arena.

Two maps are computable here: adjoining polynomial variables (faithfully
flat) and inverting a set of variables (flat, usually not faithfully
flat).  For both, the index after the map is predicted from data before
the map: sum over the associated primes p of mu0(p) times the index of
the fiber ring at p.  The report recomputes the index directly in the
target ring and compares, so the prediction and the recomputation stay
independent routes.

Fibers are computed, not assumed: the fiber at p under a polynomial
extension is the extended prime, whose index comes out of the splitting
decomposition; under localization a surviving prime keeps a domain
fiber (index 1) and a prime meeting the inverted set collapses to the
zero ring (index 0).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bass import MonomialPrime, bass0, localized_ideal, reducibility_index_by_bass
from .decompose import decompose, reducibility_index_by_decomposition
from .errors import UnitIdealError
from .monomial import Monomial, MonomialIdeal, RingContext


@dataclass(frozen=True)
class PrimeFiber:
    """One associated prime with its socle dimension and fiber index."""

    prime_label: str
    mu0: int
    fiber_index: int


@dataclass(frozen=True)
class BaseChangeReport:
    """Prediction vs direct recomputation for one flat change of rings."""

    kind: str  # "extend" or "invert"
    detail: str
    ir_before: int
    ir_after_formula: int
    ir_after_direct: int
    t_bound: int
    faithfully_flat: bool
    fibers: tuple[PrimeFiber, ...]
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def fresh_names(ring: RingContext, extra: int) -> tuple[str, ...]:
    taken = set(ring.names)
    out = []
    i = 1
    while len(out) < extra:
        cand = f"t{i}"
        if cand not in taken:
            out.append(cand)
            taken.add(cand)
        i += 1
    return tuple(out)


def extend_polynomial(ideal: MonomialIdeal, extra: int, names=None) -> MonomialIdeal:
    """The same generators read in a ring with `extra` new variables."""
    if extra < 0:
        raise ValueError("extra must be nonnegative")
    new_names = tuple(names) if names is not None else fresh_names(ideal.ring, extra)
    if len(new_names) != extra:
        raise ValueError("need exactly `extra` new names")
    big = RingContext(ideal.ring.names + new_names)
    gens = [Monomial(g.exponents + (0,) * extra, big) for g in ideal.gens]
    return MonomialIdeal.from_gens(big, gens)


def _fiber_index_extension(prime: MonomialPrime, big: RingContext, extra: int) -> int:
    """Index of the extended prime in the bigger ring, by decomposition."""
    ext = extend_polynomial(prime.as_ideal(), extra, names=big.names[prime.ring.n :])
    return reducibility_index_by_decomposition(ext)


def extension_report(ideal: MonomialIdeal, extra: int) -> BaseChangeReport:
    """Index before vs after adjoining `extra` polynomial variables."""
    if ideal.is_unit:
        raise UnitIdealError("base change reports need a proper ideal")
    before = reducibility_index_by_bass(ideal)
    extended = extend_polynomial(ideal, extra)
    fibers = []
    formula = 0
    for prime, mu0, _ in before.entries:
        fib = _fiber_index_extension(prime, extended.ring, extra)
        fibers.append(PrimeFiber(prime.render(), mu0, fib))
        formula += mu0 * fib
    direct = reducibility_index_by_decomposition(extended)
    t = max((f.fiber_index for f in fibers), default=1)
    checks = (
        ("prediction matches direct recomputation", formula == direct),
        ("index within [ir, t*ir]", before.index <= direct <= t * before.index),
        (
            "index preserved iff every fiber has index 1",
            (direct == before.index) == all(f.fiber_index == 1 for f in fibers),
        ),
    )
    return BaseChangeReport(
        kind="extend",
        detail=f"adjoin {extra} variable(s)",
        ir_before=before.index,
        ir_after_formula=formula,
        ir_after_direct=direct,
        t_bound=t,
        faithfully_flat=True,
        fibers=tuple(fibers),
        checks=checks,
    )


def localization_report(ideal: MonomialIdeal, inverted) -> BaseChangeReport:
    """Index before vs after inverting the variables with indices in `inverted`.

    A prime survives when its support avoids the inverted set; the others
    get the zero fiber.  Equality with the original index holds exactly
    when every associated prime survives.
    """
    if ideal.is_unit:
        raise UnitIdealError("base change reports need a proper ideal")
    inverted = frozenset(inverted)
    for i in inverted:
        if not 0 <= i < ideal.ring.n:
            raise ValueError("inverted variable index out of range")
    before = reducibility_index_by_bass(ideal)
    keep = [i for i in range(ideal.ring.n) if i not in inverted]
    local = localized_ideal(ideal, keep)

    fibers = []
    formula = 0
    for prime, mu0, _ in before.entries:
        if prime.support & inverted:
            fib = 0
        else:
            # the prime survives; its image in the localized ring is the
            # prime on the same variables, a domain quotient
            image_support = [keep.index(i) for i in sorted(prime.support)]
            image = MonomialPrime(frozenset(image_support), local.ring).as_ideal()
            fib = reducibility_index_by_decomposition(image)
        fibers.append(PrimeFiber(prime.render(), mu0, fib))
        formula += mu0 * fib
    direct = 0 if local.is_unit else reducibility_index_by_decomposition(local)
    t = max((f.fiber_index for f in fibers), default=1)
    all_survive = all(f.fiber_index >= 1 for f in fibers)
    checks = (
        ("prediction matches direct recomputation", formula == direct),
        ("index never grows", direct <= before.index),
        (
            "index preserved iff every associated prime avoids the inverted set",
            (direct == before.index) == all_survive,
        ),
    )
    return BaseChangeReport(
        kind="invert",
        detail="invert {" + ", ".join(ideal.ring.names[i] for i in sorted(inverted)) + "}",
        ir_before=before.index,
        ir_after_formula=formula,
        ir_after_direct=direct,
        t_bound=t,
        faithfully_flat=not inverted,
        fibers=tuple(fibers),
        checks=checks,
    )


def localize_index(ideal: MonomialIdeal, inverted) -> int:
    """Index after inverting the given variables, by direct recomputation."""
    report = localization_report(ideal, inverted)
    return report.ir_after_direct


def flat_base_change_report(ideal: MonomialIdeal, change) -> BaseChangeReport:
    """Dispatch on a change descriptor: ("extend", k) or ("invert", indices)."""
    kind, arg = change
    if kind == "extend":
        return extension_report(ideal, arg)
    if kind == "invert":
        return localization_report(ideal, arg)
    raise ValueError(f"unknown change kind {kind!r}")
