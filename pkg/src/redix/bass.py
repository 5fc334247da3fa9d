"""Associated primes and socle dimensions of monomial quotients.

Every associated prime of R/I for a monomial ideal I is generated by a
subset S of the variables.  Localizing at that prime amounts to setting
the variables outside S to 1; the resulting ideal lives in the ring on
the S variables.  The socle dimension after localizing (the 0-th Bass
number, written mu0) counts monomials u in the S variables with u
outside the localized ideal but x_i * u inside it for every i in S.

Witness monomials are bounded: a witness exponent u_i never reaches the
maximum generator exponent d_i of the localized ideal, since any
generator certifying x_i * u inside would already certify u itself.
That makes the scan over the product of ranges [0, d_i) exhaustive.

The sum of mu0 over all primes equals the reducibility index; the code
here computes it without ever running the splitting decomposition, so
the two routes stay independent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .decompose import decompose
from .errors import UnitIdealError
from .monomial import Monomial, MonomialIdeal, RingContext


@dataclass(frozen=True)
class MonomialPrime:
    """Prime generated by the variables with indices in `support`."""

    support: frozenset[int]
    ring: RingContext

    def __post_init__(self):
        for i in self.support:
            if not 0 <= i < self.ring.n:
                raise ValueError("variable index out of range")

    def as_ideal(self) -> MonomialIdeal:
        gens = []
        for i in sorted(self.support):
            exps = [0] * self.ring.n
            exps[i] = 1
            gens.append(Monomial(tuple(exps), self.ring))
        return MonomialIdeal.from_gens(self.ring, gens)

    def sort_key(self):
        return tuple(sorted(self.support))

    def render(self) -> str:
        if not self.support:
            return "(0)"
        return "(" + ", ".join(self.ring.names[i] for i in sorted(self.support)) + ")"


def localized_ideal(ideal: MonomialIdeal, support) -> MonomialIdeal:
    """Image of the ideal after inverting the variables outside `support`.

    The result lives in the ring on the kept variables (a zero-variable
    ring, meaning the field, when support is empty).
    """
    keep = sorted(support)
    sub = ideal.ring.subring(keep)
    gens = [Monomial(tuple(g.exponents[i] for i in keep), sub) for g in ideal.gens]
    return MonomialIdeal.from_gens(sub, gens)


def bass0(ideal: MonomialIdeal, support) -> tuple[int, tuple[Monomial, ...]]:
    """Socle dimension at the prime on `support`, with witness monomials.

    Returns 0 (no witnesses) for primes that are not associated.  The
    witnesses live in the localized ring.
    """
    local = localized_ideal(ideal, support)
    if local.is_unit:
        return 0, ()
    bounds = local.max_exponents()
    gens = [g.exponents for g in local.gens]
    n = local.ring.n
    witnesses = []
    for exps in itertools.product(*(range(d) for d in bounds)):
        if any(all(a <= b for a, b in zip(g, exps)) for g in gens):
            continue  # already inside
        ok = True
        for i in range(n):
            hit = False
            for g in gens:
                if g[i] <= exps[i] + 1 and all(
                    g[j] <= exps[j] for j in range(n) if j != i
                ):
                    hit = True
                    break
            if not hit:
                ok = False
                break
        if ok:
            witnesses.append(exps)
    return len(witnesses), tuple(Monomial(e, local.ring) for e in sorted(witnesses))


def associated_primes(ideal: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Supports of the irredundant decomposition components."""
    if ideal.is_unit:
        raise UnitIdealError("the unit ideal has no associated primes")
    dec = decompose(ideal)
    return frozenset(MonomialPrime(c.support(), ideal.ring) for c in dec.components)


def associated_primes_by_socle(ideal: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Primes with positive socle dimension, scanning every variable subset.

    Independent of the decomposition route.
    """
    if ideal.is_unit:
        raise UnitIdealError("the unit ideal has no associated primes")
    out = []
    for r in range(ideal.ring.n + 1):
        for subset in itertools.combinations(range(ideal.ring.n), r):
            count, _ = bass0(ideal, subset)
            if count:
                out.append(MonomialPrime(frozenset(subset), ideal.ring))
    return frozenset(out)


def ass_by_colon_scan(ideal: MonomialIdeal) -> frozenset[MonomialPrime]:
    """Brute-force route: primes of the form (I : u) for bounded monomials u.

    Scans u with u_i <= d_i (the maximum generator exponents); beyond
    those bounds the colon stabilizes coordinatewise, so the scan finds
    every prime that occurs.
    """
    if ideal.is_unit:
        raise UnitIdealError("the unit ideal has no associated primes")
    bounds = ideal.max_exponents()
    found = set()
    prime_forms = {}
    for r in range(ideal.ring.n + 1):
        for subset in itertools.combinations(range(ideal.ring.n), r):
            prime_forms[MonomialPrime(frozenset(subset), ideal.ring).as_ideal().gens] = frozenset(
                subset
            )
    for exps in itertools.product(*(range(d + 1) for d in bounds)):
        quot = ideal.colon(Monomial(exps, ideal.ring))
        hit = prime_forms.get(quot.gens)
        if hit is not None:
            found.add(hit)
    return frozenset(MonomialPrime(s, ideal.ring) for s in found)


@dataclass(frozen=True)
class BassReport:
    """Socle dimensions by prime and the index they sum to."""

    ideal: MonomialIdeal
    entries: tuple[tuple[MonomialPrime, int, tuple[Monomial, ...]], ...]
    index: int


def reducibility_index_by_bass(ideal: MonomialIdeal) -> BassReport:
    """Sum of socle dimensions over all primes, found by subset scan.

    Never consults the splitting decomposition.
    """
    if ideal.is_unit:
        raise UnitIdealError("the unit ideal has index 0 by convention; not computed here")
    entries = []
    total = 0
    for r in range(ideal.ring.n + 1):
        for subset in itertools.combinations(range(ideal.ring.n), r):
            count, wits = bass0(ideal, subset)
            if count:
                prime = MonomialPrime(frozenset(subset), ideal.ring)
                entries.append((prime, count, wits))
                total += count
    entries.sort(key=lambda e: e[0].sort_key())
    return BassReport(ideal, tuple(entries), total)


def is_index_one(ideal: MonomialIdeal) -> tuple[bool, str]:
    """Index-one test: one associated prime and socle dimension 1 there.

    The quotient then has irreducible zero; with a single associated
    prime and a one-dimensional socle at it the quotient is generically
    Gorenstein, and conversely.
    """
    report = reducibility_index_by_bass(ideal)
    primes = [e[0] for e in report.entries]
    if len(primes) != 1:
        return False, f"{len(primes)} associated primes"
    prime, count, _ = report.entries[0]
    if count != 1:
        return False, f"socle dimension {count} at {prime.render()}"
    return True, f"single associated prime {prime.render()} with socle dimension 1"
