"""Monomials and monomial ideals in a fixed polynomial ring.

A monomial is an exponent vector over the ring's variables; a monomial
ideal is stored canonically as the lex-sorted antichain of its minimal
generators.  The zero ideal is the empty generator list and the unit
ideal is the single all-zero monomial.  All values are immutable, so
they hash, compare, and can be shared freely.

A ring with zero variables is allowed: it models the coefficient field,
which shows up when every variable of a localization is inverted.  The
input grammar never produces it directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InfiniteColengthError, SizeCapError

MAX_EXPONENT = 10**6  # larger exponents are refused, not silently accepted

_DEFAULT_NAMES = ("x", "y", "z", "w")


@dataclass(frozen=True)
class RingContext:
    """Variable names of the ambient polynomial ring over a field."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        for nm in self.names:
            if not nm or not nm.replace("_", "a").isalnum() or nm[0].isdigit():
                raise ValueError(f"bad variable name: {nm!r}")

    @property
    def n(self) -> int:
        return len(self.names)

    @staticmethod
    def make(names) -> "RingContext":
        return RingContext(tuple(names))

    @staticmethod
    def default(n: int) -> "RingContext":
        if n <= len(_DEFAULT_NAMES):
            return RingContext(_DEFAULT_NAMES[:n])
        return RingContext(tuple(f"x{i+1}" for i in range(n)))

    def monomial(self, *exponents: int) -> "Monomial":
        return Monomial(tuple(exponents), self)

    def subring(self, keep) -> "RingContext":
        """Ring on the variables whose indices are in `keep`, original order."""
        idx = sorted(keep)
        return RingContext(tuple(self.names[i] for i in idx))


@dataclass(frozen=True)
class Monomial:
    """Exponent vector; the unit monomial is all zeros."""

    exponents: tuple[int, ...]
    ring: RingContext

    def __post_init__(self):
        if len(self.exponents) != self.ring.n:
            raise ValueError("exponent vector length does not match ring")
        for e in self.exponents:
            if e < 0:
                raise ValueError("negative exponent")
            if e > MAX_EXPONENT:
                raise SizeCapError(f"exponent {e} exceeds cap {MAX_EXPONENT}")

    @property
    def is_unit(self) -> bool:
        return not any(self.exponents)

    def degree(self) -> int:
        return sum(self.exponents)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(map(max, self.exponents, other.exponents)), self.ring)

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(map(min, self.exponents, other.exponents)), self.ring)

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)), self.ring)

    def colon_by(self, u: "Monomial") -> "Monomial":
        """self / gcd(self, u), the generator image under the colon by u."""
        return Monomial(
            tuple(max(a - b, 0) for a, b in zip(self.exponents, u.exponents)), self.ring
        )

    def render(self) -> str:
        parts = []
        for name, e in zip(self.ring.names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.render()


def _minimal_antichain(monos):
    """Drop every monomial divisible by another; dedupe; sort lex descending."""
    uniq = set(m.exponents for m in monos)
    if not uniq:
        return ()
    ring = monos[0].ring
    kept = []
    # sorting by total degree first makes each divisor appear before its multiples
    for e in sorted(uniq, key=lambda t: (sum(t), t)):
        if not any(all(a <= b for a, b in zip(k, e)) for k in kept):
            kept.append(e)
    return tuple(Monomial(e, ring) for e in sorted(kept, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """Canonical form: minimal generators, lex sorted.  Build via from_gens."""

    ring: RingContext
    gens: tuple[Monomial, ...]

    @staticmethod
    def from_gens(ring: RingContext, gens) -> "MonomialIdeal":
        gens = list(gens)
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        return MonomialIdeal(ring, _minimal_antichain(gens))

    @staticmethod
    def zero(ring: RingContext) -> "MonomialIdeal":
        return MonomialIdeal(ring, ())

    @staticmethod
    def unit(ring: RingContext) -> "MonomialIdeal":
        return MonomialIdeal(ring, (Monomial((0,) * ring.n, ring),))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def contains(self, u: Monomial) -> bool:
        """Monomial membership: some generator divides u."""
        return any(g.divides(u) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def plus(self, extra) -> "MonomialIdeal":
        return MonomialIdeal.from_gens(self.ring, list(self.gens) + list(extra))

    def colon(self, u: Monomial) -> "MonomialIdeal":
        """(I : u) = (g / gcd(g, u) for g in gens)."""
        return MonomialIdeal.from_gens(self.ring, [g.colon_by(u) for g in self.gens])

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Pairwise lcms of generators, then minimalize."""
        if self.ring != other.ring:
            raise ValueError("ideals over different rings")
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.ring)
        lcms = [a.lcm(b) for a in self.gens for b in other.gens]
        return MonomialIdeal.from_gens(self.ring, lcms)

    def max_exponents(self) -> tuple[int, ...]:
        """Per-variable maximum exponent over the generators (0 if absent)."""
        out = [0] * self.ring.n
        for g in self.gens:
            for i, e in enumerate(g.exponents):
                if e > out[i]:
                    out[i] = e
        return tuple(out)

    def is_finite_colength(self) -> bool:
        """True when every variable appears as a pure power among the gens."""
        if self.ring.n == 0:
            return True
        pure = [False] * self.ring.n
        for g in self.gens:
            supp = [i for i, e in enumerate(g.exponents) if e]
            if len(supp) == 1:
                pure[supp[0]] = True
            elif not supp:  # unit ideal
                return True
        return all(pure)

    def standard_monomials(self) -> frozenset[Monomial]:
        """All monomials outside the ideal; requires finite colength."""
        if not self.is_finite_colength():
            raise InfiniteColengthError(f"{self.render()} does not have finite colength")
        if self.is_unit:
            return frozenset()
        bounds = []
        for i in range(self.ring.n):
            b = min(
                g.exponents[i]
                for g in self.gens
                if g.exponents[i] and g.support() == {i}
            )
            bounds.append(b)
        out = []
        for exps in itertools.product(*(range(b) for b in bounds)):
            u = Monomial(exps, self.ring)
            if not self.contains(u):
                out.append(u)
        return frozenset(out)

    def render(self) -> str:
        if self.is_zero:
            return "0"
        return ", ".join(g.render() for g in self.gens)

    def __str__(self) -> str:
        return self.render()


def minimalize(ring: RingContext, gens) -> MonomialIdeal:
    """Canonical minimal-generator form of the ideal generated by `gens`."""
    return MonomialIdeal.from_gens(ring, gens)
