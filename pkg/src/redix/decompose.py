"""Irreducible decomposition of monomial ideals by generator splitting.

An irreducible monomial ideal is generated by pure powers of a subset of
the variables; it is recorded as a bounds vector, entry 0 meaning the
variable is absent.  A monomial lies in the component when some bound is
met: u is inside exactly when u_i >= bounds_i for some i with bounds_i >= 1.

The decomposition recursion: choose a generator whose support has at
least two variables, write it as  x_i^a * w  with w coprime to x_i, and
use  I + (m) = (I + (x_i^a)) /\\ (I + (w))  for coprime splits.  The base
case (all generators pure powers) is a single component.  Which variable
is split first is a strategy choice; every strategy must reach the same
irredundant decomposition, and the test suites drive several.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidCandidatesError, UnitIdealError
from .monomial import Monomial, MonomialIdeal, RingContext


@dataclass(frozen=True)
class IrreducibleComponent:
    """Bounds vector of a pure-power ideal.  All zero only for the zero ideal."""

    bounds: tuple[int, ...]
    ring: RingContext

    def __post_init__(self):
        if len(self.bounds) != self.ring.n:
            raise ValueError("bounds length does not match ring")
        if any(b < 0 for b in self.bounds):
            raise ValueError("negative bound")

    def support(self) -> frozenset[int]:
        return frozenset(i for i, b in enumerate(self.bounds) if b)

    def contains_monomial(self, u: Monomial) -> bool:
        return any(b and e >= b for b, e in zip(self.bounds, u.exponents))

    def contains_ideal(self, ideal: MonomialIdeal) -> bool:
        """Component contains the ideal iff it contains every generator."""
        return all(self.contains_monomial(g) for g in ideal.gens)

    def as_ideal(self) -> MonomialIdeal:
        gens = []
        for i, b in enumerate(self.bounds):
            if b:
                exps = [0] * self.ring.n
                exps[i] = b
                gens.append(Monomial(tuple(exps), self.ring))
        return MonomialIdeal.from_gens(self.ring, gens)

    def render(self) -> str:
        ideal = self.as_ideal()
        return "0" if ideal.is_zero else f"({ideal.render()})"


@dataclass(frozen=True)
class Decomposition:
    """Irredundant irreducible decomposition, components sorted by bounds."""

    ideal: MonomialIdeal
    components: tuple[IrreducibleComponent, ...]

    def __post_init__(self):
        if len(set(c.bounds for c in self.components)) != len(self.components):
            raise ValueError("duplicate components")
        for c in self.components:
            if not any(c.bounds) and len(self.components) != 1:
                raise ValueError("all-zero component in a nontrivial decomposition")

    @property
    def count(self) -> int:
        return len(self.components)


def normalize_strategy(strategy, seed: int | None = None):
    """Return a function picking the split variable from a sorted support list."""
    if strategy == "first":
        return lambda supp: supp[0]
    if strategy == "last":
        return lambda supp: supp[-1]
    if strategy == "random":
        rng = random.Random(0 if seed is None else seed)
        return lambda supp: rng.choice(supp)
    raise ValueError(f"unknown strategy {strategy!r}")


def split_decompose(
    ideal: MonomialIdeal, strategy: str = "first", seed: int | None = None
) -> tuple[IrreducibleComponent, ...]:
    """All irreducible components reached by splitting; may contain redundant ones.

    Deterministic for a fixed strategy and seed.  Sub-ideals repeat across
    branches, so results are memoized per call on the canonical generators.
    """
    if ideal.is_unit:
        raise UnitIdealError("cannot decompose the unit ideal")
    pick = normalize_strategy(strategy, seed)
    ring = ideal.ring
    memo: dict[tuple, tuple] = {}

    def go(cur: MonomialIdeal) -> tuple:
        key = tuple(g.exponents for g in cur.gens)
        got = memo.get(key)
        if got is not None:
            return got
        split_gen = None
        for g in cur.gens:
            if len(g.support()) >= 2:
                split_gen = g
                break
        if split_gen is None:
            bounds = [0] * ring.n
            for g in cur.gens:
                (i,) = g.support()
                bounds[i] = g.exponents[i]
            result = (tuple(bounds),)
        else:
            supp = sorted(split_gen.support())
            i = pick(supp)
            a = split_gen.exponents[i]
            pure = [0] * ring.n
            pure[i] = a
            rest = list(split_gen.exponents)
            rest[i] = 0
            left = cur.plus([Monomial(tuple(pure), ring)])
            right = cur.plus([Monomial(tuple(rest), ring)])
            seen = []
            for b in go(left) + go(right):
                if b not in seen:
                    seen.append(b)
            result = tuple(seen)
        memo[key] = result
        return result

    return tuple(IrreducibleComponent(b, ring) for b in go(ideal))


def _contains_intersection(c: IrreducibleComponent, others) -> bool:
    """Does m^c contain the intersection of the other components?

    The largest monomial outside m^c has exponent bounds_i - 1 on the
    support of c and is unbounded elsewhere; membership of any monomial
    in a pure-power ideal is monotone in the exponents, so the
    intersection escapes m^c iff that single extremal monomial lies in
    every other component.  Unbounded coordinates are None here.
    """
    probe = [b - 1 if b else None for b in c.bounds]
    for o in others:
        if not any(
            b and (e is None or e >= b) for b, e in zip(o.bounds, probe)
        ):
            return True  # probe escapes o, so the intersection stays inside m^c
    return False


def irredundant(candidates, ideal: MonomialIdeal) -> Decomposition:
    """Prune candidates whose removal preserves the intersection.

    Raises InvalidCandidatesError unless the candidates intersect to the
    ideal.  Pruning never changes the intersection, so validity is
    checked once on the pruned set.
    """
    comps = []
    for c in candidates:
        if c not in comps:
            comps.append(c)
    changed = True
    while changed:
        changed = False
        for k, c in enumerate(comps):
            others = comps[:k] + comps[k + 1 :]
            if others and _contains_intersection(c, others):
                comps = others
                changed = True
                break
    inter = _intersect_components(comps, ideal.ring)
    if inter != ideal:
        raise InvalidCandidatesError(
            f"candidates intersect to ({inter.render()}), not ({ideal.render()})"
        )
    return Decomposition(ideal, tuple(sorted(comps, key=lambda c: c.bounds, reverse=True)))


def _intersect_components(comps, ring: RingContext) -> MonomialIdeal:
    if not comps:
        return MonomialIdeal.unit(ring)
    out = comps[0].as_ideal()
    for c in comps[1:]:
        out = out.intersect(c.as_ideal())
    return out


def decompose(
    ideal: MonomialIdeal, strategy: str = "first", seed: int | None = None
) -> Decomposition:
    """Irredundant irreducible decomposition of the ideal."""
    return irredundant(split_decompose(ideal, strategy, seed), ideal)


def reducibility_index_by_decomposition(
    ideal: MonomialIdeal, strategy: str = "first", seed: int | None = None
) -> int:
    """Component count of the irredundant decomposition.

    The zero ideal decomposes as itself (the quotient is the whole ring,
    a domain), giving index 1.
    """
    return decompose(ideal, strategy, seed).count
