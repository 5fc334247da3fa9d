"""Finite-length duality through staircases of standard monomials.

For a finite-colength monomial ideal I the quotient ring has the finite
staircase G = standard monomials as a basis.  The dual module lives on
the same set with the divisibility order reversed: a submodule of the
dual is a subset of G closed under passing to divisors (a downset), and
the cyclic submodule generated by u is the principal downset of its
divisors.  Under this dictionary:

  * generators of the dual correspond to maximal elements of G,
  * sum-irreducible submodules are exactly principal downsets,
  * expressing the dual as an irredundant sum of sum-irreducible
    submodules is covering G irredundantly by principal downsets,
  * quotients of the dual by a downset B live on G minus B.

So the sum-reducibility index of the dual is the number of maximal
elements, which a separate minimum-cover search can confirm without
knowing anything about maximality.  The ring here is a finite
dimensional graded algebra over the field, already complete, so the
index of the ideal and the index of its dual agree on the nose; the
reports state that equality and verify it numerically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bass import bass0, reducibility_index_by_bass
from .decompose import decompose
from .errors import (
    EmptyStaircaseError,
    NotInStaircaseError,
    SizeCapError,
    VerificationError,
)
from .monomial import Monomial, MonomialIdeal, RingContext

MIN_COVER_CAP = 25
ALL_COVERS_CAP = 12


@dataclass(frozen=True)
class Staircase:
    """Finite downset of monomials, the standard monomials of some ideal."""

    ring: RingContext
    monomials: frozenset[Monomial]

    def __post_init__(self):
        exps = {m.exponents for m in self.monomials}
        for e in exps:
            for i, v in enumerate(e):
                if v:
                    below = list(e)
                    below[i] -= 1
                    if tuple(below) not in exps:
                        raise ValueError("not closed under divisors")

    @staticmethod
    def from_ideal(ideal: MonomialIdeal) -> "Staircase":
        return Staircase(ideal.ring, ideal.standard_monomials())

    @staticmethod
    def from_exponents(ring: RingContext, exps) -> "Staircase":
        return Staircase(ring, frozenset(Monomial(tuple(e), ring) for e in exps))

    @property
    def size(self) -> int:
        return len(self.monomials)

    def ideal(self) -> MonomialIdeal:
        """The ideal this is the staircase of: minimal monomials outside."""
        if not self.monomials:
            return MonomialIdeal.unit(self.ring)
        exps = {m.exponents for m in self.monomials}
        border = set()
        for e in exps:
            for i in range(self.ring.n):
                up = list(e)
                up[i] += 1
                if tuple(up) not in exps:
                    border.add(tuple(up))
        return MonomialIdeal.from_gens(
            self.ring, [Monomial(e, self.ring) for e in border]
        )

    def sorted_monomials(self) -> list[Monomial]:
        return sorted(self.monomials, key=lambda m: m.exponents)


def maximal_elements(g: Staircase) -> frozenset[Monomial]:
    """Monomials with no multiple inside the staircase: the dual's generators."""
    exps = {m.exponents for m in g.monomials}
    out = []
    for m in g.monomials:
        up_any = False
        for i in range(g.ring.n):
            up = list(m.exponents)
            up[i] += 1
            if tuple(up) in exps:
                up_any = True
                break
        if not up_any:
            out.append(m)
    return frozenset(out)


@dataclass(frozen=True)
class DownsetSubmodule:
    """Submodule of the dual: a divisor-closed subset of the staircase."""

    staircase: Staircase
    members: frozenset[Monomial]

    def __post_init__(self):
        if not self.members <= self.staircase.monomials:
            raise ValueError("members must lie in the staircase")
        exps = {m.exponents for m in self.members}
        for e in exps:
            for i, v in enumerate(e):
                if v:
                    below = list(e)
                    below[i] -= 1
                    if tuple(below) not in exps:
                        raise ValueError("not closed under divisors")

    @property
    def size(self) -> int:
        return len(self.members)


def principal_downset(g: Staircase, u: Monomial) -> DownsetSubmodule:
    """Cyclic submodule of the dual generated by u: all divisors of u."""
    if u not in g.monomials:
        raise NotInStaircaseError(f"{u.render()} is not a standard monomial here")
    members = frozenset(m for m in g.monomials if m.divides(u))
    return DownsetSubmodule(g, members)


def sum_irreducible_representation(
    g: Staircase,
) -> tuple[tuple[DownsetSubmodule, ...], int]:
    """One principal downset per maximal element; their union is everything."""
    if not g.monomials:
        raise EmptyStaircaseError("the unit ideal leaves an empty staircase")
    gens = sorted(maximal_elements(g), key=lambda m: m.exponents)
    parts = tuple(principal_downset(g, u) for u in gens)
    covered = frozenset().union(*(p.members for p in parts))
    if covered != g.monomials:
        raise VerificationError("principal downsets of maximal elements fail to cover")
    return parts, len(parts)


def min_cover_oracle(g: Staircase) -> int:
    """Minimum number of principal downsets covering the staircase.

    Depth-budgeted search over every principal downset with no use of
    maximality; the budget rises until a cover appears, so the first hit
    is the true minimum.  Pruned by the union of what is still
    selectable.  Capped at 25 monomials.
    """
    if not g.monomials:
        raise EmptyStaircaseError("the unit ideal leaves an empty staircase")
    if g.size > MIN_COVER_CAP:
        raise SizeCapError(f"staircase size {g.size} exceeds cap {MIN_COVER_CAP}")
    order = g.sorted_monomials()
    pos = {m: i for i, m in enumerate(order)}
    masks = []
    for u in order:
        mask = 0
        for m in g.monomials:
            if m.divides(u):
                mask |= 1 << pos[m]
        masks.append(mask)
    masks.sort(key=lambda m: -m.bit_count())
    want = (1 << g.size) - 1
    suffix = [0] * (len(masks) + 1)
    for i in range(len(masks) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]

    def reachable(budget: int, start: int, acc: int) -> bool:
        if acc == want:
            return True
        if budget == 0 or acc | suffix[start] != want:
            return False
        for i in range(start, len(masks)):
            # only additions that grow the union matter: any cover thins
            # to one of this shape without getting longer
            if masks[i] & ~acc and reachable(budget - 1, i + 1, acc | masks[i]):
                return True
        return False

    for r in range(1, g.size + 1):
        if reachable(r, 0, 0):
            return r
    raise VerificationError("staircase cannot be covered by its own downsets")


def irredundant_cover_sizes(g: Staircase) -> set[int]:
    """Sizes of all irredundant covers by principal downsets (cap 12).

    Used to confirm that every irredundant cover has the same size.
    """
    if not g.monomials:
        raise EmptyStaircaseError("the unit ideal leaves an empty staircase")
    if g.size > ALL_COVERS_CAP:
        raise SizeCapError(f"staircase size {g.size} exceeds cap {ALL_COVERS_CAP}")
    order = g.sorted_monomials()
    pos = {m: i for i, m in enumerate(order)}
    masks = []
    for u in order:
        mask = 0
        for m in g.monomials:
            if m.divides(u):
                mask |= 1 << pos[m]
        masks.append(mask)
    want = (1 << g.size) - 1
    sizes = set()
    idxs = range(g.size)
    for r in range(1, g.size + 1):
        for combo in itertools.combinations(idxs, r):
            acc = 0
            for i in combo:
                acc |= masks[i]
            if acc != want:
                continue
            irredundant = True
            for skip in combo:
                rest = 0
                for i in combo:
                    if i != skip:
                        rest |= masks[i]
                if rest == want:
                    irredundant = False
                    break
            if irredundant:
                sizes.add(r)
    return sizes


def all_downsets(g: Staircase) -> list[DownsetSubmodule]:
    """Every submodule of the dual, the empty one included.

    Grown breadth-first by adding one addable monomial at a time, so the
    cost scales with the number of downsets rather than all subsets.
    """
    exps = {m.exponents for m in g.monomials}
    by_exp = {m.exponents: m for m in g.monomials}
    seen = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for cur in frontier:
            for e, m in by_exp.items():
                if m in cur:
                    continue
                ok = True
                for i, v in enumerate(e):
                    if v:
                        below = list(e)
                        below[i] -= 1
                        if by_exp[tuple(below)] not in cur:
                            ok = False
                            break
                if ok:
                    grown = cur | {m}
                    if grown not in seen:
                        seen.add(grown)
                        nxt.append(grown)
        frontier = nxt
    return [DownsetSubmodule(g, s) for s in sorted(seen, key=lambda s: (len(s), sorted(m.exponents for m in s)))]


def sum_covers_iff_dual_disjoint(
    g: Staircase, b: DownsetSubmodule, c: DownsetSubmodule
) -> tuple[bool, bool]:
    """Two routes to one biconditional.

    Left: the duals of the quotients by B and C intersect in zero, which
    on basis monomials means no monomial escapes both B and C.  Right:
    B and C sum to the whole dual, checked member by member.  The lemma
    says the answers always agree.
    """
    left = not (g.monomials - (b.members | c.members))
    right = all((m in b.members) or (m in c.members) for m in g.monomials)
    return left, right


def dual_single_generator_check(ideal: MonomialIdeal) -> tuple[bool, bool]:
    """Zero is irreducible in the quotient iff the dual is one-generated.

    Left from the splitting decomposition, right from counting maximal
    staircase elements; independent computations.
    """
    left = decompose(ideal).count == 1
    right = len(maximal_elements(Staircase.from_ideal(ideal))) == 1
    return left, right


def quotient_index(g: Staircase, b: DownsetSubmodule) -> int:
    """Sum-reducibility index of (dual module)/B.

    The quotient has basis G minus B with the inherited action; its
    generators are the staircase-maximal monomials that escaped B.  For
    B = G the quotient is zero and the index is 0.
    """
    return len(maximal_elements(g) - b.members)


@dataclass(frozen=True)
class DualIndexReport:
    """The index of I and of its dual, by every route that applies."""

    ideal: MonomialIdeal
    staircase_size: int
    ir_decomposition: int
    ir_socle_formula: int
    dual_generator_count: int
    min_cover: int | None
    completion_note: str

    @property
    def all_equal(self) -> bool:
        vals = {self.ir_decomposition, self.ir_socle_formula, self.dual_generator_count}
        if self.min_cover is not None:
            vals.add(self.min_cover)
        return len(vals) == 1


def dual_index_report(ideal: MonomialIdeal) -> DualIndexReport:
    """Index of a finite-colength ideal against the dual-side counts."""
    g = Staircase.from_ideal(ideal)
    if not g.monomials:
        raise EmptyStaircaseError("the unit ideal leaves an empty staircase")
    ir_dec = decompose(ideal).count
    ir_bass = reducibility_index_by_bass(ideal).index
    gens = len(maximal_elements(g))
    cover = min_cover_oracle(g) if g.size <= MIN_COVER_CAP else None
    note = (
        "finite length over a field: the ring is already complete, so the"
        " dual index equals the index exactly, with no completion gap"
    )
    return DualIndexReport(
        ideal=ideal,
        staircase_size=g.size,
        ir_decomposition=ir_dec,
        ir_socle_formula=ir_bass,
        dual_generator_count=gens,
        min_cover=cover,
        completion_note=note,
    )


def socle_matches_dual_generators(ideal: MonomialIdeal) -> tuple[int, int]:
    """Socle dimension at the top prime vs dual generator count.

    Two routes to one number: a socle scan of the quotient against the
    count of maximal staircase monomials.
    """
    g = Staircase.from_ideal(ideal)
    count, _ = bass0(ideal, range(ideal.ring.n))
    return count, len(maximal_elements(g))
