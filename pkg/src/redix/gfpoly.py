"""Univariate polynomials over small finite fields.

Coefficient lists are dense, lowest degree first, with no trailing
zeros; the zero polynomial is the empty tuple.  Prime fields store
elements as ints mod p; extension fields store them as coefficient
tuples mod a monic irreducible modulus over the prime field.  Bounds
are hard errors: factoring refuses degree above 8 or field size above
13^3, and extension fields refuse p > 13 or size above 13^3.

Factoring is trial division by monic candidates of increasing degree,
which is deterministic and adequate at the enforced sizes.  A divisor
of minimal degree is automatically irreducible, so the factor list is
correct without a separate irreducibility pass.

The module also carries an exhaustive oracle for the index of k[x]/(f):
it enumerates every submodule (each is generated by one element), marks
the irreducible ones, and searches all irredundant families meeting in
zero.  That route never factors anything, so it can sit on the other
side of a cross-check from the factor-counting route.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DimensionMismatchError, SizeCapError, VerificationError

MAX_FACTOR_DEGREE = 8
MAX_FIELD_SIZE = 13**3
MAX_PRIME = 13
MAX_LATTICE_SIZE = 512

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def _poly_str(coeffs, var: str, render, one) -> str:
    """Shared renderer for dense low-first coefficient sequences."""
    if not coeffs:
        return "0"
    parts = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if not _is_zero_like(c):
            if d == 0:
                parts.append(render(c))
            else:
                xpow = var if d == 1 else f"{var}^{d}"
                parts.append(xpow if c == one else f"{render(c)}*{xpow}")
    return "+".join(parts)


def _is_zero_like(c) -> bool:
    return c == 0 or (isinstance(c, tuple) and not any(c))


@dataclass(frozen=True)
class PrimeField:
    """GF(p) for a prime p <= 13; elements are ints in [0, p)."""

    p: int

    def __post_init__(self):
        if self.p not in _SMALL_PRIMES:
            raise SizeCapError(f"prime field size must be a prime <= {MAX_PRIME}, got {self.p}")

    @property
    def size(self) -> int:
        return self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def elements(self):
        return range(self.p)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def render_element(self, a) -> str:
        return str(a)

    def render(self) -> str:
        return f"GF({self.p})"


@dataclass(frozen=True)
class ExtField:
    """GF(p^k) as polynomials in a generator modulo a monic irreducible.

    Elements are coefficient tuples of length k over GF(p).  The modulus
    is given low-first including the leading 1, and is verified
    irreducible on construction.
    """

    base: PrimeField
    modulus: tuple[int, ...]
    gen_name: str = "t"

    def __post_init__(self):
        k = len(self.modulus) - 1
        if k < 2:
            raise ValueError("extension degree must be at least 2")
        if self.modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if self.base.p**k > MAX_FIELD_SIZE:
            raise SizeCapError(f"field size {self.base.p}^{k} exceeds cap {MAX_FIELD_SIZE}")
        mod_poly = UniPoly(self.base, self.modulus)
        if not is_irreducible(mod_poly):
            raise ValueError(f"modulus {mod_poly.render()} is not irreducible")

    @property
    def k(self) -> int:
        return len(self.modulus) - 1

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def size(self) -> int:
        return self.base.p**self.k

    @property
    def zero(self):
        return (0,) * self.k

    @property
    def one(self):
        return (1,) + (0,) * (self.k - 1)

    def embed(self, a: int):
        """Image of a prime-field element."""
        return (a % self.p,) + (0,) * (self.k - 1)

    def elements(self):
        for rev in itertools.product(range(self.p), repeat=self.k):
            yield tuple(reversed(rev))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.k
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] = (conv[i + j] + x * y) % p
        # reduce degrees k..2k-2 using the monic modulus
        for d in range(2 * k - 2, k - 1, -1):
            c = conv[d]
            if c:
                conv[d] = 0
                for j in range(k):
                    conv[d - k + j] = (conv[d - k + j] - c * self.modulus[j]) % p
        return tuple(conv[:k])

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        # brute scan is fine at these sizes
        for b in self.elements():
            if self.mul(a, b) == self.one:
                return b
        raise ArithmeticError("no inverse found; modulus not irreducible?")

    def render_element(self, a) -> str:
        return _poly_str(a, self.gen_name, str, 1)

    def render(self) -> str:
        return f"GF({self.size})"


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial over a PrimeField or ExtField."""

    field: object
    coeffs: tuple

    def __post_init__(self):
        if self.coeffs and _is_zero_like(self.coeffs[-1]):
            raise ValueError("trailing zero coefficient; normalize first")

    @staticmethod
    def make(field, coeffs) -> "UniPoly":
        cs = list(coeffs)
        while cs and _is_zero_like(cs[-1]):
            cs.pop()
        return UniPoly(field, tuple(cs))

    @staticmethod
    def zero(field) -> "UniPoly":
        return UniPoly(field, ())

    @staticmethod
    def one(field) -> "UniPoly":
        return UniPoly(field, (field.one,))

    @staticmethod
    def x(field) -> "UniPoly":
        return UniPoly(field, (field.zero, field.one))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial has degree -1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return not self.is_zero and self.lead() == self.field.one

    def _same_field(self, other: "UniPoly"):
        if self.field != other.field:
            raise DimensionMismatchError("polynomials over different fields")

    def add(self, other: "UniPoly") -> "UniPoly":
        self._same_field(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return UniPoly.make(F, out)

    def sub(self, other: "UniPoly") -> "UniPoly":
        self._same_field(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            x = self.coeffs[i] if i < len(self.coeffs) else F.zero
            y = other.coeffs[i] if i < len(other.coeffs) else F.zero
            out.append(F.sub(x, y))
        return UniPoly.make(F, out)

    def mul(self, other: "UniPoly") -> "UniPoly":
        self._same_field(other)
        F = self.field
        if self.is_zero or other.is_zero:
            return UniPoly.zero(F)
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if _is_zero_like(x):
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
        return UniPoly.make(F, out)

    def scale(self, c) -> "UniPoly":
        F = self.field
        return UniPoly.make(F, [F.mul(c, a) for a in self.coeffs])

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        self._same_field(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        inv_lead = F.inv(other.lead())
        rem = list(self.coeffs)
        q = [F.zero] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.degree
        while len(rem) - 1 >= d and rem:
            c = F.mul(rem[-1], inv_lead)
            shift = len(rem) - 1 - d
            q[shift] = c
            for j, b in enumerate(other.coeffs):
                rem[shift + j] = F.sub(rem[shift + j], F.mul(c, b))
            while rem and _is_zero_like(rem[-1]):
                rem.pop()
        return UniPoly.make(F, q), UniPoly.make(F, rem)

    def mod(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def divides(self, other: "UniPoly") -> bool:
        return other.mod(self).is_zero

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.lead()))

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a.mod(b)
        return a.monic()

    def pow(self, e: int) -> "UniPoly":
        out = UniPoly.one(self.field)
        for _ in range(e):
            out = out.mul(self)
        return out

    def sort_key(self):
        return (self.degree, tuple(self.coeffs))

    def render(self, var: str = "x") -> str:
        F = self.field
        if isinstance(F, ExtField):
            def rend(c):
                s = F.render_element(c)
                return f"({s})" if ("+" in s or "*" in s or "^" in s) else s
        else:
            rend = F.render_element
        return _poly_str(self.coeffs, var, rend, F.one)

    def __str__(self) -> str:
        return self.render()


def monic_polys(field, degree: int):
    """All monic polynomials of the given degree, in a fixed canonical order."""
    elems = list(field.elements())
    for low in itertools.product(elems, repeat=degree):
        yield UniPoly(field, tuple(low) + (field.one,))


def is_irreducible(f: UniPoly) -> bool:
    """Trial division test; constants and the zero polynomial are not irreducible."""
    if f.degree < 1:
        return False
    for d in range(1, f.degree // 2 + 1):
        for cand in monic_polys(f.field, d):
            if cand.divides(f):
                return False
    return True


@dataclass(frozen=True)
class Factorization:
    """unit * product of monic irreducible factors with multiplicities."""

    field: object
    unit: object
    factors: tuple[tuple[UniPoly, int], ...]  # sorted by (degree, coeffs)

    @property
    def distinct_count(self) -> int:
        return len(self.factors)

    def reconstruct(self) -> UniPoly:
        out = UniPoly(self.field, (self.unit,))
        for g, m in self.factors:
            out = out.mul(g.pow(m))
        return out


def factor(f: UniPoly) -> Factorization:
    """Complete factorization into monic irreducibles by trial division."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if f.degree > MAX_FACTOR_DEGREE:
        raise SizeCapError(f"degree {f.degree} exceeds factoring cap {MAX_FACTOR_DEGREE}")
    if f.field.size > MAX_FIELD_SIZE:
        raise SizeCapError(f"field size {f.field.size} exceeds cap {MAX_FIELD_SIZE}")
    unit = f.lead()
    g = f.monic()
    found: list[tuple[UniPoly, int]] = []
    d = 1
    while 2 * d <= g.degree:
        hit = None
        for cand in monic_polys(f.field, d):
            if cand.divides(g):
                hit = cand
                break
        if hit is None:
            d += 1
            continue
        mult = 0
        while hit.divides(g):
            g = g.divmod(hit)[0]
            mult += 1
        found.append((hit, mult))
        # stay at the same degree; more factors of degree d may remain
    if g.degree >= 1:
        found.append((g, 1))
    found.sort(key=lambda t: t[0].sort_key())
    return Factorization(f.field, unit, tuple(found))


def hypersurface_index(f: UniPoly) -> int:
    """Index of k[x]/(f): the number of distinct irreducible factors.

    Zero in k[x]/(f) is the intersection of the primary pieces cut out
    by the distinct factors, one irreducible component each, and the sum
    of the socle dimensions matches because each localization is a
    quotient of a discrete valuation ring, whose socle is a line.
    """
    if f.is_zero:
        raise ValueError("the zero polynomial does not define a hypersurface ring")
    if f.degree == 0:
        raise ValueError("a nonzero constant cuts out the zero ring")
    return factor(f).distinct_count


def irreducible_modulus(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k over GF(p) in canonical order."""
    F = PrimeField(p)
    for cand in monic_polys(F, k):
        if is_irreducible(cand):
            return cand.coeffs
    raise ArithmeticError("no irreducible polynomial found; impossible")


def embed_poly(f: UniPoly, ext: ExtField) -> UniPoly:
    """Coefficientwise embedding of a prime-field polynomial."""
    if not isinstance(f.field, PrimeField) or f.field.p != ext.p:
        raise DimensionMismatchError("polynomial is not over the base prime field")
    return UniPoly.make(ext, [ext.embed(c) for c in f.coeffs])


def _multiset(fact: Factorization):
    return sorted((g.sort_key(), m) for g, m in fact.factors)


def field_extension_report(f: UniPoly, ext: ExtField):
    """Index of k[x]/(f) before vs after extending the coefficient field.

    The prediction side factors f over the base field and then factors
    each irreducible factor over the extension; the direct side factors
    the embedded f in one go.  Multiplicity bookkeeping ties the two
    factorizations together as an extra consistency check.
    """
    from .basechange import BaseChangeReport, PrimeFiber

    if f.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    base_fact = factor(f)
    r_before = base_fact.distinct_count
    fibers = []
    formula = 0
    combined: list[tuple[tuple, int]] = []
    for g, mult in base_fact.factors:
        up = factor(embed_poly(g, ext))
        s = up.distinct_count
        # each factor of g upstairs is simple: g is squarefree and separable here
        fibers.append(PrimeFiber(g.render(), 1, s))
        formula += s
        for q, m in up.factors:
            combined.append((q.sort_key(), m * mult))
    direct_fact = factor(embed_poly(f, ext))
    direct = direct_fact.distinct_count
    t = max((fb.fiber_index for fb in fibers), default=1)
    checks = (
        ("prediction matches direct recomputation", formula == direct),
        ("index within [r, t*r]", r_before <= direct <= t * r_before),
        (
            "index preserved iff every factor stays irreducible",
            (direct == r_before) == all(fb.fiber_index == 1 for fb in fibers),
        ),
        ("factor multiset matches across the two routes", sorted(combined) == _multiset(direct_fact)),
    )
    return BaseChangeReport(
        kind="field",
        detail=f"{f.field.render()} -> {ext.render()}",
        ir_before=r_before,
        ir_after_formula=formula,
        ir_after_direct=direct,
        t_bound=t,
        faithfully_flat=True,
        fibers=tuple(fibers),
        checks=checks,
    )


def hypersurface_index_bruteforce(f: UniPoly) -> int:
    """Index of k[x]/(f) from the full submodule lattice; never factors.

    Enumerates the quotient's elements, generates every cyclic submodule
    (each submodule is one, the ring being a principal ideal ring),
    marks those not expressible as an intersection of two strictly
    larger submodules, and searches every irredundant family of marked
    submodules meeting in zero.  All such families must share one
    cardinality; that shared size is returned.
    """
    if not isinstance(f.field, PrimeField):
        raise SizeCapError("lattice oracle works over prime fields only")
    if f.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    p = f.field.p
    d = f.degree
    if p**d > MAX_LATTICE_SIZE:
        raise SizeCapError(f"quotient size {p}^{d} exceeds lattice cap {MAX_LATTICE_SIZE}")
    F = f.field
    fm = f.monic()
    elems = [tuple(e) for e in itertools.product(range(p), repeat=d)]
    index = {e: i for i, e in enumerate(elems)}

    def times_x(v):
        shifted = UniPoly.make(F, (F.zero,) + v).mod(fm)
        cs = list(shifted.coeffs) + [0] * (d - len(shifted.coeffs))
        return tuple(cs)

    xmap = [index[times_x(v)] for v in elems]

    def span(vidx: int) -> frozenset[int]:
        orbit = []
        cur = vidx
        for _ in range(d):
            orbit.append(cur)
            cur = xmap[cur]
        members = {0}
        for g in orbit:
            gvec = elems[g]
            base = list(members)  # a subgroup before each fold
            for k in range(1, p):
                kg = tuple((k * b) % p for b in gvec)
                for s in base:
                    svec = elems[s]
                    members.add(index[tuple((a + c) % p for a, c in zip(svec, kg))])
        return frozenset(members)

    submodules = sorted({span(i) for i in range(len(elems))}, key=lambda s: (len(s), sorted(s)))
    zero_mod = frozenset({0})
    irreducible = []
    for N in submodules:
        strictly_bigger = [A for A in submodules if N < A]
        reducible = any(
            A & B == N for A, B in itertools.combinations(strictly_bigger, 2)
        )
        if not reducible:
            irreducible.append(N)
    sizes = set()
    full = frozenset(range(len(elems)))
    for r in range(1, len(irreducible) + 1):
        for family in itertools.combinations(irreducible, r):
            inter = full
            for N in family:
                inter = inter & N
            if inter != zero_mod:
                continue
            # irredundant: every member is needed
            needed = True
            for skip in range(r):
                rest = full
                for j, N in enumerate(family):
                    if j != skip:
                        rest = rest & N
                if rest == zero_mod:
                    needed = False
                    break
            if needed:
                sizes.add(r)
    if not sizes:
        raise VerificationError("no irreducible decomposition of zero found")
    if len(sizes) != 1:
        raise VerificationError(f"irredundant decompositions of unequal sizes: {sorted(sizes)}")
    return sizes.pop()
