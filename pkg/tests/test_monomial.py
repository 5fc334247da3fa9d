"""Monomial arithmetic and ideal lattice operations."""

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from redix import Monomial, MonomialIdeal, RingContext, minimalize


def ring(n):
    return RingContext.default(n)


@st.composite
def ideals(draw, max_vars=3, max_exp=4, max_gens=5):
    n = draw(st.integers(1, max_vars))
    R = ring(n)
    gens = draw(
        st.lists(
            st.tuples(*[st.integers(0, max_exp)] * n).filter(any),
            min_size=0,
            max_size=max_gens,
        )
    )
    return MonomialIdeal.from_gens(R, [Monomial(e, R) for e in gens])


@st.composite
def ideal_with_monomial(draw):
    ideal = draw(ideals())
    n = ideal.ring.n
    exps = draw(st.tuples(*[st.integers(0, 6)] * n))
    return ideal, Monomial(exps, ideal.ring)


def test_divides_and_operations():
    R = ring(2)
    x2y = R.monomial(2, 1)
    xy = R.monomial(1, 1)
    assert xy.divides(x2y)
    assert not x2y.divides(xy)
    assert xy.lcm(R.monomial(0, 3)).exponents == (1, 3)
    assert x2y.gcd(R.monomial(1, 5)).exponents == (1, 1)
    assert x2y.colon_by(xy).exponents == (1, 0)
    assert xy.mul(xy).exponents == (2, 2)


def test_render_names():
    R = ring(3)
    assert R.monomial(1, 0, 2).render() == "x*z^2"
    assert R.monomial(0, 0, 0).render() == "1"


def test_mixed_rings_rejected():
    R2, R3 = ring(2), ring(3)
    with pytest.raises(ValueError):
        MonomialIdeal.from_gens(R2, [R3.monomial(1, 0, 0)])
    a = MonomialIdeal.from_gens(R2, [R2.monomial(1, 0)])
    b = MonomialIdeal.from_gens(R3, [R3.monomial(1, 0, 0)])
    with pytest.raises(ValueError):
        a.intersect(b)


def test_zero_and_unit():
    R = ring(2)
    zero = MonomialIdeal.zero(R)
    unit = MonomialIdeal.unit(R)
    assert zero.is_zero and not zero.is_unit
    assert unit.is_unit and not unit.is_zero
    assert unit.contains(R.monomial(0, 0))
    assert not zero.contains(R.monomial(0, 0))


@given(ideals())
def test_minimalize_idempotent_antichain(ideal):
    again = minimalize(ideal.ring, ideal.gens)
    assert again.gens == ideal.gens  # from_gens already minimalizes
    for a in ideal.gens:
        for b in ideal.gens:
            if a is not b:
                assert not a.divides(b)


@given(ideal_with_monomial())
def test_membership_is_divisibility(pair):
    ideal, m = pair
    assert ideal.contains(m) == any(g.divides(m) for g in ideal.gens)


@given(ideal_with_monomial(), ideal_with_monomial())
def test_intersect_membership(p1, p2):
    a, m = p1
    b, _ = p2
    if a.ring != b.ring:
        return
    both = a.intersect(b)
    assert both.contains(m) == (a.contains(m) and b.contains(m))


@given(ideal_with_monomial(), ideal_with_monomial())
def test_plus_membership(p1, p2):
    a, m = p1
    b, _ = p2
    if a.ring != b.ring:
        return
    assert a.plus(b.gens).contains(m) == (a.contains(m) or b.contains(m))


@given(ideal_with_monomial())
@settings(max_examples=200)
def test_colon_adjunction(pair):
    # m is in (I : u) exactly when m*u is in I
    ideal, u = pair
    quotient = ideal.colon(u)
    R = ideal.ring
    for e in _probe_exponents(R.n):
        m = Monomial(e, R)
        assert quotient.contains(m) == ideal.contains(m.mul(u))


def _probe_exponents(n):
    import itertools

    return itertools.product(range(3), repeat=n)


def test_finite_colength_detection():
    R = ring(2)
    box = MonomialIdeal.from_gens(R, [R.monomial(3, 0), R.monomial(0, 2)])
    assert box.is_finite_colength()
    assert len(box.standard_monomials()) == 6
    open_ended = MonomialIdeal.from_gens(R, [R.monomial(3, 0)])
    assert not open_ended.is_finite_colength()


@given(ideals(max_vars=2, max_exp=3))
def test_standard_monomials_are_the_complement(ideal):
    if not ideal.is_finite_colength():
        return
    standard = set(ideal.standard_monomials())
    for m in standard:
        assert not ideal.contains(m)
    # divisor closed
    R = ideal.ring
    for m in standard:
        for i in range(R.n):
            if m.exponents[i]:
                down = list(m.exponents)
                down[i] -= 1
                assert Monomial(tuple(down), R) in standard
