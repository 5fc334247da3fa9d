"""Finite abelian groups: sum-index search against the factor-count formula."""

import pytest

from redix import (
    FiniteAbelianGroup,
    abelian_group_classes,
    additivity_report,
    attached_primes,
    characterization_report,
    is_sum_irreducible,
    quotient_group,
    quotient_monotonicity_report,
    secondary_representation,
    subgroup_lattice,
    sum_index_formula,
    sum_reducibility_index_bruteforce,
)
from redix.abelian import all_subgroups
from redix.errors import SizeCapError, TrivialGroupError


def G(*orders):
    return FiniteAbelianGroup.from_orders(*orders)


def test_canonical_form():
    assert G(12).factors == (4, 3)
    assert G(12).render() == "Z/4 + Z/3"
    assert G(4, 2, 9).factors == (2, 4, 9)
    assert G(6, 10).factors == (2, 2, 3, 5)
    assert G(1).is_trivial and G(1).order == 1


def test_subgroup_counts():
    assert len(all_subgroups(G(4))) == 3
    assert len(all_subgroups(G(2, 2))) == 5
    assert len(all_subgroups(G(6))) == 4
    assert len(all_subgroups(G(8))) == 4


def test_frozen_indices():
    assert sum_index_formula(G(12)) == 2
    assert sum_reducibility_index_bruteforce(G(12)).index == 2
    assert sum_index_formula(G(2, 2, 3)) == 3
    assert sum_reducibility_index_bruteforce(G(2, 2, 3)).index == 3
    assert sum_reducibility_index_bruteforce(G(8)).index == 1
    rep = sum_reducibility_index_bruteforce(G(4, 9))
    assert rep.index == 2 and rep.equicardinal
    assert attached_primes(G(4, 9)) == (2, 3)
    assert attached_primes(G(30)) == (2, 3, 5)
    assert sum_index_formula(G(30)) == 3


def test_cyclic_prime_power_has_index_one():
    for order in (2, 3, 4, 8, 9, 27, 25, 64):
        rep = sum_reducibility_index_bruteforce(G(order))
        assert rep.index == 1
        assert rep.cover_histogram.get(1) == 1  # the group itself, uniquely


def test_trivial_group():
    rep = sum_reducibility_index_bruteforce(G(1))
    assert rep.index == 0
    with pytest.raises(TrivialGroupError):
        secondary_representation(G(1))


def test_order_cap():
    with pytest.raises(SizeCapError):
        sum_reducibility_index_bruteforce(G(128))


def test_sum_irreducibility_classification():
    lat = subgroup_lattice(G(2, 2))
    full = max(all_subgroups(G(2, 2)), key=lambda s: len(s.members))
    assert not is_sum_irreducible(full)  # Klein group is a sum of two lines
    lat6 = all_subgroups(G(6))
    for sub in lat6:
        if len(sub.members) == 6:
            assert not is_sum_irreducible(sub)
        elif len(sub.members) in (2, 3):
            assert is_sum_irreducible(sub)
    report = characterization_report(G(2, 4))
    assert report.passed


def test_secondary_representation():
    rep = secondary_representation(G(12))
    assert rep.attached == (2, 3)
    assert rep.direct_sum_ok
    assert rep.passed
    for part in rep.parts:
        assert part.prime_nilpotent and part.action_split
    assert [len(p.subgroup.members) for p in rep.parts] == [4, 3]


def test_quotients():
    g = G(4)
    subs = sorted(all_subgroups(g), key=lambda s: len(s.members))
    q = quotient_group(g, subs[1])  # mod the order-2 subgroup
    assert q.factors == (2,)
    klein = G(2, 2)
    diag = next(
        s for s in all_subgroups(klein) if len(s.members) == 2 and 3 in s.members
    )
    assert quotient_group(klein, diag).factors == (2,)


def test_quotient_monotonicity_and_inheritance():
    rep = quotient_monotonicity_report(G(8))
    assert rep.passed
    assert rep.whole_index == 1
    assert rep.max_quotient_index <= 1
    assert rep.irreducibility_inherited
    rep = quotient_monotonicity_report(G(2, 2, 3))
    assert rep.passed and rep.max_quotient_index <= 3


def test_additivity():
    rep = additivity_report(G(4, 3, 5))
    assert rep.passed
    assert rep.whole_index == 3
    assert rep.part_indices == ((2, 1), (3, 1), (5, 1))


def test_class_enumeration():
    classes = list(abelian_group_classes(8))
    assert len(classes) == 11  # 1+1+1+2+1+1+1+3
    orders = sorted(g.order for g in classes)
    assert orders == [1, 2, 3, 4, 4, 5, 6, 7, 8, 8, 8]
    # no duplicate canonical forms
    factors = [g.factors for g in classes]
    assert len(set(factors)) == len(factors)


def test_element_arithmetic():
    g = G(4, 3)
    a = g.index((1, 0))
    b = g.index((0, 1))
    s = g.add(a, b)
    assert g.coords(s) == (1, 1)
    assert g.element_order(a) == 4
    assert g.element_order(b) == 3
    assert g.element_order(s) == 12
