"""Input grammars: parsing, canonical rendering, round trips, positions."""

import pytest

from redix import (
    ExtField,
    PrimeField,
    parse_change_descriptor,
    parse_field_spec,
    parse_group_text,
    parse_ideal_text,
    parse_poly_text,
    render_change_descriptor,
    render_group_text,
    render_ideal_text,
    render_poly_text,
)
from redix.errors import ParseError


def test_ideal_basic_forms():
    I = parse_ideal_text("ring: x, y\nideal: x^2, x*y, y^3")
    assert I.ring.names == ("x", "y")
    assert sorted(g.exponents for g in I.gens) == [(0, 3), (1, 1), (2, 0)]
    # separators: semicolons and slashes both split lines
    assert parse_ideal_text("ring: x,y / ideal: x^2, x*y").gens == parse_ideal_text(
        "ring: x,y; ideal: x^2, x*y"
    ).gens


def test_ideal_ring_inference_sorts_names():
    I = parse_ideal_text("ideal: b*a^2, c")
    assert I.ring.names == ("a", "b", "c")


def test_ideal_exponent_accumulation():
    I = parse_ideal_text("ideal: x*x*y^2*x")
    assert I.gens[0].exponents == (3, 2)


def test_ideal_unit_zero_comments():
    assert parse_ideal_text("ring: x, y\nideal: 1").is_unit
    assert parse_ideal_text("ring: x, y\n# nothing\nideal:").is_zero
    assert parse_ideal_text("ring: x, y").is_zero


def test_ideal_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_ideal_text("ring: x\nideal: x^2, q")
    assert "line 2" in str(err.value)
    with pytest.raises(ParseError):
        parse_ideal_text("ring: x\nring: y")
    with pytest.raises(ParseError):
        parse_ideal_text("ideal: 2*x")  # coefficients are not monomials
    with pytest.raises(ParseError):
        parse_ideal_text("ideal: x^^2")


def test_ideal_round_trip():
    for text in (
        "ring: x, y\nideal: x^2, x*y, y^3",
        "ring: z\nideal: z^5",
        "ring: x, y\nideal:",
    ):
        I = parse_ideal_text(text)
        canonical = render_ideal_text(I)
        again = parse_ideal_text(canonical)
        assert again.ring == I.ring and again.gens == I.gens
        assert render_ideal_text(again) == canonical


def test_group_parse_and_canonical_order():
    g = parse_group_text("group: Z/4 + Z/2 + Z/9")
    assert g.factors == (2, 4, 9)
    assert render_group_text(g) == "group: Z/2 + Z/4 + Z/9"
    assert parse_group_text(render_group_text(g)) == g
    assert parse_group_text("group: Z/6").factors == (2, 3)
    assert parse_group_text("group: Z/1").is_trivial


def test_group_errors():
    with pytest.raises(ParseError):
        parse_group_text("group: Z/0")
    with pytest.raises(ParseError):
        parse_group_text("group: Z4")
    with pytest.raises(ParseError):
        parse_group_text("")


def test_poly_parse_prime_field():
    f, ext = parse_poly_text("f: x^2+x+1 over GF(2)")
    assert ext is None
    assert f.field.p == 2 and f.degree == 2
    assert render_poly_text(f) == "f: x^2+x+1 over GF(2)"


def test_poly_parse_ext_field_coefficients():
    f, ext = parse_poly_text("f: t*x^2+(t+1)*x+1 over GF(4)\next: GF(4)=t^2+t+1")
    assert isinstance(f.field, ExtField)
    assert f.degree == 2
    text = render_poly_text(f)
    again, _ = parse_poly_text(text)
    assert again == f and render_poly_text(again) == text


def test_poly_signs_and_bare_input():
    f, _ = parse_poly_text("x^3 - x over GF(5)")
    assert f.coeffs[1] == 4  # -1 mod 5
    g, _ = parse_poly_text("f: -x + 2 over GF(5)")
    assert g.coeffs == (2, 4)


def test_poly_errors():
    with pytest.raises(ParseError):
        parse_poly_text("f: x^2+1")  # no field
    with pytest.raises(ParseError):
        parse_poly_text("f: x*y over GF(2)")  # two variables
    with pytest.raises(ParseError):
        parse_poly_text("f: t*x over GF(2)")  # t needs an extension field


def test_field_specs():
    assert isinstance(parse_field_spec("GF(5)"), PrimeField)
    gf4 = parse_field_spec("GF(4)")
    assert isinstance(gf4, ExtField) and gf4.size == 4
    explicit = parse_field_spec("GF(4)=t^2+t+1")
    assert explicit.modulus == gf4.modulus
    gf169 = parse_field_spec("GF(169)")
    assert gf169.size == 169
    for bad in ("GF(6)", "GF(17)", "GF(4)=t^2", "GF(8)=t^2+t+1"):
        with pytest.raises(ParseError):
            parse_field_spec(bad)


def test_change_descriptors():
    assert parse_change_descriptor("extend:2") == ("extend", 2)
    assert parse_change_descriptor("invert:x,y") == ("invert", ("x", "y"))
    assert parse_change_descriptor("field:GF(2)->GF(4)") == ("field", "GF(2)", "GF(4)")
    assert parse_change_descriptor("field:->GF(4)") == ("field", None, "GF(4)")
    for d in ("extend:2", "invert:x,y", "field:GF(2)->GF(4)"):
        assert parse_change_descriptor(render_change_descriptor(parse_change_descriptor(d))) == parse_change_descriptor(d)
    with pytest.raises(ParseError):
        parse_change_descriptor("extend:0")
    with pytest.raises(ParseError):
        parse_change_descriptor("shrink:2")
