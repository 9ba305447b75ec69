import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prettyclean.monomial import (
    Ambient,
    AmbientMismatch,
    MonomialIdeal,
    MonomialPrime,
    ParseError,
    format_monomial,
    grlex_key,
    intersect,
    monomial_ops,
    parse_ideal,
    parse_monomial,
    prime_of,
)

from conftest import A, brute_box, ideals, in_ideal, monomials


def test_parse_and_print_roundtrip():
    I = parse_ideal("(x^2*y, x*y^3, z)")
    assert I.format() == "(z, x^2*y, x*y^3)"
    assert parse_ideal(I.format()) == I


def test_parse_intersection():
    I = parse_ideal("intersect((x^2,y),(x,z),(z,w))")
    assert sorted(I.gen_strings()) == sorted(["x^2*z", "y*z", "x^2*w", "x*y*w"])
    assert parse_ideal("(x, x^2)").gen_strings() == ["x"]


def test_parse_errors_report_position():
    with pytest.raises(ParseError) as err:
        parse_ideal("(x^2, q)")
    assert "q" in str(err.value)
    with pytest.raises(ParseError):
        parse_ideal("(x^2, y")
    with pytest.raises(ParseError):
        parse_ideal("x^2")


def test_custom_variables():
    amb = Ambient.from_names(["a", "b", "c"])
    I = parse_ideal("(a*b, c^2)", amb)
    assert I.n == 3 and I.gen_strings() == ["a*b", "c^2"]


def test_unit_and_zero():
    assert parse_ideal("(1)").is_unit()
    assert parse_ideal("(x, 1)").is_unit()
    assert MonomialIdeal.zero(A).format() == "(0)"
    assert parse_ideal("(0)").is_zero()


def test_monomial_ops_examples():
    m = parse_monomial
    assert format_monomial(monomial_ops(m("x^2*y"), m("y*z"))["lcm"]) == "x^2*y*z"
    assert monomial_ops(m("x"), m("x^2*w"))["divides"] is True
    assert format_monomial(monomial_ops(m("x^2*z"), m("y*w"))["gcd"]) == "1"
    assert format_monomial(monomial_ops(m("x^2*y"), m("x*y^3*z"))["quotient"]) == "x"


def test_minimalize_sum_intersect_examples():
    p = parse_ideal
    assert p("(x*z, y*z, x*w, x*y*w)") == p("(x*z, y*z, x*w)")
    assert p("(x,y)") + p("(z,w)") == p("(x,y,z,w)")
    assert (p("(x^2,y)") + p("(z,w)")).gen_strings() == ["y", "z", "w", "x^2"]
    assert (p("(x^2,y)") + MonomialIdeal.unit(A)).is_unit()
    assert p("(x)") & p("(y)") == p("(x*y)")
    assert p("(x^2,y)") & p("(x,z)") == p("(x^2, x*y, y*z)")


def test_colon_examples():
    p, m = parse_ideal, parse_monomial
    assert p("(x*y)").colon(m("x")) == p("(y)")
    assert p("(x^2, x*y, y*z)").colon(m("x")) == p("(x, y)")
    assert p("(x^2, x*y)").colon(m("x")) == p("(x, y)")


def test_radical_and_membership_examples():
    p, m = parse_ideal, parse_monomial
    assert p("(x^2*z, y*z, x^2*w, x*y*w)").radical() == p("(x*z, y*z, x*w)")
    assert p("(x,y)").radical() == p("(x,y)")
    assert p("(x^3)").radical() == p("(x)")
    assert m("x^2*y") in p("(x^2, y)")
    assert m("z") not in p("(x^2*z, y*z)")
    assert p("(x)") & p("(y)") == p("(x*y)")


def test_exponent_limit():
    with pytest.raises(ValueError):
        parse_ideal(f"(x^{2**31})")


def test_grlex_orders_degree_then_lex():
    ms = [parse_monomial(t) for t in ["y", "x^2", "x*y", "x"]]
    assert [format_monomial(m) for m in sorted(ms, key=grlex_key)] == ["x", "y", "x^2", "x*y"]


def test_colon_and_radical_examples():
    I = parse_ideal("(x^2*y, y^3*z)")
    assert I.colon(parse_monomial("x*y")).gen_strings() == ["x", "y^2*z"]
    assert I.radical().gen_strings() == ["x*y", "y*z"]


def test_ambient_mismatch():
    other = parse_ideal("(a)", Ambient.from_names(["a", "b"]))
    with pytest.raises(AmbientMismatch):
        parse_ideal("(x)") + other


def test_primes():
    P = prime_of(parse_ideal("(y, x)"))
    assert P == MonomialPrime((0, 1)) and P.height == 2
    assert prime_of(parse_ideal("(x^2, y)")) is None
    assert MonomialPrime((0,)).issubset(P)


@settings(max_examples=200, deadline=None)
@given(ideals, ideals)
def test_sum_and_intersection_by_membership(I, J):
    for m in brute_box(I, J):
        assert (m in I + J) == (in_ideal(m, I.gens) or in_ideal(m, J.gens))
        assert (m in I & J) == (in_ideal(m, I.gens) and in_ideal(m, J.gens))


@settings(max_examples=200, deadline=None)
@given(ideals, monomials)
def test_colon_by_membership(I, u):
    C = I.colon(u)
    for m in brute_box(I, extra=[u]):
        prod = tuple(a + b for a, b in zip(m, u))
        assert (m in C) == in_ideal(prod, I.gens)


@settings(max_examples=200, deadline=None)
@given(ideals)
def test_radical_by_membership(I):
    R = I.radical()
    top = max(max(g) for g in I.gens) or 1
    for m in brute_box(I):
        power = tuple(a * top for a in m)
        assert (m in R) == in_ideal(power, I.gens)


@given(ideals)
def test_generators_are_minimal_and_sorted(I):
    gens = list(I.gens)
    assert gens == sorted(gens, key=grlex_key)
    for a in gens:
        for b in gens:
            if a != b:
                assert not all(x >= y for x, y in zip(a, b))


@given(ideals, ideals)
def test_intersection_of_many(I, J):
    assert intersect(I, J, I) == I & J


@given(ideals, ideals)
def test_radical_properties(I, J):
    assert I.radical().radical() == I.radical()
    assert (I & J).radical() == I.radical() & J.radical()


@given(st.lists(monomials, min_size=1, max_size=6), st.randoms())
def test_minimalize_order_independent(gens, rnd):
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    I = MonomialIdeal(A, gens)
    assert MonomialIdeal(A, shuffled).gens == I.gens
    assert MonomialIdeal(A, I.gens) == I
