from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from homnambu.errors import (ArityError, FormatError, InvalidParameterError,
                             NonInvertibleError, ScalarDivisionError)
from homnambu.scalars import (CoefficientRing, GaussianRational, I,
                              MultiPoly, TrigRingElem, TruncSeries,
                              format_scalar, parse_scalar, poly_arith,
                              poly_partial, poly_substitute, reciprocal,
                              scalar_arith, series_cos, series_invert,
                              series_mul, series_sin, trig_reduce,
                              univariate_gcd)
from tests.strategies import gaussians, polys, scalars


@pytest.mark.parametrize("value, text", [
    (Fraction(3, 2), "3/2"),
    (-4, "-4"),
    (2 * I, "2i"),
    (-I, "-i"),
    (GaussianRational(Fraction(1, 2), 3), "1/2+3i"),
    (GaussianRational(-1, Fraction(-3, 4)), "-1-3/4i"),
    (GaussianRational(5, 0), "5"),
])
def test_format_scalar(value, text):
    assert format_scalar(value) == text
    assert parse_scalar(text) == value


@given(scalars)
def test_scalar_text_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a
    if b:
        assert (a * b) / b == a
        assert b * reciprocal(b) == 1


def test_gaussian_demotes_to_rational():
    square = (2 * I) * (2 * I)
    assert square == -4
    assert not isinstance(square, GaussianRational)


@pytest.mark.parametrize("text", ["", "abc", "1/0", "2j"])
def test_parse_scalar_rejects(text):
    with pytest.raises(FormatError):
        parse_scalar(text)


def test_division_by_zero():
    with pytest.raises(ScalarDivisionError):
        reciprocal(0)
    with pytest.raises(ZeroDivisionError):
        scalar_arith(I, 0, "div")
    assert scalar_arith(1, 3, "div") == Fraction(1, 3)
    with pytest.raises(ValueError):
        scalar_arith(1, 3, "pow")


NAMES = ("x1", "x2", "x3", "k4")


def test_poly_parse_and_format():
    p = MultiPoly.parse("3/2*x2^2*x3 - k4", NAMES)
    assert p.terms == {(0, 2, 1, 0): Fraction(3, 2), (0, 0, 0, 1): -1}
    assert p.format(NAMES) == "3/2*x2^2*x3 - k4"
    assert MultiPoly.parse(p.format(NAMES), NAMES) == p


def test_poly_parse_rejects_unknown_names():
    with pytest.raises(FormatError):
        MultiPoly.parse("2*y", NAMES)


@given(polys(), polys(), polys())
def test_poly_ring_axioms(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert poly_arith(p, q, "sub") == p - q
    assert (p - p) == 0


@given(polys(), polys())
def test_partial_is_a_derivation(p, q):
    for j in range(3):
        assert poly_partial(p * q, j) == \
            poly_partial(p, j) * q + p * poly_partial(q, j)


@given(polys(max_exponent=2, max_terms=3), polys(max_exponent=2, max_terms=3),
       st.lists(polys(max_exponent=1, max_terms=3), min_size=3, max_size=3))
def test_substitution_is_a_ring_morphism(p, q, images):
    assert (p * q).substitute(images) == \
        p.substitute(images) * q.substitute(images)
    assert (p + q).substitute(images) == \
        p.substitute(images) + q.substitute(images)


def test_substitution_arity_checks():
    p = MultiPoly.variable(0, 3)
    with pytest.raises(ArityError):
        p.substitute([MultiPoly.variable(0, 2)])


def test_substitution_caches_powers():
    x = MultiPoly.variable(0, 1)
    p = MultiPoly({(2, 1): 1}, 2)
    cache = {}
    assert poly_substitute(p, [x + 1, 2], cache=cache) == \
        2 * x * x + 4 * x + 2
    assert set(cache) == {(0, 1), (0, 2), (1, 1)}
    with pytest.raises(ArityError):
        poly_substitute(p, [1, 2])


def test_laurent_powers():
    q = MultiPoly.variable(0, 1, (True,))
    assert q ** -2 * q ** 2 == 1
    with pytest.raises(InvalidParameterError):
        MultiPoly({(-1, 0): 1}, 2)


def test_laurent_parse():
    q = MultiPoly.variable(0, 1, (True,))
    p = MultiPoly.parse("q^-1 - 2*q^2 + 3*q^-2", ("q",), (True,))
    assert p == q ** -1 - 2 * q ** 2 + 3 * q ** -2
    assert MultiPoly.parse(p.format(("q",)), ("q",), (True,)) == p
    with pytest.raises(InvalidParameterError):
        MultiPoly.parse("x^-1", ("x",))


def test_univariate_gcd():
    x = MultiPoly.variable(0, 1)
    gcd = univariate_gcd((x - 1) * (x + 2) * 3, (x - 1) * (x - 3))
    assert gcd == x - 1
    assert univariate_gcd(x * 24, x * x * 42) == x
    assert univariate_gcd(x + 1, x + 2) == 1


@pytest.mark.parametrize("order", range(13))
def test_series_pythagoras(order):
    for index in (0, 1):
        c = series_cos(index, order, 2)
        s = series_sin(index, order, 2)
        assert c * c + s * s == TruncSeries.constant(1, 2, order)


def test_series_sine_coefficients():
    s = series_sin(0, 5)
    assert s.terms == {(1,): 1, (3,): Fraction(-1, 6), (5,): Fraction(1, 120)}


def test_series_invert_geometric():
    one_plus_t = TruncSeries({(0,): 1, (1,): 1}, 1, 2)
    inverse = series_invert(one_plus_t)
    assert inverse.terms == {(0,): 1, (1,): -1, (2,): 1}
    assert str(inverse) == "1 - t + t^2"
    assert one_plus_t ** -1 == inverse
    assert one_plus_t * inverse == 1


@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                       st.integers(-4, 4), max_size=5),
       st.integers(1, 4))
def test_series_inverse_property(terms, order):
    terms[(0, 0)] = 2
    a = TruncSeries(terms, 2, order)
    assert a * series_invert(a) == TruncSeries.constant(1, 2, order)


def test_series_mul_truncates_to_smaller_order():
    a = TruncSeries({(0,): 1, (1,): 1, (3,): 1}, 1, 3)
    b = TruncSeries({(0,): 1, (1,): 1}, 1, 2)
    product = series_mul(a, b)
    assert product.order == 2
    assert product.terms == {(0,): 1, (1,): 2, (2,): 1}
    with pytest.raises(ArityError):
        series_mul(a, TruncSeries.variable(0, 2, 3))


def test_series_without_constant_term_is_not_invertible():
    with pytest.raises(NonInvertibleError):
        series_invert(TruncSeries.variable(0, 1, 3))


def test_series_truncation_and_mixed_orders():
    t3 = TruncSeries({(0,): 1, (3,): 1}, 1, 3)
    t2 = TruncSeries({(1,): 1}, 1, 2)
    assert (t3 + t2).order == 2
    assert t3.truncate(2) == 1
    with pytest.raises(InvalidParameterError):
        t2.truncate(3)
    with pytest.raises(ArityError):
        t2 + TruncSeries.variable(0, 2, 2)


def test_trig_normal_form():
    c1, s1 = TrigRingElem.cos(1), TrigRingElem.sin(1)
    assert s1 ** 2 == 1 - c1 ** 2
    assert c1 * c1 + s1 * s1 == 1
    s2 = MultiPoly.variable(3, 4)
    assert trig_reduce(s2 ** 3).poly == s2 - MultiPoly.variable(2, 4) ** 2 * s2


@pytest.mark.parametrize("ring", [
    CoefficientRing.scalar(),
    CoefficientRing.poly(2),
    CoefficientRing.series(2, 3),
    CoefficientRing.trig(),
])
def test_ring_terms_round_trip(ring):
    value = ring.lift(3)
    if ring.arity:
        value = value + ring.variable(0) * 2
    assert ring.from_terms(ring.terms(value)) == value
    assert ring.constant_term(value) == 3


def test_series_ring_truncates():
    ring = CoefficientRing.series(1, 3)
    value = ring.lift(1) + ring.variable(0) ** 3
    assert ring.truncate(value, 2) == 1
    assert ring.with_order(2) == CoefficientRing.series(1, 2)
    with pytest.raises(InvalidParameterError):
        CoefficientRing.scalar().truncate(1, 2)
