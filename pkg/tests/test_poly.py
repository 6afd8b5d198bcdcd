import random
from fractions import Fraction

import pytest

from cyclelift import Polynomial, PolynomialParseError, UnknownVariableError
from cyclelift.poly import grevlex_key, parse_fraction, parse_polynomial

VARS = ("x", "y")


def test_parse_expands_products():
    p = parse_polynomial("x*y + y^2", VARS)
    assert p.terms == {(1, 1): Fraction(1), (0, 2): Fraction(1)}


def test_parse_zero():
    assert parse_polynomial("0", VARS).terms == {}


def test_parse_binomial_identity():
    p = parse_polynomial("(x+y)^2 - x^2 - 2*x*y", VARS)
    assert p.terms == {(0, 2): Fraction(1)}


def test_parse_rational_literal():
    p = parse_polynomial("1/2*x + 3/4", VARS)
    assert p.terms == {(1, 0): Fraction(1, 2), (0, 0): Fraction(3, 4)}


def test_parse_unary_minus_and_power():
    p = parse_polynomial("-x^2 + 2^3", VARS)
    assert p.terms == {(2, 0): Fraction(-1), (0, 0): Fraction(8)}


def test_parse_reports_offset():
    with pytest.raises(PolynomialParseError) as err:
        parse_polynomial("x + @", VARS)
    assert err.value.offset == 4


def test_parse_unknown_variable():
    with pytest.raises(UnknownVariableError) as err:
        parse_polynomial("x + t", VARS)
    assert err.value.name == "t"


def test_parse_rejects_general_division():
    with pytest.raises(PolynomialParseError):
        parse_polynomial("x/(x+y)", VARS)


def test_parse_fraction_splits_at_top_level():
    num, den = parse_fraction("1/(x+y)", VARS)
    assert num == Polynomial.constant(VARS, 1)
    assert den == parse_polynomial("x+y", VARS)


def test_parse_fraction_rational_coefficient_is_not_a_split():
    num, den = parse_fraction("1/2*y", VARS)
    assert num == parse_polynomial("1/2*y", VARS)
    assert den == Polynomial.constant(VARS, 1)


def test_parse_fraction_rejects_two_slashes():
    with pytest.raises(PolynomialParseError):
        parse_fraction("x/(x+y)/(1+x)", VARS)


def test_arithmetic_ring_axioms_random():
    rng = random.Random(7)

    def rand_poly():
        terms = {}
        for _ in range(rng.randint(0, 4)):
            expo = (rng.randint(0, 3), rng.randint(0, 3))
            terms[expo] = Fraction(rng.randint(-5, 5))
        return Polynomial(VARS, terms)

    for _ in range(50):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a - a).is_zero()


def test_grevlex_total_degree_dominates():
    # x^2 beats y (degree), x*y beats x^2? no: same degree, last unequal
    # exponent of x*y - x^2 is +1 in y, so x^2 is larger
    assert grevlex_key((2, 0)) > grevlex_key((0, 1))
    assert grevlex_key((2, 0)) > grevlex_key((1, 1))


def test_derivative():
    p = parse_polynomial("x^2*y + 3*y", VARS)
    assert p.derivative("x") == parse_polynomial("2*x*y", VARS)
    assert p.derivative("y") == parse_polynomial("x^2 + 3", VARS)


def test_str_round_trip():
    texts = ["x^2*y - 2*x + 1/2", "-x + y", "0", "3", "x*y"]
    for text in texts:
        p = parse_polynomial(text, VARS)
        assert parse_polynomial(str(p), VARS) == p


def test_rational_invariants():
    q = Fraction(6, -4)
    assert q.denominator > 0
    assert abs(Fraction(q.numerator, q.denominator) - q) == 0
    assert Fraction(2, 4) == Fraction(1, 2)
