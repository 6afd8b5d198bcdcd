import random
from fractions import Fraction

import pytest

from cyclelift import (
    EpsElement,
    IdealBasis,
    InvalidFractionError,
    LocalFraction,
    NonUnitError,
    PrimePoint,
    eps_invert,
    ideal_member,
    local_ideal_member,
)
from cyclelift.poly import Polynomial, parse_polynomial

V2 = ("x", "y")


def P(text, variables=V2):
    return parse_polynomial(text, variables)


ORIGIN = PrimePoint.origin(V2)
PX = PrimePoint.from_sequence([P("x")])


def frac(num, den="1", locus=PX):
    return LocalFraction(P(num), P(den), locus)


def test_prime_point_membership():
    assert ORIGIN.contains(P("x + y^2"))
    assert not ORIGIN.contains(P("1 + x"))
    assert PX.contains(P("x*y"))
    assert not PX.contains(P("y"))


def test_invalid_fraction_rejected():
    with pytest.raises(InvalidFractionError):
        LocalFraction(P("1"), P("x"), PX)
    with pytest.raises(InvalidFractionError):
        LocalFraction(P("1"), P("x + y"), ORIGIN)


def test_fraction_arithmetic_common_denominator():
    a = frac("1", "y")
    b = frac("x", "y")
    assert (a + b) == frac("1 + x", "y")
    assert (a - a).is_zero()
    assert (a * b) == frac("x", "y^2")


def test_local_member_trivial_cases():
    assert local_ideal_member(
        LocalFraction(P("y"), P("1"), ORIGIN), IdealBasis([P("x"), P("y")]), ORIGIN
    )
    assert not local_ideal_member(
        LocalFraction(P("1"), P("1+x"), ORIGIN), IdealBasis([P("x"), P("y")]), ORIGIN
    )


def test_local_member_difference_fraction():
    # the coefficient comparison behind first-order class equality:
    # (-x)/((x+y)*y) lies in (x) localized at (x)
    u = LocalFraction(P("-x"), P("(x+y)*y"), PX)
    assert local_ideal_member(u, IdealBasis([P("x")]), PX)


def test_local_member_agrees_with_global_on_m_primary():
    # denominator 1, m-primary ideals, all numerators of degree <= 4
    ideals = [
        IdealBasis([P("x"), P("y")]),
        IdealBasis([P("x^2"), P("y")]),
        IdealBasis([P("x^2"), P("x*y"), P("y^3")]),
    ]
    monomials = [
        Polynomial(V2, {(i, j): Fraction(1)})
        for i in range(5)
        for j in range(5)
        if i + j <= 4
    ]
    for ideal in ideals:
        for u in monomials:
            local = local_ideal_member(LocalFraction(u, P("1"), ORIGIN), ideal, ORIGIN)
            assert local == ideal_member(u, ideal)


def test_eps_invert_first_order():
    u = EpsElement(1, (frac("1"), frac("x")))
    v = eps_invert(u)
    assert v.coefficients[1] == frac("-x")
    product = u * v
    assert product.coefficients[0].equal_in_localization(frac("1"))
    assert product.coefficients[1].is_zero()


def test_eps_invert_constant_series():
    u = EpsElement.from_polynomial(P("y"), 2, PX)
    v = eps_invert(u)
    assert v.coefficients[0] == frac("1", "y")
    assert v.coefficients[1].is_zero() and v.coefficients[2].is_zero()


def test_eps_invert_derived_example():
    # (y + eps)^(-1) = 1/y - eps/y^2 + eps^2/y^3 at order 2
    u = EpsElement(2, (frac("y"), frac("1"), LocalFraction.zero(PX)))
    v = eps_invert(u)
    assert v.coefficients[0] == frac("1", "y")
    assert v.coefficients[1] == frac("-1", "y^2")
    assert v.coefficients[2] == frac("1", "y^3")
    product = u * v
    assert product.coefficients[0].equal_in_localization(frac("1"))
    assert all(c.is_zero() for c in product.coefficients[1:])


def test_eps_invert_requires_unit():
    with pytest.raises(NonUnitError):
        eps_invert(EpsElement(1, (frac("x"), frac("1"))))


def test_eps_invert_random_units():
    rng = random.Random(23)

    def rand_frac():
        num = Polynomial(
            V2,
            {
                (rng.randint(0, 2), rng.randint(0, 2)): Fraction(rng.randint(-3, 3))
                for _ in range(rng.randint(1, 3))
            },
        )
        return LocalFraction(num, P(rng.choice(["1", "y", "1+y", "2"])), PX)

    count = 0
    while count < 200:
        order = rng.randint(0, 3)
        head_num = P(rng.choice(["1", "y", "1+x", "2+y", "3"]))
        head_den = P(rng.choice(["1", "y", "1+y"]))
        u = EpsElement(
            order,
            (LocalFraction(head_num, head_den, PX),)
            + tuple(rand_frac() for _ in range(order)),
        )
        v = eps_invert(u)
        product = u * v
        assert product.coefficients[0].equal_in_localization(frac("1"))
        assert all(c.is_zero() for c in product.coefficients[1:])
        count += 1


def test_truncate():
    u = EpsElement(2, (frac("1"), frac("x"), frac("y")))
    t = u.truncate(1)
    assert t.order == 1 and t.coefficients == u.coefficients[:2]
