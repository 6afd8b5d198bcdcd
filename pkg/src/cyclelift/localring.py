"""Local data at a point: prime loci, localized fractions, truncated series.

Fractions are elements of the polynomial ring localized at a recorded
prime; series are elements of that localization with a nilpotent
parameter `eps` truncated at a fixed order.
"""

from fractions import Fraction

from .errors import InvalidFractionError, NonUnitError, NotRegularError
from .groebner import IdealBasis, ideal_member, ideal_quotient, is_regular_sequence
from .poly import Polynomial

MAXIMAL_ORIGIN = "maximal_origin"
SEQUENCE_PRIME = "sequence_prime"


class PrimePoint:
    """A prime of the polynomial ring: either the maximal ideal of the
    origin, or a prime cut out by a regular sequence through the origin.

    The sequence case checks regularity (correct codimension) at
    construction; primality of the generated ideal is trusted.
    """

    __slots__ = ("kind", "generators", "variables", "_ideal")

    def __init__(self, kind, generators, variables):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "generators", tuple(generators))
        object.__setattr__(self, "variables", tuple(variables))
        object.__setattr__(self, "_ideal", None)

    def __setattr__(self, name, value):
        raise AttributeError("PrimePoint is immutable")

    @classmethod
    def origin(cls, variables):
        return cls(MAXIMAL_ORIGIN, (), variables)

    @classmethod
    def from_sequence(cls, generators):
        generators = tuple(generators)
        if not generators:
            raise NotRegularError("a sequence prime needs at least one generator")
        if not is_regular_sequence(generators):
            raise NotRegularError(
                "generators do not form a regular sequence: "
                + ", ".join(str(g) for g in generators)
            )
        return cls(SEQUENCE_PRIME, generators, generators[0].variables)

    def is_origin(self) -> bool:
        return self.kind == MAXIMAL_ORIGIN

    def contains(self, poly: Polynomial) -> bool:
        """Membership of a polynomial in the prime."""
        if poly.variables != self.variables:
            raise ValueError("polynomial over different variables")
        if self.kind == MAXIMAL_ORIGIN:
            return poly.constant_term() == 0
        return ideal_member(poly, self.ideal())

    def ideal(self) -> IdealBasis:
        cached = self._ideal
        if cached is None:
            if self.kind == MAXIMAL_ORIGIN:
                gens = [Polynomial.variable(self.variables, v) for v in self.variables]
            else:
                gens = list(self.generators)
            cached = IdealBasis(gens)
            object.__setattr__(self, "_ideal", cached)
        return cached

    def __eq__(self, other):
        if not isinstance(other, PrimePoint):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.generators == other.generators
            and self.variables == other.variables
        )

    def __str__(self):
        if self.kind == MAXIMAL_ORIGIN:
            return "origin"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"PrimePoint({self})"


class LocalFraction:
    """u/v in the localization at `locus`; v must lie outside the prime."""

    __slots__ = ("numerator", "denominator", "locus")

    def __init__(self, numerator: Polynomial, denominator: Polynomial, locus: PrimePoint):
        if denominator.is_zero() or locus.contains(denominator):
            raise InvalidFractionError(
                f"denominator {denominator} lies in the locus {locus}"
            )
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)
        object.__setattr__(self, "locus", locus)

    def __setattr__(self, name, value):
        raise AttributeError("LocalFraction is immutable")

    @classmethod
    def zero(cls, locus: PrimePoint):
        one = Polynomial.constant(locus.variables, 1)
        return cls(Polynomial.zero(locus.variables), one, locus)

    @classmethod
    def from_polynomial(cls, poly: Polynomial, locus: PrimePoint):
        return cls(poly, Polynomial.constant(locus.variables, 1), locus)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def _check(self, other: "LocalFraction"):
        if self.locus != other.locus:
            raise ValueError("fractions at different loci")

    def __add__(self, other: "LocalFraction"):
        self._check(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.denominator == other.denominator:
            return LocalFraction(
                self.numerator + other.numerator, self.denominator, self.locus
            )
        return LocalFraction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
            self.locus,
        )

    def __neg__(self):
        return LocalFraction(-self.numerator, self.denominator, self.locus)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LocalFraction(self.numerator * other, self.denominator, self.locus)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return LocalFraction.zero(self.locus)
        return LocalFraction(
            self.numerator * other.numerator,
            self.denominator * other.denominator,
            self.locus,
        )

    __rmul__ = __mul__

    def scale_poly(self, poly: Polynomial) -> "LocalFraction":
        if poly.is_zero() or self.is_zero():
            return LocalFraction.zero(self.locus)
        return LocalFraction(self.numerator * poly, self.denominator, self.locus)

    def reciprocal(self) -> "LocalFraction":
        if self.locus.contains(self.numerator) or self.numerator.is_zero():
            raise NonUnitError(f"{self} is not a unit at {self.locus}")
        return LocalFraction(self.denominator, self.numerator, self.locus)

    def __eq__(self, other):
        # structural equality: same numerator and denominator exactly
        if not isinstance(other, LocalFraction):
            return NotImplemented
        return (
            self.locus == other.locus
            and self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def equal_in_localization(self, other: "LocalFraction") -> bool:
        """Equality as elements of the localized ring (cross-multiplied)."""
        self._check(other)
        return (self.numerator * other.denominator - other.numerator * self.denominator).is_zero()

    def __str__(self):
        if self.denominator == Polynomial.constant(self.locus.variables, 1):
            return str(self.numerator)
        num = str(self.numerator)
        if len(self.numerator.terms) > 1:
            num = f"({num})"
        return f"{num}/({self.denominator})"

    def __repr__(self):
        return f"LocalFraction({self})"


class EpsElement:
    """Element of the localized ring with a nilpotent eps of order j:
    coefficients (slot i carries eps^i), products truncate at eps^(j+1)."""

    __slots__ = ("order", "coefficients")

    def __init__(self, order: int, coefficients):
        coefficients = tuple(coefficients)
        if order < 0 or len(coefficients) != order + 1:
            raise ValueError("coefficient list must have length order+1")
        locus = coefficients[0].locus
        for c in coefficients:
            if c.locus != locus:
                raise ValueError("coefficients at different loci")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coefficients", coefficients)

    def __setattr__(self, name, value):
        raise AttributeError("EpsElement is immutable")

    @property
    def locus(self) -> PrimePoint:
        return self.coefficients[0].locus

    @classmethod
    def from_fraction(cls, frac: LocalFraction, order: int):
        zero = LocalFraction.zero(frac.locus)
        return cls(order, (frac,) + (zero,) * order)

    @classmethod
    def from_polynomial(cls, poly: Polynomial, order: int, locus: PrimePoint):
        return cls.from_fraction(LocalFraction.from_polynomial(poly, locus), order)

    @classmethod
    def zero(cls, order: int, locus: PrimePoint):
        return cls(order, (LocalFraction.zero(locus),) * (order + 1))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients)

    def _check(self, other: "EpsElement"):
        if self.order != other.order:
            raise ValueError("eps elements of different orders")
        if self.locus != other.locus:
            raise ValueError("eps elements at different loci")

    def __add__(self, other):
        self._check(other)
        return EpsElement(
            self.order, tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __neg__(self):
        return EpsElement(self.order, tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        zero = LocalFraction.zero(self.locus)
        slots = [zero] * (self.order + 1)
        for i, a in enumerate(self.coefficients):
            if a.is_zero():
                continue
            for k in range(self.order + 1 - i):
                b = other.coefficients[k]
                if b.is_zero():
                    continue
                slots[i + k] = slots[i + k] + a * b
        return EpsElement(self.order, slots)

    def truncate(self, new_order: int) -> "EpsElement":
        if new_order > self.order:
            raise ValueError("cannot truncate upward")
        return EpsElement(new_order, self.coefficients[: new_order + 1])

    def __eq__(self, other):
        if not isinstance(other, EpsElement):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coefficients):
            if c.is_zero():
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"eps*{c}")
            else:
                parts.append(f"eps^{i}*{c}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"EpsElement({self})"


def eps_invert(u: EpsElement) -> EpsElement:
    """Inverse of u in the truncated ring, by the finite geometric-series
    recursion on slots; the eps^0 slot must be a unit at the locus."""
    head = u.coefficients[0]
    inv0 = head.reciprocal()  # raises NonUnitError when not a unit
    slots = [inv0]
    for k in range(1, u.order + 1):
        acc = LocalFraction.zero(u.locus)
        for i in range(1, k + 1):
            acc = acc + u.coefficients[i] * slots[k - i]
        slots.append(-(inv0 * acc))
    return EpsElement(u.order, slots)


def local_ideal_member(u: LocalFraction, ideal: IdealBasis, locus: PrimePoint) -> bool:
    """True iff u lies in the ideal extended to the localization at locus.

    Decided by the quotient criterion: u = a/b with b a unit means
    membership iff (ideal : a) is not contained in the locus prime.
    Plain membership of the numerator is checked first as a fast path.
    """
    if u.locus != locus:
        raise InvalidFractionError("fraction recorded at a different locus")
    a = u.numerator
    if a.is_zero():
        return True
    if ideal_member(a, ideal):
        return True
    quotient = ideal_quotient(ideal, a)
    return any(not locus.contains(g) for g in quotient.groebner)
