"""Local-cohomology classes as generalized fractions, with the boundary
map toward the origin.

A class is a vector of differential-form numerators (one slot per eps
order) over a powered regular sequence of denominators; triviality and
equality reduce to localized ideal membership of coordinate
coefficients, which is what every verification in the pipeline tests.
"""

from fractions import Fraction

from .errors import UnsupportedNumeratorError
from .groebner import IdealBasis, poly_divexact, leading_term, _expo_divides
from .koszul import DeformedKoszul, permutation_sign
from .localring import LocalFraction, PrimePoint, local_ideal_member
from .poly import Polynomial


def _jacobian_determinant(gens, names):
    """det [d gens_i / d names_j] over the coordinate variables."""
    size = len(gens)
    if size == 0:
        return None  # caller substitutes the constant 1
    rows = [[g.derivative(v) for v in names] for g in gens]

    def det(row_ids, col_ids):
        if len(row_ids) == 1:
            return rows[row_ids[0]][col_ids[0]]
        total = None
        r = row_ids[0]
        for pos, c in enumerate(col_ids):
            minor = det(row_ids[1:], col_ids[:pos] + col_ids[pos + 1 :])
            piece = rows[r][c] * minor
            if pos % 2 == 1:
                piece = -piece
            total = piece if total is None else total + piece
        return total

    return det(list(range(size)), list(range(size)))


def wedge_expansion(gens, locus: PrimePoint):
    """Coordinate expansion of d(gens[0]) ^ ... ^ d(gens[-1]).

    Returns {sorted variable-name subset: LocalFraction coefficient};
    the empty product (no generators) is the single coefficient 1.
    """
    variables = locus.variables
    k = len(gens)
    if k == 0:
        return {(): LocalFraction.from_polynomial(Polynomial.constant(variables, 1), locus)}
    from itertools import combinations

    expansion = {}
    for subset in combinations(variables, k):
        coeff = _jacobian_determinant(list(gens), list(subset))
        if coeff is not None and not coeff.is_zero():
            expansion[subset] = LocalFraction.from_polynomial(coeff, locus)
    return expansion


class FormNumerator:
    """One eps-slot of a class: an overall fraction times a (p-1)-form
    expanded in the coordinate basis.

    When built from symbolic generators the stored expansion is exactly
    the coordinate exterior derivative of their wedge (testable by
    recomputation)."""

    __slots__ = ("coefficient", "wedge", "generators")

    def __init__(self, coefficient: LocalFraction, wedge, generators=None):
        object.__setattr__(self, "coefficient", coefficient)
        object.__setattr__(self, "wedge", dict(wedge))
        object.__setattr__(
            self, "generators", tuple(generators) if generators is not None else None
        )

    def __setattr__(self, name, value):
        raise AttributeError("FormNumerator is immutable")

    @classmethod
    def from_generators(cls, coefficient: LocalFraction, gens, locus: PrimePoint):
        return cls(coefficient, wedge_expansion(gens, locus), generators=gens)

    @property
    def locus(self) -> PrimePoint:
        return self.coefficient.locus

    def flattened(self):
        """{basis subset: coefficient * wedge coefficient}, zero entries
        dropped, keys sorted for deterministic iteration."""
        out = {}
        for subset in sorted(self.wedge):
            value = self.coefficient * self.wedge[subset]
            if not value.is_zero():
                out[subset] = value
        return out

    def is_zero(self) -> bool:
        return not self.flattened()

    def scale(self, factor) -> "FormNumerator":
        return FormNumerator(self.coefficient * factor, self.wedge, self.generators)

    def scale_poly(self, poly: Polynomial) -> "FormNumerator":
        return FormNumerator(self.coefficient.scale_poly(poly), self.wedge, self.generators)


def _combine_flattened(a, b, subtract: bool):
    keys = sorted(set(a) | set(b))
    out = {}
    for key in keys:
        left = a.get(key)
        right = b.get(key)
        if left is None:
            value = -right if subtract else right
        elif right is None:
            value = left
        else:
            value = left - right if subtract else left + right
        if not value.is_zero():
            out[key] = value
    return out


class Witness:
    """One membership record in a triviality verdict."""

    __slots__ = ("component", "basis", "coefficient", "member")

    def __init__(self, component, basis, coefficient, member):
        object.__setattr__(self, "component", component)
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "coefficient", coefficient)
        object.__setattr__(self, "member", member)

    def __setattr__(self, name, value):
        raise AttributeError("Witness is immutable")

    def describe(self) -> str:
        basis = "(" + ", ".join(self.basis) + ")" if self.basis else "()"
        status = "in ideal" if self.member else "NOT in ideal"
        return f"eps^{self.component} d{basis}: {self.coefficient} {status}"


class TrivialityVerdict:
    __slots__ = ("trivial", "witnesses")

    def __init__(self, trivial, witnesses):
        object.__setattr__(self, "trivial", trivial)
        object.__setattr__(self, "witnesses", tuple(witnesses))

    def __setattr__(self, name, value):
        raise AttributeError("TrivialityVerdict is immutable")

    def describe(self) -> str:
        if not self.witnesses:
            return "zero class"
        return "; ".join(w.describe() for w in self.witnesses)


class CohClass:
    """Generalized-fraction class over a powered denominator sequence.

    components[i] is the eps^(i+1) slot; a class of order j has j
    components and none for eps^0."""

    __slots__ = ("denominators", "locus", "components")

    def __init__(self, denominators, locus: PrimePoint, components):
        object.__setattr__(
            self, "denominators", tuple((f, int(k)) for f, k in denominators)
        )
        object.__setattr__(self, "locus", locus)
        object.__setattr__(self, "components", tuple(components))

    def __setattr__(self, name, value):
        raise AttributeError("CohClass is immutable")

    @property
    def order(self) -> int:
        return len(self.components)

    def denominator_ideal(self) -> IdealBasis:
        return IdealBasis([f**k for f, k in self.denominators])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def scale(self, factor) -> "CohClass":
        return CohClass(
            self.denominators, self.locus, [c.scale(factor) for c in self.components]
        )

    def with_powers(self, target_powers) -> "CohClass":
        """Raise denominator powers, multiplying every numerator by the
        matching cofactor (the generalized-fraction rewriting rule)."""
        cofactor = Polynomial.constant(self.locus.variables, 1)
        new_denoms = []
        for (f, k), target in zip(self.denominators, target_powers):
            if target < k:
                raise ValueError("cannot lower a denominator power")
            if target > k:
                cofactor = cofactor * f ** (target - k)
            new_denoms.append((f, target))
        if cofactor.is_constant() and cofactor.constant_term() == 1:
            return CohClass(new_denoms, self.locus, self.components)
        return CohClass(
            new_denoms, self.locus, [c.scale_poly(cofactor) for c in self.components]
        )

    def _check_shape(self, other: "CohClass"):
        if self.locus != other.locus:
            raise ValueError("classes at different loci")
        if self.order != other.order:
            raise ValueError("classes of different orders")
        if tuple(f for f, _ in self.denominators) != tuple(f for f, _ in other.denominators):
            raise ValueError("classes over different denominator sequences")

    def add(self, other: "CohClass") -> "CohClass":
        self._check_shape(other)
        if self.denominators != other.denominators:
            raise ValueError("denominator powers differ; normalize first")
        one = LocalFraction.from_polynomial(
            Polynomial.constant(self.locus.variables, 1), self.locus
        )
        components = [
            FormNumerator(one, _combine_flattened(a.flattened(), b.flattened(), False))
            for a, b in zip(self.components, other.components)
        ]
        return CohClass(self.denominators, self.locus, components)

    def subtract(self, other: "CohClass") -> "CohClass":
        self._check_shape(other)
        if self.denominators != other.denominators:
            raise ValueError("denominator powers differ; normalize first")
        one = LocalFraction.from_polynomial(
            Polynomial.constant(self.locus.variables, 1), self.locus
        )
        components = [
            FormNumerator(one, _combine_flattened(a.flattened(), b.flattened(), True))
            for a, b in zip(self.components, other.components)
        ]
        return CohClass(self.denominators, self.locus, components)

    def describe(self) -> str:
        denoms = ", ".join(
            str(f) if k == 1 else f"({f})^{k}" for f, k in self.denominators
        )
        if self.is_zero():
            return f"0 over ({denoms}) at {self.locus}"
        lines = [f"over ({denoms}) at {self.locus}"]
        for i, comp in enumerate(self.components, start=1):
            flat = comp.flattened()
            if not flat:
                continue
            for subset, value in flat.items():
                basis = "(" + ", ".join(subset) + ")" if subset else "()"
                lines.append(f"  eps^{i} d{basis}: {value}")
        return "\n".join(lines)


def normalize_powers(classes):
    """Rewrite classes over the same denominator polynomials to common
    (positionwise maximal) powers so they can be added or compared."""
    classes = list(classes)
    first = classes[0]
    for c in classes[1:]:
        first._check_shape(c)
    targets = [
        max(c.denominators[i][1] for c in classes) for i in range(len(first.denominators))
    ]
    return [c.with_powers(targets) for c in classes]


def ch_representative(d: DeformedKoszul) -> CohClass:
    """Chern-character representative of a deformed Koszul generator:
    component i carries the eps^i deformation fraction against the wedge
    of the undeformed tail of the sequence."""
    tail = list(d.base[1:])
    components = [
        FormNumerator.from_generators(h, tail, d.locus) for h in d.deformation
    ]
    denominators = [(f, 1) for f in d.base]
    return CohClass(denominators, d.locus, components)


def class_is_trivial(c: CohClass) -> TrivialityVerdict:
    """Trivial iff every coordinate coefficient of every component lies
    in the localized ideal of the powered denominators."""
    witnesses = []
    trivial = True
    ideal = None
    for i, comp in enumerate(c.components, start=1):
        for subset, value in comp.flattened().items():
            if ideal is None:
                ideal = c.denominator_ideal()
            member = local_ideal_member(value, ideal, c.locus)
            witnesses.append(Witness(i, subset, str(value), member))
            trivial = trivial and member
    return TrivialityVerdict(trivial, witnesses)


def class_difference(c1: CohClass, c2: CohClass) -> CohClass:
    """Difference after normalizing to common denominator powers."""
    a, b = normalize_powers([c1, c2])
    return a.subtract(b)


def class_equal(c1: CohClass, c2: CohClass) -> bool:
    return class_is_trivial(class_difference(c1, c2)).trivial


def factor_extra_power(denominator: Polynomial, extra: Polynomial):
    """Factor denominator = rest * extra^k with the maximal k; rest need
    not be a unit (callers check)."""
    k = 0
    rest = denominator
    ee, _ = leading_term(extra)
    while not rest.is_constant():
        re, _ = leading_term(rest)
        if not _expo_divides(ee, re):
            break
        try:
            rest = poly_divexact(rest, extra)
        except ValueError:
            break
        k += 1
    return rest, k


def boundary(c: CohClass, extra: Polynomial) -> CohClass:
    """Boundary toward the origin: extend the denominator sequence by the
    extra divisor and clear its powers out of every coefficient.

    Coefficients must have denominators of the form unit * extra^k (k = 0
    handled by multiplying through by extra); anything else is refused.
    """
    if not extra.vanishes_at_origin() or extra.is_zero():
        raise ValueError("extra divisor must vanish at the origin and be nonzero")
    if c.locus.contains(extra):
        raise ValueError("extra divisor lies in the class locus")
    origin = PrimePoint.origin(c.locus.variables)
    parts = []  # per component: list of (basis subset, numerator, unit, k)
    max_k = 1
    for comp in c.components:
        rows = []
        for subset, value in comp.flattened().items():
            unit, k = factor_extra_power(value.denominator, extra)
            if unit.constant_term() == 0:
                raise UnsupportedNumeratorError(
                    f"denominator {value.denominator} is not unit * ({extra})^k"
                )
            rows.append((subset, value.numerator, unit, k))
            max_k = max(max_k, k)
        parts.append(rows)
    one = LocalFraction.from_polynomial(Polynomial.constant(c.locus.variables, 1), origin)
    components = []
    for rows in parts:
        flattened = {}
        for subset, numerator, unit, k in rows:
            lifted = numerator * extra ** (max_k - k)
            flattened[subset] = LocalFraction(lifted, unit, origin)
        components.append(FormNumerator(one, flattened))
    denominators = list(c.denominators) + [(extra, max_k)]
    return CohClass(denominators, origin, components)


def reorder_class(c: CohClass, perm) -> CohClass:
    """Class over the permuted denominator sequence; every component picks
    up the sign of the permutation (wedge-top determinant)."""
    perm = tuple(perm)
    if len(perm) != len(c.denominators):
        raise ValueError("permutation length differs from denominator count")
    sign = permutation_sign(perm)
    denominators = [c.denominators[perm[i]] for i in range(len(perm))]
    if sign == 1:
        return CohClass(denominators, c.locus, c.components)
    return CohClass(
        denominators, c.locus, [comp.scale(Fraction(sign)) for comp in c.components]
    )
