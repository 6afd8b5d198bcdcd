"""Cycle-level constructions: the deformed target class, the auxiliary
class, the combined family with its localized splitting, restriction,
cycle membership at the origin, and the obstruction pipeline.

A cycle element is a formal rational combination of deformed Koszul
generators at a common truncation order; membership in the cycle group
is decided by pushing each generator's Chern representative across the
boundary map and testing triviality of the signed sum.
"""

from fractions import Fraction

from .cohomology import (
    CohClass,
    FormNumerator,
    ch_representative,
    boundary,
    class_difference,
    class_is_trivial,
    factor_extra_power,
    normalize_powers,
    reorder_class,
)
from .errors import (
    NotApplicableError,
    ScenarioInvariantError,
    UnrecognizedLocusError,
    UnsupportedNumeratorError,
)
from .groebner import IdealBasis, ideal_member, is_regular_sequence
from .koszul import DeformedKoszul, multiplicity
from .localring import (
    EpsElement,
    LocalFraction,
    PrimePoint,
    eps_invert,
    local_ideal_member,
)
from .poly import Polynomial

UNOBSTRUCTED = "unobstructed"
OBSTRUCTED = "obstructed"
UNSUPPORTED = "unsupported"


class Scenario:
    """Validated input data: the defining sequence f of the target, the
    extra divisor fnext cutting the auxiliary locus, the truncation
    order, the first-order deformation fraction and the coefficient
    lists for the combined family and the obstruction decomposition."""

    __slots__ = (
        "variables",
        "f",
        "fnext",
        "order",
        "deform_g",
        "a",
        "b_decomp",
        "target_locus",
        "auxiliary_locus",
    )

    def __init__(self, variables, f, fnext, order, deform_g=None, a=(), b_decomp=None):
        variables = tuple(variables)
        f = tuple(f)
        a = tuple(a)
        if not f:
            raise ScenarioInvariantError("f must contain at least one polynomial")
        p = len(f)
        if len(variables) < p + 1:
            raise ScenarioInvariantError(
                f"need at least {p + 1} variables for a sequence of length {p}"
            )
        for poly in f + (fnext,):
            if poly.is_zero() or poly.is_constant():
                raise ScenarioInvariantError(f"entry is zero or constant: {poly}")
            if not poly.vanishes_at_origin():
                raise ScenarioInvariantError(f"entry does not vanish at the origin: {poly}")
        if not is_regular_sequence(f):
            raise ScenarioInvariantError("f is not a regular sequence")
        if not is_regular_sequence((fnext,) + f[1:]):
            raise ScenarioInvariantError("(fnext, f2, ..., fp) is not a regular sequence")
        if not is_regular_sequence(f + (fnext,)):
            raise ScenarioInvariantError("(f1, ..., fp, fnext) is not a regular sequence")
        if ideal_member(fnext, IdealBasis(f)):
            raise ScenarioInvariantError("fnext lies in the ideal of f")
        if order < 0:
            raise ScenarioInvariantError("order must be nonnegative")
        if b_decomp is not None:
            b_decomp = tuple(b_decomp)
            if len(b_decomp) != p:
                raise ScenarioInvariantError(
                    f"b_decomp needs exactly {p} entries, got {len(b_decomp)}"
                )
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "fnext", fnext)
        object.__setattr__(self, "order", int(order))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b_decomp", b_decomp)
        target = PrimePoint.from_sequence(f)
        auxiliary = PrimePoint.from_sequence((fnext,) + f[1:])
        object.__setattr__(self, "target_locus", target)
        object.__setattr__(self, "auxiliary_locus", auxiliary)
        if isinstance(deform_g, tuple):
            deform_g = LocalFraction(deform_g[0], deform_g[1], target)
        if deform_g is not None and deform_g.locus != target:
            raise ScenarioInvariantError("deformation fraction must live at the target locus")
        object.__setattr__(self, "deform_g", deform_g)

    def __setattr__(self, name, value):
        raise AttributeError("Scenario is immutable")

    @property
    def p(self) -> int:
        return len(self.f)

    def origin(self) -> PrimePoint:
        return PrimePoint.origin(self.variables)


class CycleElement:
    """Formal rational combination of deformed Koszul generators sharing
    one truncation order; equal generators merge and zero terms drop."""

    __slots__ = ("terms", "order")

    def __init__(self, terms, order: int):
        merged: list[tuple[Fraction, DeformedKoszul]] = []
        for coeff, gen in terms:
            coeff = Fraction(coeff)
            if gen.order != order:
                raise ValueError(
                    f"generator order {gen.order} differs from element order {order}"
                )
            for i, (c0, g0) in enumerate(merged):
                if g0 == gen:
                    merged[i] = (c0 + coeff, g0)
                    break
            else:
                merged.append((coeff, gen))
        merged = [(c, g) for c, g in merged if c != 0]
        merged.sort(key=lambda t: t[1].sort_key())
        object.__setattr__(self, "terms", tuple(merged))
        object.__setattr__(self, "order", int(order))

    def __setattr__(self, name, value):
        raise AttributeError("CycleElement is immutable")

    def add(self, other: "CycleElement") -> "CycleElement":
        if self.order != other.order:
            raise ValueError("cycle elements of different orders")
        return CycleElement(self.terms + other.terms, self.order)

    def negate(self) -> "CycleElement":
        return CycleElement([(-c, g) for c, g in self.terms], self.order)

    def sub(self, other: "CycleElement") -> "CycleElement":
        return self.add(other.negate())

    def scale(self, factor) -> "CycleElement":
        return CycleElement([(c * Fraction(factor), g) for c, g in self.terms], self.order)

    def at_order(self, new_order: int) -> "CycleElement":
        """The same formal sum viewed at a higher truncation order (the
        eps-free inclusion pads deformations with zero slots)."""
        if new_order == self.order:
            return self
        return CycleElement(
            [(c, g.pad(new_order)) for c, g in self.terms], new_order
        )

    def restrict(self, to_order: int) -> "CycleElement":
        if to_order > self.order:
            raise ValueError("restriction must lower the order")
        return CycleElement(
            [(c, g.truncate(to_order)) for c, g in self.terms], to_order
        )

    def __eq__(self, other):
        if not isinstance(other, CycleElement):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{g}]" for c, g in self.terms)


def restrict(e: CycleElement, to_order: int) -> CycleElement:
    """Truncate every generator's deformation to the lower order."""
    return e.restrict(to_order)


class MilnorVerdict:
    """Outcome of the cycle test: the summed boundary class at the origin
    and the triviality verdict that decided it."""

    __slots__ = ("is_cycle", "boundary_class", "verdict")

    def __init__(self, is_cycle, boundary_class, verdict):
        object.__setattr__(self, "is_cycle", is_cycle)
        object.__setattr__(self, "boundary_class", boundary_class)
        object.__setattr__(self, "verdict", verdict)

    def __setattr__(self, name, value):
        raise AttributeError("MilnorVerdict is immutable")

    def describe(self) -> str:
        status = "cycle" if self.is_cycle else "not a cycle"
        flat = " | ".join(
            line.strip() for line in self.boundary_class.describe().splitlines()
        )
        return f"{status}; boundary {flat}"


# -- cycle constructions -----------------------------------------------------


def target_cycle(s: Scenario) -> CycleElement:
    """Class of the target subvariety: undeformed when the deformation
    fraction is zero or absent, first order otherwise."""
    if s.deform_g is None or s.deform_g.is_zero():
        gen = DeformedKoszul(s.f, (), s.target_locus)
        return CycleElement([(Fraction(1), gen)], 0)
    gen = DeformedKoszul(s.f, (s.deform_g,), s.target_locus)
    return CycleElement([(Fraction(1), gen)], 1)


def undeformed_target(s: Scenario) -> CycleElement:
    gen = DeformedKoszul(s.f, (), s.target_locus)
    return CycleElement([(Fraction(1), gen)], 0)


def lift_target_cycle(s: Scenario, higher) -> CycleElement:
    """First-order target deformation extended by the given higher
    corrections (fractions for eps^2, eps^3, ...)."""
    if s.deform_g is None:
        raise NotApplicableError("scenario carries no deformation fraction")
    deformation = (s.deform_g,) + tuple(higher)
    gen = DeformedKoszul(s.f, deformation, s.target_locus)
    return CycleElement([(Fraction(1), gen)], len(deformation))


def auxiliary_cycle(s: Scenario) -> CycleElement:
    """Class of the auxiliary subvariety cut out by (fnext, f2, ..., fp)."""
    gen = DeformedKoszul((s.fnext,) + s.f[1:], (), s.auxiliary_locus)
    return CycleElement([(Fraction(1), gen)], 0)


def _inverse_scaled_slots(numerators, unit_poly: Polynomial, order: int, locus: PrimePoint):
    """Slots of (eps*a_1 + ... + eps^j*a_j) * unit_poly^(-1) in the
    truncated ring, computed through series inversion."""
    unit = EpsElement.from_polynomial(unit_poly, order, locus)
    inverse = eps_invert(unit)
    zero = LocalFraction.zero(locus)
    series = EpsElement(
        order,
        (zero,)
        + tuple(LocalFraction.from_polynomial(a, locus) for a in numerators[:order]),
    )
    product = series * inverse
    assert product.coefficients[0].is_zero()
    return product.coefficients[1:]


def combined_cycle(s: Scenario, order: int) -> CycleElement:
    """The family deforming target and auxiliary at once, split into its
    two localized components."""
    if order > len(s.a):
        raise ScenarioInvariantError(
            f"combined family at order {order} needs {order} entries in a, got {len(s.a)}"
        )
    target_slots = _inverse_scaled_slots(s.a, s.fnext, order, s.target_locus)
    aux_slots = _inverse_scaled_slots(s.a, s.f[0], order, s.auxiliary_locus)
    c1 = DeformedKoszul(s.f, target_slots, s.target_locus)
    c2 = DeformedKoszul((s.fnext,) + s.f[1:], aux_slots, s.auxiliary_locus)
    return CycleElement([(Fraction(1), c1), (Fraction(1), c2)], order)


# -- cycle membership --------------------------------------------------------


def _boundary_form(ch: CohClass, extra: Polynomial) -> CohClass:
    """Rewrite coefficients into unit * extra^k denominator shape.

    A coefficient u/v whose extra-free denominator part is not a unit is
    replaced by u/extra^(k+1) only when the two fractions present the
    same class over the current denominators (localized membership of
    the difference); otherwise the shape is refused.
    """
    changed = False
    ideal = None
    one = LocalFraction.from_polynomial(
        Polynomial.constant(ch.locus.variables, 1), ch.locus
    )
    new_components = []
    for comp in ch.components:
        flat = comp.flattened()
        out = {}
        for subset, value in flat.items():
            rest, k = factor_extra_power(value.denominator, extra)
            if rest.constant_term() == 0:
                candidate = LocalFraction(value.numerator, extra ** (k + 1), ch.locus)
                if ideal is None:
                    ideal = ch.denominator_ideal()
                if not local_ideal_member(value - candidate, ideal, ch.locus):
                    raise UnsupportedNumeratorError(
                        f"coefficient {value} cannot be presented over a power of {extra}"
                    )
                value = candidate
                changed = True
            out[subset] = value
        new_components.append(FormNumerator(one, out))
    if not changed:
        return ch
    return CohClass(ch.denominators, ch.locus, new_components)


def _zero_boundary(s: Scenario, order: int) -> CohClass:
    origin = s.origin()
    one = LocalFraction.from_polynomial(Polynomial.constant(s.variables, 1), origin)
    denominators = [(f, 1) for f in s.f] + [(s.fnext, 1)]
    components = [FormNumerator(one, {}) for _ in range(order)]
    return CohClass(denominators, origin, components)


def is_milnor_cycle(e: CycleElement, s: Scenario) -> MilnorVerdict:
    """Test whether the summed boundary image at the origin vanishes.

    Generators at the target locus push forward along fnext, generators
    at the auxiliary locus along f1 followed by the sign-carrying
    reordering onto the common denominator sequence (f1..fp, fnext);
    eps-free generators contribute nothing.
    """
    p = s.p
    move_last_first = (p,) + tuple(range(1, p)) + (0,)
    contributions = []
    for coeff, gen in e.terms:
        if gen.is_eps_free():
            continue
        if gen.locus == s.target_locus and gen.base == s.f:
            extra, sigma = s.fnext, None
        elif gen.locus == s.auxiliary_locus and gen.base == (s.fnext,) + s.f[1:]:
            extra, sigma = s.f[0], move_last_first
        else:
            raise UnrecognizedLocusError(
                f"generator at {gen.locus} with base "
                f"({', '.join(str(b) for b in gen.base)}) is not part of this scenario"
            )
        ch = ch_representative(gen)
        ch = _boundary_form(ch, extra)
        part = boundary(ch, extra)
        if sigma is not None:
            part = reorder_class(part, sigma)
        if coeff != 1:
            part = part.scale(coeff)
        contributions.append(part)
    if not contributions:
        total = _zero_boundary(s, e.order)
    else:
        normalized = normalize_powers(contributions)
        total = normalized[0]
        for part in normalized[1:]:
            total = total.add(part)
    verdict = class_is_trivial(total)
    return MilnorVerdict(verdict.trivial, total, verdict)


# -- obstruction pipeline ----------------------------------------------------


class ObstructionReport:
    __slots__ = ("status", "b", "detail")

    def __init__(self, status, b, detail):
        object.__setattr__(self, "status", status)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "detail", detail)

    def __setattr__(self, name, value):
        raise AttributeError("ObstructionReport is immutable")


def classify_obstruction(s: Scenario) -> ObstructionReport:
    """Case split on the deformation denominator b: outside the extended
    ideal locally (unobstructed branch), inside with a validated simple
    decomposition b = sum(d_i * f_i) + fnext (obstructed branch), or
    inside without one (unsupported)."""
    if s.deform_g is None:
        raise NotApplicableError("scenario carries no deformation fraction")
    b = s.deform_g.denominator
    origin = s.origin()
    extended = IdealBasis(s.f + (s.fnext,))
    inside = local_ideal_member(
        LocalFraction.from_polynomial(b, origin), extended, origin
    )
    if not inside:
        return ObstructionReport(
            UNOBSTRUCTED, b, f"b = {b} stays outside ({', '.join(str(g) for g in extended.generators)}) locally"
        )
    if s.b_decomp is None:
        return ObstructionReport(
            UNSUPPORTED, b, "b lies in the extended ideal but no decomposition was supplied"
        )
    residue = b - s.fnext
    for coeff, f in zip(s.b_decomp, s.f):
        residue = residue - coeff * f
    if not residue.is_zero():
        return ObstructionReport(
            UNSUPPORTED,
            b,
            f"supplied decomposition misses b by {residue}",
        )
    decomp = " + ".join(f"({d})*({f})" for d, f in zip(s.b_decomp, s.f))
    return ObstructionReport(OBSTRUCTED, b, f"b = {decomp} + ({s.fnext})")


class CheckRecord:
    __slots__ = ("name", "passed", "witness")

    def __init__(self, name, passed, witness):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "passed", bool(passed))
        object.__setattr__(self, "witness", witness)

    def __setattr__(self, name, value):
        raise AttributeError("CheckRecord is immutable")


class PipelineReport:
    __slots__ = ("branch", "detail", "checks")

    def __init__(self, branch, detail, checks):
        object.__setattr__(self, "branch", branch)
        object.__setattr__(self, "detail", detail)
        object.__setattr__(self, "checks", tuple(checks))

    def __setattr__(self, name, value):
        raise AttributeError("PipelineReport is immutable")

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def higher_corrections(s: Scenario, up_to: int):
    """Corrections for eps^2..eps^up_to in the unobstructed branch, read
    from the a list (slot i uses a_i) with zero fallback."""
    out = []
    for i in range(2, up_to + 1):
        if i - 1 < len(s.a):
            out.append(LocalFraction.from_polynomial(s.a[i - 1], s.target_locus))
        else:
            out.append(LocalFraction.zero(s.target_locus))
    return out


def verify_unobstructed(s: Scenario) -> PipelineReport:
    """Unobstructed branch: the first-order deformation is a cycle and
    its lifts with arbitrary higher corrections stay cycles, restriction
    chain included."""
    report = classify_obstruction(s)
    if report.status != UNOBSTRUCTED:
        raise NotApplicableError(f"scenario is {report.status}, not unobstructed")
    checks = []
    first = target_cycle(s)
    v1 = is_milnor_cycle(first, s)
    checks.append(
        CheckRecord("first-order-deformation-is-a-cycle", v1.is_cycle, v1.describe())
    )
    lifts = {1: first}
    ok_lifts = True
    notes = []
    for j in range(2, max(s.order, 1) + 1):
        lifted = lift_target_cycle(s, higher_corrections(s, j))
        lifts[j] = lifted
        vj = is_milnor_cycle(lifted, s)
        ok_lifts = ok_lifts and vj.is_cycle
        notes.append(f"order {j}: {vj.describe()}")
    checks.append(
        CheckRecord(
            "higher-lifts-are-cycles",
            ok_lifts,
            "; ".join(notes) if notes else "order 1 only",
        )
    )
    ok_chain = True
    chain_notes = []
    for j in sorted(lifts):
        lower = lifts[j - 1] if j - 1 in lifts else undeformed_target(s)
        match = restrict(lifts[j], j - 1) == lower
        ok_chain = ok_chain and match
        chain_notes.append(f"restrict {j}->{j - 1}: {'ok' if match else 'MISMATCH'}")
    checks.append(CheckRecord("restriction-chain", ok_chain, "; ".join(chain_notes)))
    return PipelineReport(UNOBSTRUCTED, report.detail, checks)


def eliminate_obstruction(s: Scenario) -> PipelineReport:
    """Obstructed branch: build the auxiliary class and the combined
    family, and verify the three elimination statements.

    1. the target-supported part of (combined - auxiliary) presents the
       first-order deformation (equal multiplicities, equal classes);
    2. the difference is a cycle whose order-0 restriction is the
       undeformed target;
    3. the difference lifts order by order up to the scenario order.
    """
    report = classify_obstruction(s)
    if report.status != OBSTRUCTED:
        raise NotApplicableError(f"scenario is {report.status}, not obstructed")
    g = s.deform_g
    if not s.a or s.a[0] != g.numerator:
        raise ScenarioInvariantError(
            "first entry of a must equal the numerator of the deformation fraction"
        )
    checks = []
    aux = auxiliary_cycle(s)
    combined1 = combined_cycle(s, 1)
    difference1 = combined1.sub(aux.at_order(1))

    # item 1: restriction to the target locus
    target_terms = [t for t in difference1.terms if t[1].locus == s.target_locus]
    first_order = target_cycle(s)
    witness_parts = []
    ok1 = len(target_terms) == 1 and len(first_order.terms) == 1
    if ok1:
        coeff, gen = target_terms[0]
        tcoeff, tgen = first_order.terms[0]
        mult_ok = (
            coeff * multiplicity(gen) == tcoeff * multiplicity(tgen)
            and gen.base == tgen.base
        )
        witness_parts.append(f"multiplicities: {coeff} = {tcoeff}")
        diff = class_difference(ch_representative(gen), ch_representative(tgen))
        class_verdict = class_is_trivial(diff)
        witness_parts.append(f"class difference: {class_verdict.describe()}")
        ok1 = mult_ok and class_verdict.trivial
    else:
        witness_parts.append("target-supported part is not a single generator")
    checks.append(
        CheckRecord(
            "target-part-presents-first-order-deformation",
            ok1,
            "; ".join(witness_parts),
        )
    )

    # item 2: the difference is a cycle lifting the undeformed target
    v2 = is_milnor_cycle(difference1, s)
    base_match = restrict(difference1, 0) == undeformed_target(s)
    checks.append(
        CheckRecord(
            "difference-is-a-cycle-lifting-the-target",
            v2.is_cycle and base_match,
            f"{v2.describe()}; restrict 1->0 {'matches' if base_match else 'MISMATCH'}",
        )
    )

    # item 3: successive lifts
    ok3 = True
    notes = []
    previous = difference1
    for j in range(2, s.order + 1):
        difference_j = combined_cycle(s, j).sub(aux.at_order(j))
        vj = is_milnor_cycle(difference_j, s)
        chain = restrict(difference_j, j - 1) == previous
        ok3 = ok3 and vj.is_cycle and chain
        notes.append(
            f"order {j}: {'cycle' if vj.is_cycle else 'NOT a cycle'},"
            f" restrict {j}->{j - 1} {'matches' if chain else 'MISMATCH'}"
        )
        previous = difference_j
    checks.append(
        CheckRecord(
            "successive-lifts",
            ok3,
            "; ".join(notes) if notes else "order 1 only",
        )
    )
    return PipelineReport(OBSTRUCTED, report.detail, checks)


def lift_report(s: Scenario, to_order: int) -> PipelineReport:
    """Successive-lifting checks for the combined family up to the given
    order: order 0 splits into target + auxiliary, every order is a
    cycle, and restriction steps down the ladder."""
    checks = []
    base = combined_cycle(s, 0)
    split_ok = base == undeformed_target(s).add(auxiliary_cycle(s))
    checks.append(
        CheckRecord(
            "order-0-splits-into-target-plus-auxiliary",
            split_ok,
            str(base),
        )
    )
    previous = base
    ok_cycles = True
    ok_chain = True
    cycle_notes = []
    chain_notes = []
    for j in range(1, to_order + 1):
        family = combined_cycle(s, j)
        vj = is_milnor_cycle(family, s)
        ok_cycles = ok_cycles and vj.is_cycle
        cycle_notes.append(f"order {j}: {'cycle' if vj.is_cycle else 'NOT a cycle'}")
        match = restrict(family, j - 1) == previous
        ok_chain = ok_chain and match
        chain_notes.append(f"restrict {j}->{j - 1}: {'ok' if match else 'MISMATCH'}")
        previous = family
    checks.append(CheckRecord("family-orders-are-cycles", ok_cycles, "; ".join(cycle_notes)))
    checks.append(CheckRecord("family-restriction-chain", ok_chain, "; ".join(chain_notes)))
    return PipelineReport("lift", f"combined family up to order {to_order}", checks)
