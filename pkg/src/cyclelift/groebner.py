"""Groebner bases and ideal-membership decision procedures.

Buchberger's algorithm under graded reverse lexicographic order; bases
are reduced (minimal, interreduced, monic) and therefore canonical, so
every answer is independent of generator order.  Ideal quotients use the
standard single-tag elimination trick; the tag order is internal only
and every basis a caller sees is grevlex.
"""

from fractions import Fraction
from itertools import combinations

from .errors import NotRegularError
from .poly import Exponent, Polynomial, grevlex_key


def _expo_divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _expo_sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def _expo_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def leading_term(p: Polynomial, key=grevlex_key):
    """(exponent, coefficient) of the leading monomial; p must be nonzero."""
    expo = max(p.terms, key=key)
    return expo, p.terms[expo]


def _monomial_times(p: Polynomial, expo: Exponent, coeff: Fraction) -> Polynomial:
    return Polynomial(
        p.variables,
        {tuple(a + b for a, b in zip(e, expo)): c * coeff for e, c in p.terms.items()},
    )


def reduce_poly(p: Polynomial, basis, key=grevlex_key) -> Polynomial:
    """Full normal form of p modulo the list `basis` (top reduction,
    divisors tried in list order — deterministic)."""
    remainder = Polynomial.zero(p.variables)
    work = p
    leads = [leading_term(g, key) for g in basis]
    while not work.is_zero():
        expo, coeff = leading_term(work, key)
        for g, (ge, gc) in zip(basis, leads):
            if _expo_divides(ge, expo):
                work = work - _monomial_times(g, _expo_sub(expo, ge), coeff / gc)
                break
        else:
            mono = Polynomial(p.variables, {expo: coeff})
            remainder = remainder + mono
            work = work - mono
    return remainder


def _s_polynomial(f: Polynomial, g: Polynomial, key=grevlex_key) -> Polynomial:
    fe, fc = leading_term(f, key)
    ge, gc = leading_term(g, key)
    lcm = _expo_lcm(fe, ge)
    return _monomial_times(f, _expo_sub(lcm, fe), Fraction(1) / fc) - _monomial_times(
        g, _expo_sub(lcm, ge), Fraction(1) / gc
    )


def buchberger(generators, key=grevlex_key):
    """Reduced Groebner basis of the ideal spanned by `generators`.

    Normal selection strategy (smallest lcm first) with the coprime-
    leading-term criterion; output is minimal, interreduced, monic and
    sorted by leading monomial, hence canonical for the ideal.
    """
    basis = [g for g in generators if not g.is_zero()]
    if not basis:
        return []
    variables = basis[0].variables
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        # normal strategy: smallest lcm of leading monomials, ties by index
        def pair_key(pair):
            i, j = pair
            le = _expo_lcm(leading_term(basis[i], key)[0], leading_term(basis[j], key)[0])
            return (key(le), i, j)

        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        fe = leading_term(basis[i], key)[0]
        ge = leading_term(basis[j], key)[0]
        if _expo_lcm(fe, ge) == tuple(a + b for a, b in zip(fe, ge)):
            continue  # coprime leading terms: s-polynomial reduces to zero
        r = reduce_poly(_s_polynomial(basis[i], basis[j], key), basis, key)
        if not r.is_zero():
            basis.append(r)
            pairs.update((k, len(basis) - 1) for k in range(len(basis) - 1))

    # minimalize: drop generators whose lead divides by another lead
    leads = [leading_term(g, key)[0] for g in basis]
    keep = []
    for idx, le in enumerate(leads):
        if any(
            _expo_divides(leads[other], le)
            for other in range(len(basis))
            if other != idx and (other in keep or other > idx)
        ):
            continue
        keep.append(idx)
    minimal = [basis[idx] for idx in keep]
    # interreduce and normalize to monic
    reduced = []
    for idx, g in enumerate(minimal):
        rest = minimal[:idx] + minimal[idx + 1 :]
        nf = reduce_poly(g, rest, key) if rest else g
        if nf.is_zero():
            continue
        _, lc = leading_term(nf, key)
        reduced.append(nf * (Fraction(1) / lc))
    reduced.sort(key=lambda g: key(leading_term(g, key)[0]))
    return reduced


class IdealBasis:
    """Generators of an ideal with a lazily computed reduced Groebner basis.

    Immutable from the outside; the cache is filled at most once and the
    computation is pure, so concurrent fills are harmless.
    """

    __slots__ = ("generators", "_groebner")

    def __init__(self, generators, groebner=None):
        gens = tuple(generators)
        if not gens:
            raise ValueError("ideal needs at least one generator")
        if any(g.is_zero() for g in gens):
            gens = tuple(g for g in gens if not g.is_zero())
            if not gens:
                raise ValueError("all generators are zero")
        variables = gens[0].variables
        for g in gens:
            if g.variables != variables:
                raise ValueError("generators over different variables")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_groebner", tuple(groebner) if groebner else None)

    def __setattr__(self, name, value):
        raise AttributeError("IdealBasis is immutable")

    @property
    def variables(self):
        return self.generators[0].variables

    @property
    def groebner(self):
        basis = self._groebner
        if basis is None:
            basis = tuple(buchberger(self.generators))
            object.__setattr__(self, "_groebner", basis)
        return basis

    def __eq__(self, other):
        if not isinstance(other, IdealBasis):
            return NotImplemented
        return self.generators == other.generators

    def __repr__(self):
        return f"IdealBasis({', '.join(str(g) for g in self.generators)})"


def groebner_basis(ideal: IdealBasis) -> IdealBasis:
    """Same ideal with the reduced Groebner basis computed and attached."""
    return IdealBasis(ideal.generators, groebner=ideal.groebner)


def ideal_member(u: Polynomial, ideal: IdealBasis) -> bool:
    """True iff u lies in the ideal over the polynomial ring."""
    if u.is_zero():
        return True
    if u.variables != ideal.variables:
        raise ValueError("polynomial and ideal over different variables")
    return reduce_poly(u, list(ideal.groebner)).is_zero()


def poly_divexact(numerator: Polynomial, divisor: Polynomial) -> Polynomial:
    """Exact quotient numerator/divisor; raises if the division leaves a
    remainder (callers only use this when divisibility is guaranteed)."""
    if divisor.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    quotient = Polynomial.zero(numerator.variables)
    work = numerator
    de, dc = leading_term(divisor)
    while not work.is_zero():
        we, wc = leading_term(work)
        if not _expo_divides(de, we):
            raise ValueError("not exactly divisible")
        qe, qc = _expo_sub(we, de), wc / dc
        quotient = quotient + Polynomial(numerator.variables, {qe: qc})
        work = work - _monomial_times(divisor, qe, qc)
    return quotient


def _elim_key(expo: Exponent):
    # block order: tag variable (slot 0) dominates, grevlex on the rest
    return (expo[0],) + grevlex_key(expo[1:])


def _with_tag(p: Polynomial, tag_degree: int, variables) -> Polynomial:
    return Polynomial(
        variables, {(tag_degree,) + e: c for e, c in p.terms.items()}
    )


def ideal_quotient(ideal: IdealBasis, u: Polynomial) -> IdealBasis:
    """The ideal quotient (ideal : u).

    Computed as (1/u)(ideal ∩ (u)); the intersection comes from
    eliminating a tag variable t out of t*ideal + (1-t)*(u).
    """
    if u.is_zero():
        return IdealBasis([Polynomial.constant(ideal.variables, 1)])
    if u.is_constant():
        return IdealBasis(ideal.generators)
    variables = ideal.variables
    ext_vars = ("~t",) + variables
    tagged = [_with_tag(g, 1, ext_vars) for g in ideal.generators]
    u_ext = _with_tag(u, 0, ext_vars)
    one_minus_t = Polynomial(
        ext_vars, {(0,) * len(ext_vars): Fraction(1), (1,) + (0,) * len(variables): Fraction(-1)}
    )
    tagged.append(one_minus_t * u_ext)
    eliminated = [
        g for g in buchberger(tagged, key=_elim_key)
        if all(e[0] == 0 for e in g.terms)
    ]
    quotient_gens = [
        poly_divexact(Polynomial(variables, {e[1:]: c for e, c in g.terms.items()}), u)
        for g in eliminated
    ]
    if not quotient_gens:
        raise ValueError("empty intersection basis for a nonzero ideal")
    return IdealBasis(quotient_gens)


def monomial_dimension(lead_exponents, nvars: int) -> int:
    """Krull dimension of R/I for a monomial ideal I given by lead exponents.

    dim = size of the largest variable subset S such that no generator's
    support is contained in S; -1 when I is the unit ideal.
    """
    supports = [frozenset(i for i, e in enumerate(expo) if e > 0) for expo in lead_exponents]
    if any(not s for s in supports):
        return -1
    best = -1
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            sset = set(subset)
            if all(not supp <= sset for supp in supports):
                return size
    return best


def ideal_dimension(ideal: IdealBasis) -> int:
    """Krull dimension of the quotient by the ideal."""
    leads = [leading_term(g)[0] for g in ideal.groebner]
    return monomial_dimension(leads, len(ideal.variables))


def is_regular_sequence(seq) -> bool:
    """True iff the sequence cuts out codimension len(seq).

    Every entry must vanish at the origin and the length must not exceed
    the number of variables; violations raise rather than return False.
    """
    seq = list(seq)
    if not seq:
        raise NotRegularError("empty sequence")
    variables = seq[0].variables
    for f in seq:
        if f.variables != variables:
            raise NotRegularError("entries over different variables")
        if not f.vanishes_at_origin():
            raise NotRegularError(f"entry does not vanish at the origin: {f}")
    p = len(seq)
    n = len(variables)
    if p > n:
        raise NotRegularError(f"sequence longer ({p}) than variable count ({n})")
    nonzero = [f for f in seq if not f.is_zero()]
    if len(nonzero) < p:
        return False
    dim = ideal_dimension(IdealBasis(nonzero))
    return dim == n - p
