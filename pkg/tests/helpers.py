"""Shared builders for randomized scenario suites (seeded, deterministic)."""

from fractions import Fraction

from cyclelift import LocalFraction, Polynomial, Scenario


def random_poly(rng, variables, degree=2, max_terms=3, force_constant=None):
    """Random polynomial with small integer coefficients.

    force_constant pins the constant term (0 makes it vanish at the
    origin, a nonzero value makes it a unit there)."""
    nvars = len(variables)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        expo = [0] * nvars
        for _ in range(rng.randint(0 if force_constant is None else 1, degree)):
            expo[rng.randrange(nvars)] += 1
        coeff = rng.choice([-2, -1, 1, 2, 3])
        key = tuple(expo)
        terms[key] = terms.get(key, 0) + coeff
    poly = Polynomial(variables, {e: Fraction(c) for e, c in terms.items() if c})
    if force_constant is not None:
        shift = force_constant - poly.constant_term()
        poly = poly + Polynomial.constant(variables, shift)
    return poly


def coordinate_scenario(rng, p, order, *, deform=None, a_list=None, b_decomp=None,
                        dress_fnext=False):
    """Scenario on p+1 coordinates: f = first p coordinates, fnext = the
    last one, optionally dressed with a random quadratic in the others."""
    names = ("x", "y", "z", "w")[: p + 1]
    f = [Polynomial.variable(names, v) for v in names[:p]]
    fnext = Polynomial.variable(names, names[p])
    if dress_fnext:
        bump = random_poly(rng, names, degree=2, max_terms=2, force_constant=0)
        fnext = fnext + bump * bump  # keep the linear part of fnext intact
    return Scenario(names, f, fnext, order, deform_g=deform, a=a_list or (),
                    b_decomp=b_decomp)


def obstructed_scenario(rng, p, order):
    """Scenario on the obstructed branch: the deformation denominator is
    sum(d_i f_i) + fnext with random d_i and a unit numerator."""
    names = ("x", "y", "z", "w")[: p + 1]
    f = [Polynomial.variable(names, v) for v in names[:p]]
    fnext = Polynomial.variable(names, names[p])
    decomp = [random_poly(rng, names, degree=2, max_terms=2) for _ in range(p)]
    b = fnext
    for d, fi in zip(decomp, f):
        b = b + d * fi
    numerator = random_poly(rng, names, degree=2, max_terms=2,
                            force_constant=rng.choice([1, 2, 3]))
    a_list = [numerator] + [
        random_poly(rng, names, degree=2, max_terms=2) for _ in range(max(order - 1, 0))
    ]
    return Scenario(names, f, fnext, order, deform_g=(numerator, b), a=a_list,
                    b_decomp=decomp)


def unit_b_scenario(rng, p, order):
    """Scenario on the unobstructed branch: unit denominator at the origin."""
    names = ("x", "y", "z", "w")[: p + 1]
    f = [Polynomial.variable(names, v) for v in names[:p]]
    fnext = Polynomial.variable(names, names[p])
    b = random_poly(rng, names, degree=2, max_terms=2,
                    force_constant=rng.choice([1, 2, 3]))
    numerator = random_poly(rng, names, degree=2, max_terms=2)
    a_list = [Polynomial.zero(names)] + [
        random_poly(rng, names, degree=2, max_terms=2) for _ in range(max(order - 1, 0))
    ]
    return Scenario(names, f, fnext, order, deform_g=(numerator, b), a=a_list)


def higher_fractions(rng, s, count):
    """Random corrections for eps^2.. as fractions regular at the target
    locus (polynomials, occasionally over a unit denominator)."""
    out = []
    for _ in range(count):
        numerator = random_poly(rng, s.variables, degree=2, max_terms=2)
        if rng.random() < 0.3:
            denominator = random_poly(rng, s.variables, degree=1, max_terms=2,
                                      force_constant=1)
        else:
            denominator = Polynomial.constant(s.variables, 1)
        out.append(LocalFraction(numerator, denominator, s.target_locus))
    return out
