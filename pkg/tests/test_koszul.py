from fractions import Fraction
from itertools import permutations

import pytest

from cyclelift import (
    DeformedKoszul,
    LocalFraction,
    NotRegularError,
    PrimePoint,
    UnsupportedBaseError,
    build_koszul,
    multiplicity,
    permutation_chain_map,
    permutation_sign,
    verify_complex,
)
from cyclelift.koszul import KoszulComplex
from cyclelift.poly import Polynomial, parse_polynomial

V2 = ("x", "y")
V3 = ("x", "y", "z")
V4 = ("x", "y", "z", "w")


def P(text, variables=V2):
    return parse_polynomial(text, variables)


def test_rank_two_koszul_identity():
    locus = PrimePoint.from_sequence([P("x"), P("y")])
    complex_ = build_koszul(DeformedKoszul([P("x"), P("y")], (), locus))
    d1 = [[str(e) for e in row] for row in complex_.differentials[0]]
    d2 = [[str(e) for e in row] for row in complex_.differentials[1]]
    assert d1 == [["-x", "-y"]]  # d1 row is the sequence up to the global sign
    assert d2 == [["y"], ["-x"]]
    assert verify_complex(complex_)


def test_deformed_single_entry():
    px = PrimePoint.from_sequence([P("x")])
    g = LocalFraction(P("1"), P("y"), px)
    complex_ = build_koszul(DeformedKoszul([P("x")], (g,), px))
    entry = complex_.differentials[0][0][0]
    assert str(entry) == "-x + eps*-1/(y)"
    assert verify_complex(complex_)


def test_rank_three_koszul():
    locus = PrimePoint.origin(V3)
    complex_ = build_koszul(
        DeformedKoszul([P("x", V3), P("y", V3), P("z", V3)], (), locus)
    )
    assert verify_complex(complex_)
    d3 = [[str(e) for e in row] for row in complex_.differentials[2]]
    assert d3 == [["z"], ["-y"], ["x"]]


def test_flipped_sign_detected():
    locus = PrimePoint.from_sequence([P("x"), P("y")])
    complex_ = build_koszul(DeformedKoszul([P("x"), P("y")], (), locus))
    d2 = [[-complex_.differentials[1][0][0]], [complex_.differentials[1][1][0]]]
    broken = KoszulComplex(
        complex_.length,
        complex_.ring_locus,
        complex_.order,
        complex_.entries,
        [complex_.differentials[0], d2],
    )
    assert not verify_complex(broken)


def test_non_coordinate_base_verifies():
    locus = PrimePoint.origin(V3)
    complex_ = build_koszul(DeformedKoszul([P("x*z", V3), P("y", V3)], (), locus))
    assert verify_complex(complex_)


def test_non_regular_base_rejected():
    locus = PrimePoint.origin(V2)
    with pytest.raises(NotRegularError):
        DeformedKoszul([P("x"), P("x*y")], (), locus)


def test_truncation_commutes_with_build():
    px = PrimePoint.from_sequence([P("x"), P("y", V3)][:1])
    px = PrimePoint.from_sequence([P("x", V3)])
    g1 = LocalFraction(P("1", V3), P("y", V3), px)
    g2 = LocalFraction(P("z", V3), P("1", V3), px)
    deformed = DeformedKoszul([P("x", V3)], (g1, g2), px)
    built_then_cut = build_koszul(deformed).truncate(1)
    cut_then_built = build_koszul(deformed.truncate(1))
    assert built_then_cut == cut_then_built


def test_swap_two():
    pm = permutation_chain_map([P("x"), P("y")], (1, 0))
    assert pm.sign == Fraction(-1)
    assert [[c.constant_term() for c in row] for row in pm.stage_matrices[1]] == [
        [0, 1],
        [1, 0],
    ]
    assert pm.stage_matrices[2][0][0].constant_term() == Fraction(-1)


def test_identity_permutation():
    pm = permutation_chain_map([P(v, V3) for v in V3], (0, 1, 2))
    assert pm.sign == Fraction(1)
    for k, stage in enumerate(pm.stage_matrices):
        size = len(stage)
        for i in range(size):
            for j in range(size):
                expected = Fraction(1 if i == j else 0)
                assert stage[i][j].constant_term() == expected


def test_first_last_swap_size_four():
    seq = [P(v, V4) for v in V4]
    pm = permutation_chain_map(seq, (3, 1, 2, 0))
    assert pm.sign == Fraction(-1)
    top = pm.stage_matrices[1]
    corners = [[top[i][j].constant_term() for j in range(4)] for i in range(4)]
    assert corners[0][3] == 1 and corners[3][0] == 1
    assert corners[1][1] == 1 and corners[2][2] == 1


def test_first_last_swap_sizes_two_to_five():
    names = ("x", "y", "z", "w", "v")
    for size in range(2, 6):
        variables = names[:size]
        seq = [parse_polynomial(n, variables) for n in variables]
        perm = (size - 1,) + tuple(range(1, size - 1)) + (0,)
        pm = permutation_chain_map(seq, perm)
        assert pm.sign == Fraction(-1)


def test_sign_multiplicative_s3_s4():
    for size in (3, 4):
        for left in permutations(range(size)):
            for right in permutations(range(size)):
                composed = tuple(left[right[i]] for i in range(size))
                assert permutation_sign(composed) == permutation_sign(
                    left
                ) * permutation_sign(right)


def test_multiplicity_contract():
    px = PrimePoint.from_sequence([P("x")])
    assert multiplicity(DeformedKoszul([P("x")], (), px)) == Fraction(1)
    pxy = PrimePoint.from_sequence([P("x", V3), P("y", V3)])
    assert multiplicity(DeformedKoszul([P("x", V3), P("y", V3)], (), pxy)) == Fraction(1)
    with pytest.raises(UnsupportedBaseError):
        multiplicity(DeformedKoszul([P("x^2")], (), px))
