"""Koszul complexes of deformed regular sequences.

Differentials follow the alternating contraction formula: the wedge
e_{i_1} ^ ... ^ e_{i_k} maps to the signed sum over positions j of
(-1)^j * entry_{i_j} * (wedge with slot j omitted), signs starting at
j = 1.  Matrices are indexed by sorted subsets in lexicographic order.
"""

from fractions import Fraction
from itertools import combinations

from .errors import NotRegularError, UnsupportedBaseError
from .groebner import IdealBasis, is_regular_sequence
from .localring import EpsElement, LocalFraction, PrimePoint
from .poly import Polynomial


def sorted_subsets(p: int, k: int):
    """All k-subsets of range(p) as sorted tuples, lexicographic order."""
    return list(combinations(range(p), k))


def permutation_sign(perm) -> int:
    """Signature of a permutation given as a tuple of images."""
    perm = tuple(perm)
    if sorted(perm) != list(range(len(perm))):
        raise ValueError(f"not a permutation of 0..{len(perm) - 1}: {perm}")
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def _matmul(a, b, zero):
    """Product of list-of-rows matrices over any ring with + and *."""
    if not a or not b:
        return []
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = zero
            for k in range(inner):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def koszul_differentials(entries, zero):
    """Differential matrices d_1..d_p for the given sequence entries.

    d_k has one row per sorted (k-1)-subset and one column per sorted
    k-subset; entries must support negation, addition and multiplication
    and `zero` must be their additive identity.
    """
    p = len(entries)
    matrices = []
    for k in range(1, p + 1):
        rows = sorted_subsets(p, k - 1)
        cols = sorted_subsets(p, k)
        row_index = {s: i for i, s in enumerate(rows)}
        matrix = [[zero for _ in cols] for _ in rows]
        for c, subset in enumerate(cols):
            for j, element in enumerate(subset, start=1):
                omitted = subset[: j - 1] + subset[j:]
                value = entries[element]
                if j % 2 == 1:
                    value = -value
                matrix[row_index[omitted]][c] = value
        matrices.append(matrix)
    return matrices


class DeformedKoszul:
    """A regular sequence with an eps-deformation of its first entry.

    `deformation[i]` is the fraction carried by eps^(i+1); the order of
    the ambient truncated ring equals the deformation length.
    """

    __slots__ = ("base", "deformation", "locus", "order")

    def __init__(self, base, deformation, locus: PrimePoint):
        base = tuple(base)
        deformation = tuple(deformation)
        if not is_regular_sequence(base):
            raise NotRegularError(
                "base is not a regular sequence: " + ", ".join(str(f) for f in base)
            )
        for f in base:
            if not locus.contains(f):
                raise NotRegularError(f"base entry {f} does not lie in the locus {locus}")
        for h in deformation:
            if h.locus != locus:
                raise ValueError("deformation fraction at a different locus")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "deformation", deformation)
        object.__setattr__(self, "locus", locus)
        object.__setattr__(self, "order", len(deformation))

    def __setattr__(self, name, value):
        raise AttributeError("DeformedKoszul is immutable")

    @property
    def length(self) -> int:
        return len(self.base)

    def is_eps_free(self) -> bool:
        return all(h.is_zero() for h in self.deformation)

    def truncate(self, new_order: int) -> "DeformedKoszul":
        if new_order > self.order:
            raise ValueError("cannot truncate upward")
        return DeformedKoszul(self.base, self.deformation[:new_order], self.locus)

    def pad(self, new_order: int) -> "DeformedKoszul":
        """Same generator viewed at a higher truncation order (zero slots)."""
        if new_order < self.order:
            raise ValueError("cannot pad downward")
        zero = LocalFraction.zero(self.locus)
        extra = (zero,) * (new_order - self.order)
        return DeformedKoszul(self.base, self.deformation + extra, self.locus)

    def entry_series(self):
        """The sequence entries as eps-series (first entry deformed)."""
        first = EpsElement(
            self.order,
            (LocalFraction.from_polynomial(self.base[0], self.locus),) + self.deformation,
        )
        rest = [
            EpsElement.from_polynomial(f, self.order, self.locus) for f in self.base[1:]
        ]
        return [first] + rest

    def __eq__(self, other):
        if not isinstance(other, DeformedKoszul):
            return NotImplemented
        return (
            self.base == other.base
            and self.deformation == other.deformation
            and self.locus == other.locus
        )

    def sort_key(self):
        return (
            str(self.locus),
            tuple(str(f) for f in self.base),
            tuple(str(h) for h in self.deformation),
        )

    def __str__(self):
        entries = ", ".join(str(e) for e in self.entry_series())
        return f"Koszul({entries}) at {self.locus}"

    def __repr__(self):
        return f"DeformedKoszul({self})"


class KoszulComplex:
    """Explicit Koszul complex: entries and differential matrices over
    eps-series, with d(k-1) . d(k) = 0 verified at construction."""

    __slots__ = ("length", "ring_locus", "order", "entries", "differentials")

    def __init__(self, length, ring_locus, order, entries, differentials):
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "ring_locus", ring_locus)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "entries", tuple(entries))
        object.__setattr__(
            self, "differentials", tuple(tuple(tuple(row) for row in m) for m in differentials)
        )

    def __setattr__(self, name, value):
        raise AttributeError("KoszulComplex is immutable")

    def truncate(self, new_order: int) -> "KoszulComplex":
        return KoszulComplex(
            self.length,
            self.ring_locus,
            new_order,
            [e.truncate(new_order) for e in self.entries],
            [
                [[entry.truncate(new_order) for entry in row] for row in matrix]
                for matrix in self.differentials
            ],
        )

    def __eq__(self, other):
        if not isinstance(other, KoszulComplex):
            return NotImplemented
        return (
            self.length == other.length
            and self.ring_locus == other.ring_locus
            and self.order == other.order
            and self.entries == other.entries
            and self.differentials == other.differentials
        )


def build_koszul(d: DeformedKoszul) -> KoszulComplex:
    """Koszul complex of the deformed sequence; asserts d . d = 0."""
    entries = d.entry_series()
    zero = EpsElement.zero(d.order, d.locus)
    differentials = koszul_differentials(entries, zero)
    complex_ = KoszulComplex(d.length, d.locus, d.order, entries, differentials)
    assert verify_complex(complex_), "Koszul differentials fail d.d = 0"
    return complex_


def verify_complex(c: KoszulComplex) -> bool:
    """True iff all consecutive differential products vanish identically."""
    zero = EpsElement.zero(c.order, c.ring_locus)
    for k in range(1, len(c.differentials)):
        product = _matmul(
            [list(r) for r in c.differentials[k - 1]],
            [list(r) for r in c.differentials[k]],
            zero,
        )
        for row in product:
            for entry in row:
                if not entry.is_zero():
                    return False
    return True


class PermutationChainMap:
    """Chain map between the Koszul complexes of a sequence and of its
    permutation, given by wedge powers of the permutation matrix."""

    __slots__ = ("permutation", "stage_matrices", "sign")

    def __init__(self, permutation, stage_matrices, sign):
        object.__setattr__(self, "permutation", tuple(permutation))
        object.__setattr__(
            self, "stage_matrices", tuple(tuple(tuple(r) for r in m) for m in stage_matrices)
        )
        object.__setattr__(self, "sign", Fraction(sign))

    def __setattr__(self, name, value):
        raise AttributeError("PermutationChainMap is immutable")


def _wedge_power_matrix(sigma_inv, k, variables):
    """Matrix of the k-th wedge power of e_c -> e_{sigma_inv[c]}, entries
    as constant polynomials, subset bases in lexicographic order."""
    m = len(sigma_inv)
    cols = sorted_subsets(m, k)
    rows = sorted_subsets(m, k)
    row_index = {s: i for i, s in enumerate(rows)}
    zero = Polynomial.zero(variables)
    matrix = [[zero for _ in cols] for _ in rows]
    for c, subset in enumerate(cols):
        images = [sigma_inv[i] for i in subset]
        # parity of the sort permutation of the image list
        sign = 1
        for i in range(len(images)):
            for j in range(i + 1, len(images)):
                if images[i] > images[j]:
                    sign = -sign
        target = tuple(sorted(images))
        matrix[row_index[target]][c] = Polynomial.constant(variables, sign)
    return matrix


def permutation_chain_map(seq, perm) -> PermutationChainMap:
    """Chain map from Koszul(seq) to Koszul(permuted seq) where the
    permuted sequence is seq[perm[0]], seq[perm[1]], ...; the ladder is
    checked to commute at every stage and sign = signature(perm)."""
    seq = list(seq)
    perm = tuple(perm)
    m = len(seq)
    if len(perm) != m:
        raise ValueError("permutation length differs from sequence length")
    variables = seq[0].variables
    sigma_inv = [0] * m
    for i, image in enumerate(perm):
        sigma_inv[image] = i
    permuted = [seq[perm[i]] for i in range(m)]
    zero = Polynomial.zero(variables)
    source = koszul_differentials(seq, zero)
    target = koszul_differentials(permuted, zero)
    stages = [_wedge_power_matrix(sigma_inv, k, variables) for k in range(m + 1)]
    for k in range(1, m + 1):
        left = _matmul(target[k - 1], stages[k], zero)
        right = _matmul(stages[k - 1], source[k - 1], zero)
        assert left == right, f"chain ladder fails to commute at stage {k}"
    sign = permutation_sign(perm)
    det = stages[m][0][0].constant_term()
    assert det == sign, "wedge-top determinant disagrees with permutation sign"
    return PermutationChainMap(perm, stages, sign)


def multiplicity(d: DeformedKoszul) -> Fraction:
    """Length contribution of a generator whose base cuts out the locus
    prime exactly; any other base is refused rather than guessed."""
    base_ideal = IdealBasis(list(d.base))
    locus_ideal = d.locus.ideal()
    if tuple(base_ideal.groebner) != tuple(locus_ideal.groebner):
        raise UnsupportedBaseError(
            f"base ({', '.join(str(f) for f in d.base)}) does not generate the locus {d.locus}"
        )
    return Fraction(1)
