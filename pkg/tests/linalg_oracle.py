"""Dense linear-algebra ideal membership, independent of the Groebner path.

Membership u in (f_1, ..., f_m) is decided by solving the exact linear
system u = sum(q_i * f_i) with deg(q_i) <= D for increasing D.  Complete
only for memberships whose cofactors have degree <= the bound, which the
test instances arrange by construction.
"""

from fractions import Fraction


def monomials_up_to(nvars: int, degree: int):
    def rec(slots, remaining):
        if slots == 0:
            yield ()
            return
        for d in range(remaining + 1):
            for rest in rec(slots - 1, remaining - d):
                yield (d,) + rest

    return sorted(rec(nvars, degree))


def _consistent(matrix, rhs):
    """Gaussian elimination over Fraction; True iff some solution exists."""
    if not matrix:
        return all(b == 0 for b in rhs)
    rows = len(matrix)
    cols = len(matrix[0])
    m = [row[:] + [b] for row, b in zip(matrix, rhs)]
    pivot_row = 0
    for col in range(cols):
        sel = None
        for r in range(pivot_row, rows):
            if m[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        m[pivot_row], m[sel] = m[sel], m[pivot_row]
        pivot = m[pivot_row][col]
        for r in range(rows):
            if r != pivot_row and m[r][col] != 0:
                factor = m[r][col] / pivot
                for c in range(col, cols + 1):
                    m[r][c] -= factor * m[pivot_row][c]
        pivot_row += 1
        if pivot_row == rows:
            break
    return all(
        m[r][cols] == 0
        for r in range(rows)
        if all(m[r][c] == 0 for c in range(cols))
    )


def _solvable_at_degree(u, generators, degree):
    nvars = len(u.variables)
    monos = monomials_up_to(nvars, degree)
    columns = []
    for f in generators:
        for mono in monos:
            shifted = {}
            for expo, coeff in f.terms.items():
                shifted[tuple(a + b for a, b in zip(expo, mono))] = coeff
            columns.append(shifted)
    row_keys = set(u.terms)
    for col in columns:
        row_keys.update(col)
    row_keys = sorted(row_keys)
    row_index = {key: i for i, key in enumerate(row_keys)}
    matrix = [[Fraction(0)] * len(columns) for _ in row_keys]
    for j, col in enumerate(columns):
        for expo, coeff in col.items():
            matrix[row_index[expo]][j] = coeff
    rhs = [u.terms.get(key, Fraction(0)) for key in row_keys]
    return _consistent(matrix, rhs)


def membership_by_linear_algebra(u, generators, max_degree=8) -> bool:
    if u.is_zero():
        return True
    for degree in range(max_degree + 1):
        if _solvable_at_degree(u, generators, degree):
            return True
    return False
