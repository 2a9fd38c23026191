"""Exact integer and rational linear algebra.

Everything here is small and dense: Python ints (arbitrary precision) and
fractions.Fraction, no floating point anywhere. `Rational` is an alias for
Fraction; all degree and dimension arithmetic in the package flows through
it.
"""

from __future__ import annotations

from fractions import Fraction as Rational
from math import gcd

from .errors import NonCoprimeModuli, SingularMatrix

IntMatrix = list[list[int]]
RatVector = list[Rational]
RatMatrix = list[list[Rational]]


def identity_matrix(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    """Exact matrix product (ints or Fractions)."""
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def mat_vec(a, v):
    return [sum(row[k] * v[k] for k in range(len(v))) for row in a]


def determinant(m) -> Rational:
    """Determinant by exact Gaussian elimination."""
    n = len(m)
    a = [[Rational(x) for x in row] for row in m]
    det = Rational(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if a[r][c] != 0), None)
        if pivot is None:
            return Rational(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            if a[r][c] != 0:
                f = a[r][c] * inv
                # zero entries stay zero; skip their arithmetic
                a[r] = [
                    x - f * y if y else x for x, y in zip(a[r], a[c])
                ]
    return det


def solve_exact(m, rhs) -> RatVector:
    """Solve m x = rhs exactly over the rationals.

    Pivoting is first-nonzero; entries stay exact so no stability heuristics
    are needed. Raises SingularMatrix when det(m) = 0.
    """
    n = len(m)
    if any(len(row) != n for row in m) or len(rhs) != n:
        raise ValueError("solve_exact needs a square system")
    a = [[Rational(x) for x in row] + [Rational(rhs[i])] for i, row in enumerate(m)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if a[r][c] != 0), None)
        if pivot is None:
            raise SingularMatrix(f"zero pivot in column {c}")
        a[c], a[pivot] = a[pivot], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv if x else x for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [
                    x - f * y if y else x for x, y in zip(a[r], a[c])
                ]
    return [a[r][n] for r in range(n)]


def smith_normal_form(m: IntMatrix) -> tuple[list[int], IntMatrix, IntMatrix]:
    """Smith normal form with transforms: U m V = diag(d), d_1 | d_2 | ...

    Returns (diagonal, U, V) where U, V are unimodular and the diagonal
    entries are non-negative and satisfy the divisibility chain. Pivots are
    chosen with minimal absolute value to bound entry growth.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [[int(x) for x in row] for row in m]
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    t = 0
    while t < min(rows, cols):
        # minimal |entry| pivot in the trailing block
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (
                    pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])
                ):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        while True:
            # clear column t below the pivot
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t] != 0:  # remainder is a smaller pivot
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # divisibility fix-up: pull a non-divisible entry into row t
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        t += 1

    for i in range(min(rows, cols)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]

    diag = [a[i][i] for i in range(min(rows, cols))]
    return diag, u, v


def crt_solve(residues) -> int:
    """Chinese remainder: unique x mod prod(m_i) with x = r_i (mod m_i)."""
    x, mod = 0, 1
    for r, m in residues:
        if m <= 0:
            raise NonCoprimeModuli(f"modulus {m} is not positive")
        g = gcd(mod, m)
        if g != 1:
            raise NonCoprimeModuli(f"moduli share the factor {g}")
        # combine: x' = x (mod mod), x' = r (mod m)
        inv = pow(mod, -1, m)
        x = x + mod * ((r - x) * inv % m)
        mod *= m
    return x % mod
