"""Small exact linear algebra over the integers and rationals.

All matrices are lists of row lists of Python ints (arbitrary precision);
rational intermediate values use fractions.Fraction.  Sizes here are tiny
(at most a couple dozen), so clarity beats asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import ValidationError


def identity(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(m, v):
    """m @ v with v a column vector; returns a tuple."""
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def det(matrix) -> int:
    """Integer determinant by fraction-free Bareiss elimination."""
    n = len(matrix)
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            pivot = next((r for r in range(i + 1, n) if m[r][i] != 0), None)
            if pivot is None:
                return 0
            m[i], m[pivot] = m[pivot], m[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = m[i][i]
    return sign * m[-1][-1]


def is_unimodular(matrix) -> bool:
    rows = len(matrix)
    return all(len(row) == rows for row in matrix) and abs(det(matrix)) == 1


def solve_fraction(matrix, rhs):
    """Solve matrix @ x = rhs exactly; returns a tuple of Fraction.

    Raises ValidationError on a singular matrix.
    """
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(rhs[i])]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValidationError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(aug[i][n] for i in range(n))


def invert_fraction(matrix):
    """Exact inverse as a matrix of Fraction; raises on singular input."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)]
           + [Fraction(1 if i == j else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValidationError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def invert_unimodular(matrix):
    """Integer inverse of a matrix with determinant +-1."""
    inv = invert_fraction(matrix)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValidationError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def gcd_vector(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def _xgcd(a: int, b: int):
    """Extended gcd: returns (g, s, t) with g = s*a + t*b and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def complete_to_basis(x):
    """Unimodular U with U @ x = e_n, for a primitive integer vector x.

    Built from 2x2 elementary blocks accumulating the gcd into the last
    coordinate, so U is a product of determinant +-1 operations.
    """
    v = list(x)
    n = len(v)
    if gcd_vector(v) != 1:
        raise ValidationError("vector is not primitive")
    u = identity(n)
    for i in range(n - 1):
        if v[i] == 0:
            continue
        a, b = v[-1], v[i]
        g, s, t = _xgcd(a, b)
        row_last, row_i = u[-1], u[i]
        u[-1] = [s * p + t * q for p, q in zip(row_last, row_i)]
        u[i] = [-(b // g) * p + (a // g) * q for p, q in zip(row_last, row_i)]
        v[-1], v[i] = g, 0
    if v[-1] < 0:
        u[-1] = [-p for p in u[-1]]
        v[-1] = -v[-1]
    return u
