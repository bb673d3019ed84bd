"""Exact linear algebra over rationals and over Poly entries.

Symbolic determinants use Laplace expansion along the first column with
memoization over (row offset, available column set); the matrices here are at
most 7x7 so this is comfortably fast and avoids any division of polynomials.
Scalar routines work over Fraction (ints promoted) with plain Gaussian
elimination.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly


def det_poly(mat) -> Poly:
    """Determinant of a square matrix of Poly (or scalar) entries."""
    n = len(mat)
    rows = [[e if isinstance(e, Poly) else Poly.const(e) for e in row] for row in mat]
    memo = {}

    def minor(r: int, cols: int) -> Poly:
        if r == n:
            return Poly.const(1)
        key = (r, cols)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = Poly.zero()
        sign = 1
        c = cols
        while c:
            low = c & -c
            j = low.bit_length() - 1
            entry = rows[r][j]
            if not entry.is_zero():
                sub = minor(r + 1, cols & ~low)
                total = total + entry * sub.scale(sign)
            sign = -sign
            c &= c - 1
        memo[key] = total
        return total

    return minor(0, (1 << n) - 1)


def charpoly_coeffs(mat, lam_var) -> Poly:
    """det(lam*I - mat) as a Poly in lam_var and the entries' variables."""
    n = len(mat)
    lam = Poly.var(lam_var)
    shifted = []
    for i in range(n):
        row = []
        for j in range(n):
            e = mat[i][j]
            e = e if isinstance(e, Poly) else Poly.const(e)
            row.append(lam - e if i == j else -e)
        shifted.append(row)
    return det_poly(shifted)


def _as_fraction_matrix(mat):
    return [[x if isinstance(x, (int, Fraction)) else Fraction(x) for x in row] for row in mat]


def det_fraction(mat):
    """Exact determinant of a rational scalar matrix."""
    a = _as_fraction_matrix(mat)
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = Fraction(1, 1) / Fraction(a[col][col])
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def solve_fraction(mat, rhs):
    """Solve A x = b exactly; rhs may be a vector or a matrix of columns."""
    a = _as_fraction_matrix(mat)
    n = len(a)
    vector_rhs = not isinstance(rhs[0], (list, tuple))
    b = [[x] for x in rhs] if vector_rhs else [list(row) for row in rhs]
    m = len(b[0])
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix in exact solve")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
        inv = Fraction(1, 1) / Fraction(a[col][col])
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] * inv
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
                for c in range(m):
                    b[r][c] -= f * b[col][c]
    out = [[b[r][c] / a[r][r] for c in range(m)] for r in range(n)]
    if vector_rhs:
        return [row[0] for row in out]
    return out


def invert_fraction(mat):
    n = len(mat)
    eye = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return solve_fraction(mat, eye)


def matmul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return [[sum(a[i][t] * b[t][j] for t in range(m)) for j in range(p)] for i in range(n)]


def submatrix_det(mat, rows, cols, exact: bool):
    """Minor with the given 1-based row and column index lists."""
    sub = [[mat[r - 1][c - 1] for c in cols] for r in rows]
    if exact:
        return det_fraction(sub)
    import numpy as np

    if not sub:
        return 1.0
    return float(np.linalg.det(np.array(sub, dtype=float)))
