"""Evaluation of Schubert classes at Toeplitz points and the inverse map.

A Toeplitz point x determines g = x * w_0 (the matrix of x with columns
reversed).  The generalized minor G^m_i(x) is the ratio of two minors of g:
rows {m-i+1} union {m+2..n} over columns {m+1..n}, divided by rows and
columns {m+1..n}.  These are the values of the special Schubert classes,
and every sigma_w evaluates through its E-symbol expansion.

The reverse direction: from the values of the special classes, assemble the
upper-triangular section u, and factor u * w_P back into Toeplitz form.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import det_poly, matmul, solve_fraction, submatrix_det
from .poly import Poly, evar, lamvar
from .qcoh import ring
from .toeplitz import ToeplitzPoint, deltas, stratum
from .weyl import ParabolicShape, compose, in_wp, longest_element, sort_into_wp


def g_matrix(x: ToeplitzPoint):
    """g = x * w_0: the Toeplitz matrix with its columns reversed."""
    mat = x.matrix()
    return [list(reversed(row)) for row in mat]


def minor_ratio(g, m: int, i: int, exact: bool):
    """G^m_i on a flag representative g (an invertible n x n matrix modulo
    right multiplication by lower-triangular matrices)."""
    n = len(g)
    if not (1 <= m <= n - 1):
        raise ValueError("need 1 <= m <= n-1")
    if i == 0:
        return 1 if exact else 1.0
    if i < 0 or i > m:
        return 0 if exact else 0.0
    tail = list(range(m + 1, n + 1))
    denom = submatrix_det(g, tail, tail, exact)
    if denom == 0 or (not exact and abs(denom) < 1e-300):
        raise ValueError("G^%d_%d undefined: Delta_%d vanishes" % (m, i, m))
    num = submatrix_det(g, sorted([m - i + 1] + list(range(m + 2, n + 1))), tail, exact)
    return num / denom


def g_function(x: ToeplitzPoint, m: int, i: int):
    """The minor ratio G^m_i(x), with G^m_0 = 1 and G^m_i = 0 for i outside
    0..m."""
    return minor_ratio(g_matrix(x), m, i, x.exact)


def special_values(x: ToeplitzPoint, p: ParabolicShape):
    """All G^{n_j}_i for n_j in I^P, 1 <= i <= n_j, keyed by (j, i)."""
    out = {}
    for j, nj in enumerate(p.ip, start=1):
        for i in range(1, nj + 1):
            out[(j, i)] = g_function(x, nj, i)
    return out


def q_from_deltas(ds, p: ParabolicShape, tol: float = 1e-12):
    """Quantum parameters (q_1, ..., q_k) from the minors (Delta_0..Delta_n).

    For consecutive flag steps the ratio formula is exact; otherwise q_j is
    the positive real root of

        q_j^(a_j a_{j+1}) =
            Delta_{n_{j-1}}^{a_{j+1}} Delta_{n_{j+1}}^{a_j} / Delta_{n_j}^{a_j + a_{j+1}}

    with a_j = n_j - n_{j-1}, which requires a positive right-hand side.
    """
    nv = p.nvals
    out = []
    for j in range(1, p.k + 1):
        aj = nv[j] - nv[j - 1]
        aj1 = nv[j + 1] - nv[j]
        num = ds[nv[j - 1]] ** aj1 * ds[nv[j + 1]] ** aj
        den = ds[nv[j]] ** (aj + aj1)
        if den == 0:
            raise ValueError("Delta_%d vanishes; point is off the stratum" % nv[j])
        rhs = num / den
        e = aj * aj1
        if e == 1:
            out.append(rhs)
        else:
            rhs = float(rhs)
            if rhs <= tol:
                raise ValueError(
                    "q_%d^%d = %r is not positive; no canonical real root" % (j, e, rhs)
                )
            out.append(rhs ** (1.0 / e))
    return tuple(out)


def q_values(x: ToeplitzPoint, p: ParabolicShape | None = None, tol: float = 1e-12):
    """Quantum parameters of a Toeplitz point on its stratum."""
    if p is None:
        p = stratum(x)
    return q_from_deltas(deltas(x), p, tol=tol)


def eval_schubert(w, x: ToeplitzPoint, p: ParabolicShape):
    """sigma^P_w evaluated at x: substitute E^{(j)}_i -> G^{n_j}_i."""
    if not in_wp(w, p):
        raise ValueError("%r is not in W^P" % (w,))
    vals = special_values(x, p)
    assignment = {evar(j, i): v for (j, i), v in vals.items()}
    out = ring(p).quantum_schubert(w).evaluate(assignment)
    if not x.exact:
        out = float(out)
    return out


def eval_all_schubert(x: ToeplitzPoint, p: ParabolicShape):
    """{w: sigma_w(x)} over W^P."""
    vals = special_values(x, p)
    assignment = {evar(j, i): v for (j, i), v in vals.items()}
    r = ring(p)
    out = {}
    for w in r.basis:
        v = r.quantum_schubert(w).evaluate(assignment)
        out[w] = v if x.exact else float(v)
    return out


def grassmannian_eval(w, x: ToeplitzPoint, d: int):
    """Direct minor formula for a Grassmannian class: the minor of g on rows
    w({d+1..n}) and columns {d+1..n}, over the principal tail minor."""
    n = x.n
    g = g_matrix(x)
    tail = list(range(d + 1, n + 1))
    rows = sorted(w[d:])
    denom = submatrix_det(g, tail, tail, x.exact)
    if denom == 0:
        raise ValueError("Delta_%d vanishes" % d)
    return submatrix_det(g, rows, tail, x.exact) / denom


def _block_m(p: ParabolicShape, col: int) -> int:
    """The superscript used in column ``col`` of the section matrix."""
    nv = p.nvals
    if col <= nv[1]:
        return nv[1]
    for l in range(1, p.k + 1):
        if nv[l] < col <= nv[l + 1]:
            return nv[l]
    raise ValueError("column out of range")


def section_matrix(values, p: ParabolicShape):
    """The upper-triangular section u with u[r][C] = G^{m(C)}_{C-r}.

    ``values`` maps (j, i) -> G^{n_j}_i; entries with subscript 0 are 1 and
    all other out-of-range subscripts are 0.
    """
    n = p.n
    jm = {nj: j for j, nj in enumerate(p.ip, start=1)}

    def gval(m, i):
        if i == 0:
            return 1
        if i < 0 or i > m:
            return 0
        return values[(jm[m], i)]

    return [[gval(_block_m(p, c), c - r) for c in range(1, n + 1)] for r in range(1, n + 1)]


def _wp_matrix(p: ParabolicShape):
    """Permutation matrix of w_P, the block-reversal inside each W_P block."""
    n = p.n
    nv = p.nvals
    w = [0] * n
    for j in range(1, len(nv)):
        lo, hi = nv[j - 1], nv[j]
        for i in range(lo + 1, hi + 1):
            w[i - 1] = lo + hi + 1 - i
    mat = [[0] * n for _ in range(n)]
    for col in range(1, n + 1):
        mat[w[col - 1] - 1][col - 1] = 1
    return mat


def reconstruct(values, p: ParabolicShape, tol: float = 1e-8) -> ToeplitzPoint:
    """Toeplitz point whose special-class values are ``values``.

    Builds g' = u * w_P and factors g' = x * w_0 * b with b lower triangular
    by exact column elimination; the resulting x must come out Toeplitz, which
    is asserted (tolerance ``tol`` in floating mode).
    """
    n = p.n
    exact = all(isinstance(v, (int, Fraction)) for v in values.values())
    gp = matmul(section_matrix(values, p), _wp_matrix(p))
    cols = [None] * (n + 1)
    for j in range(n, 0, -1):
        size = n + 1 - j
        mat = [[gp[r][t] for t in range(j - 1, n)] for r in range(size)]
        rhs = [0] * (size - 1) + [1]
        if exact:
            sol = solve_fraction(mat, rhs)
        else:
            import numpy as np

            a = np.array(mat, dtype=float)
            if abs(np.linalg.det(a)) < 1e-300:
                raise ValueError("section matrix is outside the big cell")
            sol = np.linalg.solve(a, np.array(rhs, dtype=float)).tolist()
        col = [sum(gp[r][j - 1 + t] * sol[t] for t in range(size)) for r in range(n)]
        cols[n + 1 - j] = col
    x_mat = [[cols[c][r] for c in range(1, n + 1)] for r in range(n)]
    a = tuple(x_mat[i][0] for i in range(1, n))
    close = (lambda u, v: u == v) if exact else (lambda u, v: abs(u - v) <= tol)
    for i in range(n):
        for j in range(n):
            expect = 1 if i == j else (a[i - j - 1] if i > j else 0)
            if not close(x_mat[i][j], expect):
                raise ValueError("factorization is not Toeplitz at (%d, %d)" % (i + 1, j + 1))
    if exact:
        a = tuple(int(v) if Fraction(v).denominator == 1 else Fraction(v) for v in a)
    else:
        a = tuple(float(v) for v in a)
    return ToeplitzPoint(n, a)


def flag_equal(amat, bmat, exact: bool, tol: float = 1e-9) -> bool:
    """Do two invertible matrices define the same complete flag of trailing
    column spans?  (Right multiplication by lower-triangular matrices
    preserves the spans of the last c columns.)"""
    n = len(amat)
    import numpy as np

    for c in range(1, n):
        joint = [
            [row[t] for t in range(n - c, n)] + [brow[t] for t in range(n - c, n)]
            for row, brow in zip(amat, bmat)
        ]
        if exact:
            m = [[Fraction(v) for v in row] for row in joint]
            rank = 0
            rows = list(range(n))
            for col in range(2 * c):
                piv = next((r for r in rows if m[r][col] != 0), None)
                if piv is None:
                    continue
                rows.remove(piv)
                rank += 1
                for r in rows:
                    if m[r][col] != 0:
                        f = m[r][col] / m[piv][col]
                        for cc in range(col, 2 * c):
                            m[r][cc] -= f * m[piv][cc]
            if rank != c:
                return False
        else:
            if np.linalg.matrix_rank(np.array(joint, dtype=float), tol=tol) != c:
                return False
    return True


# --- exact limits along lines into a stratum -------------------------------
#
# The full-flag G^j_i are rational functions whose denominators vanish on the
# stratum; class values extend regularly.  To evaluate the extension at an
# exact rational point x of the stratum, move along x + eps*d for a generic
# rational direction d, compute everything as univariate rational functions
# in eps, and take the exact limit eps -> 0.

_EPS = lamvar()


class _RF:
    """Univariate rational function num/den in the path parameter, without
    gcd reduction (limits only need lowest-order terms)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        self.num = num
        self.den = Poly.const(1) if den is None else den

    def __add__(self, other):
        return _RF(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return _RF(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        return _RF(self.num * other.num, self.den * other.den)

    def scale(self, c):
        return _RF(self.num.scale(c), self.den)

    def limit0(self):
        """The value at eps = 0, requiring regularity (no pole)."""
        if self.num.is_zero():
            return Fraction(0)
        on, cn = _lowest_order(self.num)
        od, cd = _lowest_order(self.den)
        if on < od:
            raise ArithmeticError("pole at the stratum point (order %d < %d)" % (on, od))
        return Fraction(0) if on > od else Fraction(cn) / Fraction(cd)


def _lowest_order(f: Poly):
    best = None
    for mono, coeff in f.terms.items():
        e = mono[0][1] if mono else 0
        if best is None or e < best[0]:
            best = (e, coeff)
    return best


def _line_g(x: ToeplitzPoint, direction):
    """g(eps) = (x + eps*d) * w_0 as a matrix of Poly in eps."""
    n = x.n
    eps = Poly.var(_EPS)

    def coord(i):
        if i == 0:
            return Poly.const(1)
        if 0 < i < n:
            return Poly.const(x.a[i - 1]) + eps.scale(direction[i - 1])
        return Poly.zero()

    return [[coord(i - (n + 1 - j)) for j in range(1, n + 1)] for i in range(1, n + 1)]


def _minor(g, rows, cols) -> Poly:
    return det_poly([[g[r - 1][c - 1] for c in cols] for r in rows])


def _g_rf(g, n: int, m: int, i: int) -> _RF:
    if i == 0:
        return _RF(Poly.const(1))
    if i < 0 or i > m:
        return _RF(Poly.zero())
    tail = list(range(m + 1, n + 1))
    num = _minor(g, sorted([m - i + 1] + list(range(m + 2, n + 1))), tail)
    den = _minor(g, tail, tail)
    if den.is_zero():
        raise ValueError("direction is degenerate: Delta_%d vanishes on the line" % m)
    return _RF(num, den)


def _pick_direction(x: ToeplitzPoint, direction):
    n = x.n
    candidates = (
        [tuple(direction)]
        if direction is not None
        else [(1,) * (n - 1), tuple(range(1, n)), tuple(3**i for i in range(n - 1))]
    )
    for d in candidates:
        g = _line_g(x, d)
        if all(
            not _minor(g, list(range(m + 1, n + 1)), list(range(m + 1, n + 1))).is_zero()
            for m in range(1, n)
        ):
            return g
    raise ValueError("no generic direction found for the limit")


def fullflag_limit(w, x: ToeplitzPoint, direction=None):
    """Limit at x of the full-flag class of w, extended as a rational
    function along the line x + eps*direction."""
    from .weyl import full_flag

    n = x.n
    g = _pick_direction(x, direction)
    cache = {}

    def gval(j, i):
        if (j, i) not in cache:
            cache[(j, i)] = _g_rf(g, n, j, i)
        return cache[(j, i)]

    total = _RF(Poly.zero())
    for lam, c in ring(full_flag(n)).mcoef[w].items():
        term = _RF(Poly.const(1))
        for j, part in enumerate(lam, start=1):
            for i in part:
                term = term * gval(j, i)
        total = total + term.scale(c)
    return total.limit0()


def vanishing_limit(x: ToeplitzPoint, j: int, i: int, l: int, direction=None):
    """Limit at x of q_j * (G^j_{i-1} G^{j-1}_{l-1} - G^{j-1}_{i-2} G^j_l)
    extended from the open stratum, with the full-flag q_j = the ratio
    Delta_{j-1} Delta_{j+1} / Delta_j^2."""
    n = x.n
    g = _pick_direction(x, direction)

    def delta_poly(m):
        if m == 0 or m == n:
            return Poly.const(1)
        tail = list(range(m + 1, n + 1))
        return _minor(g, tail, tail)

    qj = _RF(delta_poly(j - 1) * delta_poly(j + 1), delta_poly(j) * delta_poly(j))

    def gv(m, s):
        if m == 0:
            return _RF(Poly.const(1) if s == 0 else Poly.zero())
        return _g_rf(g, n, m, s)

    combo = gv(j, i - 1) * gv(j - 1, l - 1) - gv(j - 1, i - 2) * gv(j, l)
    return (qj * combo).limit0()
