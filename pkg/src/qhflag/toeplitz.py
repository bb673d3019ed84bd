"""Unipotent lower-triangular Toeplitz matrices and total nonnegativity.

A point is the coordinate vector (a_1, ..., a_{n-1}); the matrix realization
has 1 on the diagonal and a_i on the i-th subdiagonal.  Exact mode keeps
int/Fraction coordinates and evaluates all minors exactly; floating mode uses
numpy determinants with a zero tolerance.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .linalg import det_fraction
from .weyl import ParabolicShape

ZERO_TOL = 1e-10


@dataclass(frozen=True)
class ToeplitzPoint:
    n: int
    a: tuple

    def __post_init__(self):
        if len(self.a) != self.n - 1:
            raise ValueError("need n-1 coordinates")
        object.__setattr__(self, "a", tuple(self.a))

    @property
    def exact(self) -> bool:
        return all(isinstance(x, (int, Fraction)) for x in self.a)

    def coord(self, i: int):
        """a_i with the conventions a_0 = 1 and a_i = 0 outside 0..n-1."""
        if i == 0:
            return 1
        if 0 < i < self.n:
            return self.a[i - 1]
        return 0

    def matrix(self):
        return [[self.coord(i - j) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]


def from_floats(a) -> ToeplitzPoint:
    return ToeplitzPoint(len(a) + 1, tuple(float(x) for x in a))


def identity_point(n: int) -> ToeplitzPoint:
    return ToeplitzPoint(n, (0,) * (n - 1))


def _det(mat, exact: bool):
    if not mat:
        return 1 if exact else 1.0
    if exact:
        return det_fraction(mat)
    import numpy as np

    return float(np.linalg.det(np.array(mat, dtype=float)))


def delta(x: ToeplitzPoint, m: int):
    """The corner minor Delta_m = det(a_{j-i+m}), size (n-m) x (n-m)."""
    if m == 0 or m == x.n:
        return 1 if x.exact else 1.0
    if not (0 <= m <= x.n):
        raise ValueError("m out of range")
    mat = [[x.coord(j - i + m) for j in range(1, x.n - m + 1)] for i in range(1, x.n - m + 1)]
    return _det(mat, x.exact)


def deltas(x: ToeplitzPoint):
    """(Delta_0, ..., Delta_n) with the boundary convention Delta_0 = Delta_n = 1."""
    return tuple(delta(x, m) for m in range(x.n + 1))


def stratum(x: ToeplitzPoint, tol: float = ZERO_TOL) -> ParabolicShape:
    """The parabolic shape P with x in X_P: indices of nonvanishing Delta."""
    ip = []
    for i in range(1, x.n):
        d = delta(x, i)
        if x.exact:
            nz = d != 0
        else:
            if abs(d) < tol:
                nz = False
            elif abs(d) < 10 * tol:
                raise ValueError("Delta_%d = %r is ambiguous at tolerance %g" % (i, d, tol))
            else:
                nz = True
        if nz:
            ip.append(i)
    return ParabolicShape(x.n, tuple(ip))


def all_minors(x: ToeplitzPoint):
    """Yield (rows, cols, value) over all square minors; n <= 8 intended."""
    mat = x.matrix()
    n = x.n
    exact = x.exact
    for size in range(1, n + 1):
        for rows in itertools.combinations(range(n), size):
            for cols in itertools.combinations(range(n), size):
                sub = [[mat[r][c] for c in cols] for r in rows]
                yield rows, cols, _det(sub, exact)


def is_tnn(x: ToeplitzPoint, tol: float = ZERO_TOL):
    """Brute-force total nonnegativity over all minors.

    Returns (flag, margin) where margin is the smallest minor encountered.
    """
    margin = None
    ok = True
    for _, _, val in all_minors(x):
        if margin is None or val < margin:
            margin = val
        if (val < 0) if x.exact else (val < -tol):
            ok = False
    return ok, margin


def is_tp_cell(x: ToeplitzPoint, tol: float = ZERO_TOL) -> bool:
    """Membership test for the totally positive cell X_{B,>0}.

    Checks Delta_j > 0 for all j and positivity of every d x d minor with
    column set {1..d}.
    """
    n = x.n
    pos = (lambda v: v > 0) if x.exact else (lambda v: v > tol)
    for j in range(1, n):
        if not pos(delta(x, j)):
            return False
    mat = x.matrix()
    for d in range(1, n):
        cols = list(range(d))
        for rows in itertools.combinations(range(n), d):
            sub = [[mat[r][c] for c in cols] for r in rows]
            if not pos(_det(sub, x.exact)):
                return False
    return True


def semigroup_mul(x: ToeplitzPoint, y: ToeplitzPoint) -> ToeplitzPoint:
    """Matrix product of two Toeplitz points: convolution of coordinates."""
    if x.n != y.n:
        raise ValueError("size mismatch")
    a = tuple(
        sum(x.coord(i) * y.coord(k - i) for i in range(0, k + 1)) for k in range(1, x.n)
    )
    return ToeplitzPoint(x.n, a)


def scale_path(x: ToeplitzPoint, t) -> ToeplitzPoint:
    """The path u_t with a_i replaced by t^i a_i; u_0 = Id, u_1 = x."""
    return ToeplitzPoint(x.n, tuple(t**i * x.a[i - 1] for i in range(1, x.n)))


def _esym(values):
    """All elementary symmetric functions e_0..e_d of a list of numbers."""
    es = [1] + [0] * len(values)
    for v in values:
        for i in range(len(values), 0, -1):
            es[i] = es[i] + v * es[i - 1]
    return es


def grassmannian_point(d: int, n: int, z, m, tol: float = 1e-9) -> ToeplitzPoint:
    """Point of the Grassmannian stratum from roots z * exp(2 pi i m_j / n).

    The coordinates are a_i = e_i(roots); the root multiset must be closed
    under conjugation for a real result.
    """
    m = tuple(m)
    if len(m) != d or any(not (0 <= mj < n) for mj in m) or len(set(m)) != d:
        raise ValueError("need d distinct residues 0 <= m_j < n")
    roots = [z * cmath.exp(2j * math.pi * mj / n) for mj in m]
    es = _esym(roots)
    a = []
    for i in range(1, n):
        v = es[i] if i <= d else 0
        if isinstance(v, complex):
            if abs(v.imag) > tol * max(1.0, abs(v)):
                raise ValueError("root set not conjugation-closed: e_%d = %r" % (i, v))
            v = v.real
        a.append(float(v))
    return ToeplitzPoint(n, tuple(a))


def positive_curve(d: int, n: int, t) -> ToeplitzPoint:
    """The totally nonnegative curve through the stratum X_{P_d}.

    Roots t * zeta^{-(d-1)/2 + j} for j = 0..d-1 with zeta = exp(2 pi i / n):
    a conjugation-symmetric set, so the point is real with a_i = e_i(roots).
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    roots = [t * cmath.exp(2j * math.pi * (-(d - 1) / 2 + j) / n) for j in range(d)]
    es = _esym(roots)
    a = []
    for i in range(1, n):
        v = es[i] if i <= d else 0.0
        if isinstance(v, complex):
            v = v.real
        a.append(float(v))
    return ToeplitzPoint(n, tuple(a))


def curve_roots(d: int, n: int, t):
    """The root multiset used by positive_curve (complex values)."""
    return [t * cmath.exp(2j * math.pi * (-(d - 1) / 2 + j) / n) for j in range(d)]


def to_json(x: ToeplitzPoint):
    return {
        "n": x.n,
        "a": [str(Fraction(v)) if isinstance(v, (int, Fraction)) else v for v in x.a],
    }


def from_json(obj) -> ToeplitzPoint:
    a = []
    for v in obj["a"]:
        a.append(Fraction(v) if isinstance(v, str) else float(v))
    a = [int(v) if isinstance(v, Fraction) and v.denominator == 1 else v for v in a]
    return ToeplitzPoint(obj["n"], tuple(a))
