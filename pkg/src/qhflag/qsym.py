"""Quantum elementary symmetric polynomials and normal forms modulo J.

This module builds the (q,P)-elementary symmetric polynomials E^{(l)}_i from
their three-term recursion, the (q,P)-standard monomials E_Lambda, the ASK
matrices whose characteristic polynomials reproduce the E's, and the
``straighten`` operation that splits any polynomial in E-symbols into a part
supported on standard monomials plus an explicit ideal witness.

Straightening works in the Borel realization: sigma^{(j)}_i is the i-th
elementary symmetric polynomial of the j-th block of x-variables, so the ideal
J = (E^{(k+1)}_1, ..., E^{(k+1)}_n) specializes at q = 0 to the ideal of
symmetric polynomials (e_1(x), ..., e_n(x)).  That classical ideal has the
Groebner-style generating set g_j = h_{n-j+1}(x_1..x_j) with pairwise coprime
leading terms x_j^{n-j+1}, so exact division ("staircase division") gives
classical normal forms with cofactors.  The quantum normal form is then
computed q-adically: peel off the lowest q-weight layer, decompose it
classically over {e_Lambda} plus the ideal, subtract the corresponding
quantum elements (which agree with the classical ones to lowest q-order), and
repeat.  Each pass strictly raises the minimal q-weight, so the loop
terminates; the result is the unique decomposition along the direct sum
J (+) span{E_Lambda}.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .linalg import solve_fraction
from .poly import Poly, evar, qvar, svar, xvar
from .weyl import ParabolicShape

Shape = tuple[int, ...]


# -- elementary and complete homogeneous symmetric polynomials -------------


@lru_cache(maxsize=None)
def classical_e(i: int, m: int) -> Poly:
    """e_i(x_1, ..., x_m)."""
    if i == 0:
        return Poly.const(1)
    if i < 0 or i > m:
        return Poly.zero()
    return classical_e(i, m - 1) + Poly.var(xvar(m)) * classical_e(i - 1, m - 1)


@lru_cache(maxsize=None)
def complete_h(m: int, j: int) -> Poly:
    """h_m(x_1, ..., x_j), the complete homogeneous symmetric polynomial."""
    if m == 0:
        return Poly.const(1)
    if m < 0 or j == 0:
        return Poly.zero()
    return complete_h(m, j - 1) + Poly.var(xvar(j)) * complete_h(m - 1, j)


def block_e(i: int, j: int, p: ParabolicShape) -> Poly:
    """e_i of the j-th block variables x_{n_{j-1}+1}, ..., x_{n_j}."""
    nv = p.nvals
    lo, hi = nv[j - 1], nv[j]
    if i == 0:
        return Poly.const(1)
    if i < 0 or i > hi - lo:
        return Poly.zero()
    out = Poly.zero()
    for comb in itertools.combinations(range(lo + 1, hi + 1), i):
        out = out + Poly.monomial([(xvar(t), 1) for t in comb])
    return out


# -- quantum elementary symmetric polynomials ------------------------------


@lru_cache(maxsize=None)
def quantum_E(l: int, i: int, p: ParabolicShape) -> Poly:
    """The (q,P)-elementary symmetric polynomial E^{(l)}_i in sigma, q.

    Recursion: E^{(l)}_i = sum_r sigma^{(l)}_r E^{(l-1)}_{i-r}
    + (-1)^{n_l - n_{l-1} + 1} q_{l-1} E^{(l-2)}_{i - n_l + n_{l-2}},
    with E^{(-1)} = 0, E^{(0)}_0 = 1, E^{(0)}_{i != 0} = 0, and
    E^{(l)}_i = 0 outside 0 <= i <= n_l.  The sign exponent uses the block
    sizes at level l; this is the choice under which the ASK characteristic
    polynomial identity holds (see charpoly_check).
    """
    nv = p.nvals
    if l <= 0:
        return Poly.const(1) if (l == 0 and i == 0) else Poly.zero()
    if i < 0 or i > nv[l]:
        return Poly.zero()
    a_l = nv[l] - nv[l - 1]
    out = Poly.zero()
    for r in range(0, min(i, a_l) + 1):
        sig = Poly.const(1) if r == 0 else Poly.var(svar(l, r))
        out = out + sig * quantum_E(l - 1, i - r, p)
    if l >= 2:
        sign = (-1) ** (a_l + 1)
        qterm = quantum_E(l - 2, i - nv[l] + nv[l - 2], p)
        if not qterm.is_zero():
            out = out + Poly.var(qvar(l - 1)) * qterm.scale(sign)
    return out


def sigma_to_x_map(p: ParabolicShape):
    """sigma^{(j)}_i -> e_i(block j) for all valid (j, i)."""
    nv = p.nvals
    out = {}
    for j in range(1, p.k + 2):
        for i in range(1, nv[j] - nv[j - 1] + 1):
            out[svar(j, i)] = block_e(i, j, p)
    return out


@lru_cache(maxsize=None)
def quantum_E_x(l: int, i: int, p: ParabolicShape) -> Poly:
    """E^{(l)}_i in the Borel realization (x and q variables)."""
    return quantum_E(l, i, p).substitute(sigma_to_x_map(p))


# -- standard monomials ----------------------------------------------------


def partitions_in_box(rows: int, cols: int):
    """Weakly decreasing sequences with at most `rows` parts, parts <= cols."""
    if rows == 0 or cols == 0:
        return [()]
    out = []

    def rec(prefix, remaining, cap):
        out.append(tuple(prefix))
        if remaining == 0:
            return
        for part in range(min(cap, cols), 0, -1):
            rec(prefix + [part], remaining - 1, part)

    rec([], rows, cols)
    return sorted(set(out), key=lambda lam: (sum(lam), lam))


@lru_cache(maxsize=None)
def standard_monomials(p: ParabolicShape):
    """Enumerate L_P, sorted by (total degree, lex).

    Lambda = (lambda^{(1)}, ..., lambda^{(k)}) where lambda^{(j)} has at most
    n_{j+1} - n_j parts, each part <= n_j.  With this part count
    |L_P| = |W^P|; the bound n_j - n_{j-1} that appears in the source
    presentation fails that dimension count already for projective space.
    """
    nv = p.nvals
    choices = [partitions_in_box(nv[j + 1] - nv[j], nv[j]) for j in range(1, p.k + 1)]
    lams = [tuple(c) for c in itertools.product(*choices)]
    return tuple(sorted(lams, key=lambda lam: (sum(map(sum, lam)), lam)))


def lambda_degree(lam) -> int:
    return sum(sum(part) for part in lam)


def E_of(lam, p: ParabolicShape) -> Poly:
    """The (q,P)-standard monomial E_Lambda as a formal E-symbol polynomial."""
    out = Poly.const(1)
    for j, part in enumerate(lam, start=1):
        for i in part:
            out = out * Poly.var(evar(j, i))
    return out


@lru_cache(maxsize=None)
def E_of_x(lam, p: ParabolicShape) -> Poly:
    out = Poly.const(1)
    for j, part in enumerate(lam, start=1):
        for i in part:
            out = out * quantum_E_x(j, i, p)
    return out


@lru_cache(maxsize=None)
def e_of_x(lam, p: ParabolicShape) -> Poly:
    """Classical P-standard monomial e_Lambda (the q -> 0 limit of E_Lambda)."""
    nv = p.nvals
    out = Poly.const(1)
    for j, part in enumerate(lam, start=1):
        for i in part:
            out = out * classical_e(i, nv[j])
    return out


def esym_to_x(f: Poly, p: ParabolicShape) -> Poly:
    """Substitute every E-symbol in f by its x,q realization."""
    mapping = {}
    for v in f.variables():
        if v[0] == 4:
            mapping[v] = quantum_E_x(v[1], v[2], p)
    return f.substitute(mapping)


def q_weight(p: ParabolicShape):
    """Degrees of the quantum parameters: deg q_j = n_{j+1} - n_{j-1}."""
    nv = p.nvals
    return {j: nv[j + 1] - nv[j - 1] for j in range(1, p.k + 1)}


# -- staircase division (classical normal form) ----------------------------


class _Staircase:
    """Division data for the ideal (e_1(x_1..x_n), ..., e_n(x_1..x_n))."""

    def __init__(self, n: int):
        self.n = n
        # generator g_j = h_{n-j+1}(x_1..x_j), leading term x_j^{n-j+1}
        self.gens = {j: complete_h(n - j + 1, j) for j in range(1, n + 1)}
        # g_j = sum_i (-1)^{i+1} h_{n-j+1-i}(x_1..x_j) e_i(x_1..x_n), from
        # H_j(t) E_n(-t) = E_{j+1..n}(-t) at degree n-j+1; store the e-cofactors
        self.e_cof = {
            j: {
                i: complete_h(n - j + 1 - i, j).scale((-1) ** (i + 1))
                for i in range(1, n - j + 2)
            }
            for j in range(1, n + 1)
        }

    def _reducer(self, mono):
        """Largest j such that x_j appears with exponent >= n - j + 1."""
        for v, e in reversed(mono):
            if v[0] == 0 and e >= self.n - v[1] + 1:
                return v[1]
        return None

    def divide(self, f: Poly):
        """f = nf + sum_j cof_j * g_j with nf in the staircase span.

        Works with q-variables present as inert coefficients.  Returns
        (nf, cofactors over the e_i(x_1..x_n) generators).
        """
        n = self.n
        terms = dict(f.terms)
        heap = []
        for mono in terms:
            if self._reducer(mono) is not None:
                heapq.heappush(heap, (self._key(mono), mono))
        cof = {i: Poly.zero() for i in range(1, n + 1)}
        while heap:
            _, mono = heapq.heappop(heap)
            c = terms.get(mono)
            if not c:
                continue
            j = self._reducer(mono)
            if j is None:
                continue
            quot = []
            for v, e in mono:
                if v == xvar(j):
                    e -= n - j + 1
                if e:
                    quot.append((v, e))
            qpoly = Poly.monomial(quot, c)
            for i, hcof in self.e_cof[j].items():
                cof[i] = cof[i] + qpoly * hcof
            # subtract c * quot * g_j from the working terms
            delta = qpoly * self.gens[j]
            for m2, c2 in delta.terms.items():
                prev = terms.get(m2, 0)
                new = prev - c2
                if new:
                    terms[m2] = new
                    if m2 != mono and self._reducer(m2) is not None:
                        heapq.heappush(heap, (self._key(m2), m2))
                else:
                    terms.pop(m2, None)
        nf = Poly({m: c for m, c in terms.items() if c})
        return nf, {i: v for i, v in cof.items() if not v.is_zero()}

    def _key(self, mono):
        xs = {v[1]: e for v, e in mono if v[0] == 0}
        # negative exponents from x_n downward: lex-descending heap order
        return tuple(-xs.get(i, 0) for i in range(self.n, 0, -1))


@lru_cache(maxsize=None)
def _staircase(n: int) -> _Staircase:
    return _Staircase(n)


# -- classical decomposition over e_Lambda ---------------------------------


class _ClassicalBasis:
    """Per-shape data: normal forms of the e_Lambda and degree-wise solvers."""

    def __init__(self, p: ParabolicShape):
        self.p = p
        self.stair = _staircase(p.n)
        self.lams = standard_monomials(p)
        self.nf = {}
        self.u_cof = {}
        for lam in self.lams:
            nf, cof = self.stair.divide(e_of_x(lam, p))
            self.nf[lam] = nf
            self.u_cof[lam] = cof
        self.by_degree = {}
        for lam in self.lams:
            self.by_degree.setdefault(lambda_degree(lam), []).append(lam)
        self._solvers = {}

    def _solver(self, d: int):
        """Pivot rows and inverted submatrix for degree-d coefficients."""
        if d in self._solvers:
            return self._solvers[d]
        lams = self.by_degree.get(d, [])
        monos = sorted({m for lam in lams for m in self.nf[lam].terms})
        cols = [[self.nf[lam].terms.get(m, 0) for lam in lams] for m in monos]
        # pick a row subset with invertible square matrix by greedy elimination
        rows = []
        work = []
        for ridx, row in enumerate(cols):
            cand = [Fraction(x) for x in row]
            for prow, piv in work:
                if cand[piv]:
                    f = cand[piv] / prow[piv]
                    cand = [a - f * b for a, b in zip(cand, prow)]
            piv = next((i for i, x in enumerate(cand) if x), None)
            if piv is not None:
                work.append((cand, piv))
                rows.append(ridx)
            if len(rows) == len(lams):
                break
        if len(rows) != len(lams):
            raise RuntimeError("standard monomials linearly dependent in degree %d" % d)
        mat = [[Fraction(cols[r][c]) for c in range(len(lams))] for r in rows]
        self._solvers[d] = (lams, monos, rows, mat)
        return self._solvers[d]

    def decompose(self, g: Poly):
        """g = sum c_lam e_Lambda + sum cof_i e_i(x); exact, raises if not."""
        nf, cof = self.stair.divide(g)
        coeffs = {}
        by_deg = {}
        for mono, c in nf.terms.items():
            d = sum(e for _, e in mono)
            by_deg.setdefault(d, {})[mono] = c
        for d, part in by_deg.items():
            lams, monos, rows, mat = self._solver(d)
            rhs = [Fraction(part.get(monos[r], 0)) for r in rows]
            sol = solve_fraction(mat, rhs)
            check = Poly.zero()
            for lam, c in zip(lams, sol):
                if c:
                    coeffs[lam] = coeffs.get(lam, 0) + c
                    check = check + self.nf[lam].scale(c)
            if check != Poly(dict(part)):
                raise RuntimeError("classical decomposition inconsistent (degree %d)" % d)
        for lam, c in coeffs.items():
            for i, u in self.u_cof[lam].items():
                cof[i] = cof.get(i, Poly.zero()) + u.scale(c)
        return coeffs, cof


@lru_cache(maxsize=None)
def classical_basis(p: ParabolicShape) -> _ClassicalBasis:
    return _ClassicalBasis(p)


# -- quantum straightening -------------------------------------------------


@dataclass
class StraightenedForm:
    """Decomposition f = standard part + ideal part.

    standard maps Lambda in L_P to a polynomial in q; witness lists
    (cofactor, i) pairs with cofactors in x,q such that substituting the
    realizations gives back the input exactly.
    """

    standard: dict
    witness: list = field(default_factory=list)

    def standard_poly(self, p: ParabolicShape) -> Poly:
        out = Poly.zero()
        for lam, cq in self.standard.items():
            out = out + cq * E_of_x(lam, p)
        return out

    def reconstruct(self, p: ParabolicShape) -> Poly:
        out = self.standard_poly(p)
        for cof, i in self.witness:
            out = out + cof * quantum_E_x(p.k + 1, i, p)
        return out


def _split_q(mono):
    """Split a monomial into (x-part pairs, q-part pairs)."""
    xs, qs = [], []
    for v, e in mono:
        (qs if v[0] == 2 else xs).append((v, e))
    return tuple(xs), tuple(qs)


def straighten(f: Poly, p: ParabolicShape, max_rounds: int = 10000) -> StraightenedForm:
    """Normal form of f (a polynomial in E-symbols and q) modulo J.

    Returns the unique standard part supported on L_P together with an ideal
    witness.  The q-adic peeling loop is guaranteed to terminate because each
    subtraction only introduces terms of strictly larger q-weight.
    """
    return straighten_x(esym_to_x(f, p), p, max_rounds)


def straighten_x(fx: Poly, p: ParabolicShape, max_rounds: int = 10000) -> StraightenedForm:
    """straighten for inputs already in the Borel realization (x, q)."""
    basis = classical_basis(p)
    weights = q_weight(p)
    residual = fx
    standard = {}
    witness_acc = {}
    rounds = 0
    while not residual.is_zero():
        rounds += 1
        if rounds > max_rounds:
            raise RuntimeError("straighten failed to terminate")
        levels = {}
        for mono, c in residual.terms.items():
            xs, qs = _split_q(mono)
            levels.setdefault(qs, {})[xs] = c
        qs = min(levels, key=lambda q: (sum(weights[v[1]] * e for v, e in q), q))
        qmono = Poly.monomial(qs)
        g = Poly(dict(levels[qs]))
        coeffs, cof = basis.decompose(g)
        delta = Poly.zero()
        for lam, c in coeffs.items():
            term = qmono.scale(c)
            standard[lam] = standard.get(lam, Poly.zero()) + term
            delta = delta + term * E_of_x(lam, p)
        for i, cpoly in cof.items():
            term = cpoly * qmono
            witness_acc[i] = witness_acc.get(i, Poly.zero()) + term
            delta = delta + term * quantum_E_x(p.k + 1, i, p)
        residual = residual - delta
    standard = {lam: c for lam, c in standard.items() if not c.is_zero()}
    witness = [(cpoly, i) for i, cpoly in sorted(witness_acc.items()) if not cpoly.is_zero()]
    return StraightenedForm(standard=standard, witness=witness)


# -- ASK matrices ----------------------------------------------------------


def ask_matrix(l: int, p: ParabolicShape):
    """The matrix A^{[l]} = f + D + Q with MultiPolynomial entries."""
    nv = p.nvals
    if not (1 <= l <= p.k + 1):
        raise ValueError("need 1 <= l <= k+1")
    size = nv[l]
    a = [[Poly.zero() for _ in range(size)] for _ in range(size)]
    for i in range(1, size):
        a[i][i - 1] = Poly.const(1)
    for i in range(1, min(nv[1], size) + 1):
        a[0][i - 1] = a[0][i - 1] - Poly.var(svar(1, i))
    for j in range(2, l + 1):
        aj = nv[j] - nv[j - 1]
        for r in range(1, aj + 1):
            a[nv[j - 1] + r - 1][nv[j] - 1] = a[nv[j - 1] + r - 1][nv[j] - 1] - Poly.var(
                svar(j, aj + 1 - r)
            )
    for m in range(1, p.k + 1):
        if m + 1 <= l and nv[m + 1] <= size:
            sign = (-1) ** (nv[m + 1] - nv[m])
            a[nv[m - 1]][nv[m + 1] - 1] = a[nv[m - 1]][nv[m + 1] - 1] + Poly.var(
                qvar(m)
            ).scale(sign)
    return a


def charpoly_check(l: int, p: ParabolicShape) -> bool:
    """det(lambda*I - A^{[l]}) == lambda^{n_l} + sum E^{(l)}_i lambda^{n_l-i}."""
    from .linalg import charpoly_coeffs
    from .poly import lamvar

    nv = p.nvals
    lhs = charpoly_coeffs(ask_matrix(l, p), lamvar())
    rhs = Poly.var(lamvar(), nv[l])
    for i in range(1, nv[l] + 1):
        rhs = rhs + quantum_E(l, i, p) * Poly.var(lamvar(), nv[l] - i)
    return lhs == rhs
