"""The ring qH*(G/P) in the Schubert basis.

Schubert expansions are plain dicts mapping one-line permutations in W^P to
polynomials in the quantum parameters.  Multiplication goes through the
presentation: multiply the quantum Schubert polynomials in the Borel
realization, straighten modulo J, and convert the standard-monomial
coefficients back to the Schubert basis through the exact change of basis
computed once per parabolic shape.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .linalg import det_poly, invert_fraction
from .poly import Poly, divided_difference, evar, qvar, svar, xvar
from .qsym import (
    E_of_x,
    classical_basis,
    e_of_x,
    lambda_degree,
    q_weight,
    quantum_E,
    quantum_E_x,
    standard_monomials,
    straighten_x,
)
from .weyl import (
    ParabolicShape,
    Permutation,
    compose,
    full_flag,
    in_wp,
    length,
    longest_element,
    longest_in_wp,
    min_coset_reps,
    pd,
    perm_of_shape,
    positive_roots,
    reflection,
    right_mul_s,
    tau,
)

SchubertExpansion = dict  # Permutation -> Poly in q


@lru_cache(maxsize=None)
def classical_schubert(w: Permutation, n: int) -> Poly:
    """The Schubert polynomial c_w, from c_{w_0} = x_1^{n-1} ... x_{n-1}
    by divided differences: c_w = d_i(c_{w s_i}) whenever w(i) < w(i+1)."""
    if len(w) != n:
        raise ValueError("permutation size mismatch")
    if w == longest_element(n):
        return Poly.monomial([(xvar(i), n - i) for i in range(1, n)])
    for i in range(1, n):
        if w[i - 1] < w[i]:
            return divided_difference(classical_schubert(right_mul_s(w, i), n), i)
    raise AssertionError("unreachable")


class Ring:
    """Cached per-shape data for qH*(G/P)."""

    def __init__(self, p: ParabolicShape):
        self.p = p
        self.basis = min_coset_reps(p)
        self.lams = standard_monomials(p)
        self.lam_index = {lam: i for i, lam in enumerate(self.lams)}
        cb = classical_basis(p)
        # expand each classical Schubert polynomial over the e_Lambda; the
        # ideal component must vanish identically since c_w lies in the span
        self.mcoef = {}
        for w in self.basis:
            coeffs, cof = cb.decompose(classical_schubert(w, p.n))
            junk = Poly.zero()
            for i, c in cof.items():
                junk = junk + c
            if not junk.is_zero():
                raise RuntimeError("Schubert polynomial not in the standard span")
            self.mcoef[w] = coeffs
        # change of basis: column vector of standard coefficients c_Lambda
        # equals M^T a for Schubert coefficients a; invert M^T once
        size = len(self.basis)
        mt = [
            [Fraction(self.mcoef[w].get(lam, 0)) for w in self.basis]
            for lam in self.lams
        ]
        if size != len(self.lams):
            raise RuntimeError("|L_P| != |W^P|")
        self.mt_inv = invert_fraction(mt)
        self._qs_x = {}
        self._sigma_total = None

    def quantum_schubert_x(self, w: Permutation) -> Poly:
        """C^P_w in the Borel realization."""
        if w not in self._qs_x:
            out = Poly.zero()
            for lam, c in self.mcoef[w].items():
                out = out + E_of_x(lam, self.p).scale(c)
            self._qs_x[w] = out
        return self._qs_x[w]

    def quantum_schubert(self, w: Permutation) -> Poly:
        """C^P_w as a polynomial in formal E-symbols."""
        out = Poly.zero()
        for lam, c in self.mcoef[w].items():
            mono = Poly.const(1)
            for j, part in enumerate(lam, start=1):
                for i in part:
                    mono = mono * Poly.var(evar(j, i))
            out = out + mono.scale(c)
        return out

    def sigma_total_x(self) -> Poly:
        """The Borel realization of sigma = sum over W^P of sigma_w."""
        if self._sigma_total is None:
            out = Poly.zero()
            for w in self.basis:
                out = out + self.quantum_schubert_x(w)
            self._sigma_total = out
        return self._sigma_total

    def std_to_schubert(self, std) -> SchubertExpansion:
        """Convert Lambda-indexed q-coefficients to the Schubert basis."""
        col = [std.get(lam, Poly.zero()) for lam in self.lams]
        out = {}
        for i, w in enumerate(self.basis):
            acc = Poly.zero()
            for j, cq in enumerate(col):
                f = self.mt_inv[i][j]
                if f and not cq.is_zero():
                    acc = acc + cq.scale(f)
            if not acc.is_zero():
                out[w] = acc
        return out

    def reduce_x(self, fx: Poly) -> SchubertExpansion:
        """Schubert expansion of an x,q polynomial modulo J."""
        sf = straighten_x(fx, self.p)
        return self.std_to_schubert(sf.standard)


@lru_cache(maxsize=None)
def ring(p: ParabolicShape) -> Ring:
    return Ring(p)


def unit(p: ParabolicShape) -> SchubertExpansion:
    return {tuple(range(1, p.n + 1)): Poly.const(1)}


def schubert_class(w: Permutation, p: ParabolicShape) -> SchubertExpansion:
    if not in_wp(w, p):
        raise ValueError("%r is not in W^P" % (w,))
    return {w: Poly.const(1)}


def expansion_to_x(a: SchubertExpansion, p: ParabolicShape) -> Poly:
    r = ring(p)
    out = Poly.zero()
    for w, cq in a.items():
        out = out + cq * r.quantum_schubert_x(w)
    return out


def quantum_schubert(w: Permutation, p: ParabolicShape) -> Poly:
    """C^P_w in formal E-symbols and q."""
    if not in_wp(w, p):
        raise ValueError("%r is not in W^P" % (w,))
    return ring(p).quantum_schubert(w)


def multiply(a: SchubertExpansion, b: SchubertExpansion, p: ParabolicShape) -> SchubertExpansion:
    """Product in qH*(G/P) via straightening modulo J."""
    r = ring(p)
    fx = expansion_to_x(a, p) * expansion_to_x(b, p)
    out = r.reduce_x(fx)
    _check_grading(a, b, out, p)
    return out


@lru_cache(maxsize=None)
def basis_product(u: Permutation, v: Permutation, p: ParabolicShape) -> tuple:
    """sigma_u * sigma_v as a tuple of (w, q-poly) pairs, cached."""
    prod = multiply(schubert_class(u, p), schubert_class(v, p), p)
    return tuple(sorted(prod.items()))


def _check_grading(a, b, out, p: ParabolicShape):
    """Degree bookkeeping: products of pure classes stay graded."""
    weights = q_weight(p)

    def degrees(expn):
        degs = set()
        for w, cq in expn.items():
            for mono in cq.terms:
                d = length(w) + sum(weights[v[1]] * e for v, e in mono)
                degs.add(d)
        return degs

    da, db = degrees(a), degrees(b)
    if len(da) == 1 and len(db) == 1:
        expected = next(iter(da)) + next(iter(db))
        for d in degrees(out):
            if d != expected:
                raise RuntimeError("grading violated: %d != %d" % (d, expected))


def chevalley(j: int, w: Permutation, p: ParabolicShape) -> SchubertExpansion:
    """Quantum Chevalley product sigma_{s_{n_j}} * sigma_w, evaluated by the
    combinatorial formula (classical root terms plus q_{h,l} terms)."""
    if not (1 <= j <= p.k):
        raise ValueError("n_j must lie in I^P")
    if not in_wp(w, p):
        raise ValueError("%r is not in W^P" % (w,))
    nv = p.nvals
    nj = nv[j]
    out = {}
    for h, l in positive_roots(p.n):
        if not (h <= nj <= l):
            continue
        v = compose(w, reflection(h, l, p.n))
        if in_wp(v, p) and length(v) == length(w) + 1:
            out[v] = out.get(v, Poly.zero()) + Poly.const(1)
    for h in range(1, j + 1):
        for l in range(j, p.k + 1):
            t = tau(h, l, p)
            v = compose(w, t)
            if length(v) == length(w) - length(t) and in_wp(v, p):
                qmono = Poly.monomial([(qvar(m), 1) for m in range(h, l + 1)])
                out[v] = out.get(v, Poly.zero()) + qmono
    return {v: c for v, c in out.items() if not c.is_zero()}


def pairing(a: SchubertExpansion, b: SchubertExpansion, p: ParabolicShape) -> Poly:
    """Coefficient of sigma_{w_0^P} in a * b (the quantum Poincare pairing)."""
    prod = multiply(a, b, p)
    return prod.get(longest_in_wp(p), Poly.zero())


def quantum_euler(p: ParabolicShape) -> SchubertExpansion:
    """sum over w in W^P of sigma_w * sigma_{PD(w)}."""
    out = {}
    for w in min_coset_reps(p):
        for v, c in basis_product(w, pd(w, p), p):
            out[v] = out.get(v, Poly.zero()) + c
    return {v: c for v, c in out.items() if not c.is_zero()}


def jacobian_expansion(p: ParabolicShape) -> SchubertExpansion:
    """J_E = det(dE^{(k+1)}_i / d eps_j) reduced to the Schubert basis, with
    eps_{n_{m-1}+i} = sigma^{(m)}_i."""
    n = p.n
    nv = p.nvals
    eps = []
    for m in range(1, p.k + 2):
        for i in range(1, nv[m] - nv[m - 1] + 1):
            eps.append(svar(m, i))
    gens = [quantum_E(p.k + 1, i, p) for i in range(1, n + 1)]
    jac = [[gens[i].derivative(eps[j]) for j in range(n)] for i in range(n)]
    det = det_poly(jac)
    from .qsym import sigma_to_x_map

    det_x = det.substitute(sigma_to_x_map(p))
    return ring(p).reduce_x(det_x)


def jacobian_check(p: ParabolicShape) -> bool:
    """J_E equals the quantum Euler class in the Schubert basis."""
    return jacobian_expansion(p) == quantum_euler(p)


def conjugate_shape(lam):
    lam = [x for x in lam if x > 0]
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= i) for i in range(1, lam[0] + 1))


def giambelli_grassmannian(lam, d: int, n: int) -> Poly:
    """Kirillov's determinant det(E^{(d+j-1)}_{lam'_i + j - i}) in E-symbols.

    Valid in the full flag presentation; congruent to the quantum Schubert
    polynomial of the Grassmannian permutation w_{lam,d} modulo J.
    """
    lam = tuple(x for x in lam if x > 0)
    if len(lam) > d or (lam and lam[0] > n - d):
        raise ValueError("shape outside the %d x %d box" % (d, n - d))
    conj = conjugate_shape(lam)
    c = n - d
    conj = conj + (0,) * (c - len(conj))

    def esym(level, sub):
        if sub == 0:
            return Poly.const(1)
        if sub < 0 or sub > level:
            return Poly.zero()
        return Poly.var(evar(level, sub))

    mat = [
        [esym(d + j - 1, conj[i - 1] + j - i) for j in range(1, c + 1)]
        for i in range(1, c + 1)
    ]
    return det_poly(mat)


def structure_table(p: ParabolicShape):
    """All (u, v, w, d) -> integer Gromov-Witten structure constants."""
    reps = min_coset_reps(p)
    table = {}
    for u in reps:
        for v in reps:
            for w, cq in basis_product(u, v, p):
                for mono, coeff in cq.terms.items():
                    d = [0] * p.k
                    for var, e in mono:
                        d[var[1] - 1] = e
                    if coeff != int(coeff):
                        raise RuntimeError("non-integer structure constant")
                    table[(u, v, w, tuple(d))] = int(coeff)
    return table
