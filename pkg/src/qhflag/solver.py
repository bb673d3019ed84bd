"""Positive points over fixed quantum parameters, and the inverse of Delta.

For Q in the positive orthant, the multiplication operator of sigma = sum of
all Schubert classes on the fiber ring is a nonnegative indecomposable
matrix; its Perron-Frobenius eigenvector encodes the values sigma_w(p_0) of
the unique Schubert-positive point of the fiber, read off through Poincare
duality.  The special-class values then reconstruct a totally nonnegative
Toeplitz matrix, inverting the minor map Delta on the nonnegative orthant.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .poly import Poly, qvar
from .qcoh import basis_product, chevalley, multiply, ring, schubert_class
from .peterson import q_from_deltas, q_values, reconstruct, special_values
from .toeplitz import ToeplitzPoint, deltas, identity_point, is_tnn
from .weyl import ParabolicShape, length, longest_in_wp, pd, word_to_perm


class NonConvergenceError(RuntimeError):
    """Iterative solve failed to meet its tolerance within the iteration cap."""


@lru_cache(maxsize=None)
def sigma_table(p: ParabolicShape):
    """Columns of multiplication by sigma = sum of sigma_w: maps each basis
    element v to the Schubert expansion of sigma * sigma_v (q symbolic)."""
    r = ring(p)
    sigma = {w: Poly.const(1) for w in r.basis}
    return {v: multiply(sigma, schubert_class(v, p), p) for v in r.basis}


def _q_assignment(p: ParabolicShape, Q):
    Q = tuple(Q)
    if len(Q) != p.k:
        raise ValueError("need %d quantum parameters, got %d" % (p.k, len(Q)))
    if any(not (float(q) > 0) for q in Q):
        raise ValueError("quantum parameters must be strictly positive")
    return {qvar(j): Q[j - 1] for j in range(1, p.k + 1)}


def _strongly_connected(adj) -> bool:
    n = len(adj)

    def reach(start, mat):
        seen = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if mat[i][j] and j not in seen:
                    seen.add(j)
                    stack.append(j)
        return seen

    rev = [[adj[j][i] for j in range(n)] for i in range(n)]
    return len(reach(0, adj)) == n and len(reach(0, rev)) == n


def build_msigma(p: ParabolicShape, Q):
    """The matrix of multiplication by sigma on the fiber ring at Q, in the
    basis W^P (entry [w][v] = coefficient of sigma_w in sigma * sigma_v)."""
    qa = _q_assignment(p, Q)
    r = ring(p)
    index = {w: i for i, w in enumerate(r.basis)}
    size = len(r.basis)
    mat = np.zeros((size, size))
    for v, col in sigma_table(p).items():
        for w, cq in col.items():
            mat[index[w], index[v]] = float(cq.evaluate(qa))
    if (mat < 0).any():
        raise RuntimeError("negative entry in M_sigma: structure table bug")
    if not _strongly_connected((mat > 0).tolist()):
        raise RuntimeError("M_sigma support is not strongly connected")
    return mat


def chevalley_matrix(j: int, p: ParabolicShape, Q):
    """Multiplication matrix of the generator class sigma_{s_{n_j}} at Q,
    from the combinatorial Chevalley rule (independent of the sigma table)."""
    qa = _q_assignment(p, Q)
    r = ring(p)
    index = {w: i for i, w in enumerate(r.basis)}
    size = len(r.basis)
    mat = np.zeros((size, size))
    for v in r.basis:
        for w, cq in chevalley(j, v, p).items():
            mat[index[w], index[v]] = float(cq.evaluate(qa))
    return mat


@dataclass
class PFResult:
    eigenvalue: float
    vector: np.ndarray
    residual: float
    iterations: int
    history: list = field(default_factory=list)


def pf_solve(mat, tol: float = 1e-13, max_iter: int = 200_000, v0=None) -> PFResult:
    """Perron-Frobenius pair of a nonnegative indecomposable matrix by power
    iteration on M + I (the shift removes periodicity).  Returns a positive
    unit-sum vector with certificate ||Mv - lambda v||_inf < tol * lambda."""
    m = np.asarray(mat, dtype=float)
    n = m.shape[0]
    shifted = m + np.eye(n)
    v = np.full(n, 1.0 / n) if v0 is None else np.asarray(v0, dtype=float) / np.sum(v0)
    history = []
    for it in range(1, max_iter + 1):
        w = shifted @ v
        v = w / w.sum()
        mv = m @ v
        lam = float(mv.sum())  # Rayleigh quotient for unit 1-norm nonneg v
        resid = float(np.max(np.abs(mv - lam * v)))
        history.append(resid)
        if resid < tol * max(lam, 1.0):
            if (v <= 0).any():
                raise RuntimeError("PF vector has a non-positive entry")
            return PFResult(lam, v, resid, it, history)
    raise NonConvergenceError(
        "power iteration: residual %.3e after %d iterations (tol %.1e)"
        % (history[-1], max_iter, tol)
    )


@dataclass
class PositivePoint:
    p: ParabolicShape
    q: tuple
    schubert_values: dict
    point: ToeplitzPoint
    eigenvalue: float
    residual: float


def special_word(p: ParabolicShape, j: int, i: int):
    """The special-class permutation s_{n_j - i + 1} ... s_{n_j}."""
    nj = p.ip[j - 1]
    return word_to_perm(range(nj - i + 1, nj + 1), p.n)


def positive_point(p: ParabolicShape, Q, tol: float = 1e-10) -> PositivePoint:
    """The unique Schubert-positive point of the fiber over Q > 0."""
    Q = tuple(float(q) for q in Q)
    mat = build_msigma(p, Q)
    res = pf_solve(mat)
    r = ring(p)
    index = {w: i for i, w in enumerate(r.basis)}
    mu = res.vector
    # simultaneous eigenvector of every generator class, as a consistency
    # certificate independent of the sigma table
    sv_gen = {}
    for j in range(1, p.k + 1):
        mj = chevalley_matrix(j, p, Q)
        mv = mj @ mu
        lam_j = float(mv @ mu) / float(mu @ mu)
        if np.max(np.abs(mv - lam_j * mu)) > tol * max(1.0, abs(lam_j)) * np.max(mu):
            raise RuntimeError("mu is not a simultaneous eigenvector (generator %d)" % j)
        sv_gen[j] = lam_j
    # mu = sum sigma_w(p_0) sigma_PD(w), normalized so sigma_e(p_0) = 1
    anchor = mu[index[longest_in_wp(p)]]
    values = {w: float(mu[index[pd(w, p)]] / anchor) for w in r.basis}
    if any(v <= 0 for v in values.values()):
        raise RuntimeError("non-positive Schubert value at a PF point")
    for j in range(1, p.k + 1):
        wj = special_word(p, j, 1)
        if abs(values[wj] - sv_gen[j]) > tol * max(1.0, abs(sv_gen[j])):
            raise RuntimeError("generator eigenvalue disagrees with PF readout")
    coords = {
        (j, i): values[special_word(p, j, i)]
        for j in range(1, p.k + 1)
        for i in range(1, p.ip[j - 1] + 1)
    }
    x = reconstruct(coords, p)
    qx = q_values(x, p)
    for a, b in zip(qx, Q):
        if abs(float(a) - b) > 1e-8 * max(1.0, b):
            raise RuntimeError("round trip q_values mismatch: %r vs %r" % (qx, Q))
    return PositivePoint(p, Q, values, x, res.eigenvalue, res.residual)


def tnn_inverse(delta_values, tol: float = 1e-8) -> ToeplitzPoint:
    """The unique totally nonnegative Toeplitz point with the given interior
    minors (Delta_1, ..., Delta_{n-1})."""
    dv = [float(d) for d in delta_values]
    n = len(dv) + 1
    if any(d < 0 for d in dv):
        raise ValueError("Delta values must be nonnegative")
    ip = tuple(i for i, d in enumerate(dv, start=1) if d > 0)
    p = ParabolicShape(n, ip)
    if not ip:
        return identity_point(n)
    ds = (1.0,) + tuple(dv) + (1.0,)
    Q = q_from_deltas(ds, p)
    x = positive_point(p, Q, tol=min(tol, 1e-10)).point
    out = deltas(x)
    for i in range(1, n):
        if abs(out[i] - dv[i - 1]) > tol * max(1.0, dv[i - 1]):
            raise RuntimeError(
                "Delta round trip failed at %d: %r vs %r" % (i, out[i], dv[i - 1])
            )
    return x


def all_shapes(n: int):
    """Every parabolic shape with at least one marked index."""
    out = []
    for r in range(1, n):
        for ip in itertools.combinations(range(1, n), r):
            out.append(ParabolicShape(n, ip))
    return out


def _check_ring_axioms(rng, max_n):
    from .qcoh import unit

    for n in range(2, min(max_n, 4) + 1):
        for p in all_shapes(n):
            reps = ring(p).basis
            for _ in range(5):
                u, v, w = (rng.choice(reps) for _ in range(3))
                uv = multiply(schubert_class(u, p), schubert_class(v, p), p)
                vw = multiply(schubert_class(v, p), schubert_class(w, p), p)
                vu = multiply(schubert_class(v, p), schubert_class(u, p), p)
                if uv != vu:
                    return {"shape": (n, p.ip), "u": u, "v": v, "law": "commutativity"}
                if multiply(uv, schubert_class(w, p), p) != multiply(
                    schubert_class(u, p), vw, p
                ):
                    return {"shape": (n, p.ip), "u": u, "v": v, "w": w, "law": "associativity"}
                if multiply(unit(p), schubert_class(u, p), p) != schubert_class(u, p):
                    return {"shape": (n, p.ip), "u": u, "law": "unit"}
    return None


def _check_duality(rng, max_n):
    from .qcoh import pairing

    for n in range(2, min(max_n, 4) + 1):
        for p in all_shapes(n):
            reps = ring(p).basis
            pairs = (
                [(u, v) for u in reps for v in reps]
                if len(reps) <= 8
                else [(rng.choice(reps), rng.choice(reps)) for _ in range(20)]
            )
            for u, v in pairs:
                got = pairing(schubert_class(u, p), schubert_class(v, p), p)
                want = Poly.const(1) if u == pd(v, p) else Poly.zero()
                if got != want:
                    return {"shape": (n, p.ip), "u": u, "v": v, "pairing": repr(got)}
    return None


def _check_chevalley(rng, max_n):
    for n in range(2, min(max_n, 4) + 1):
        for p in all_shapes(n):
            reps = ring(p).basis
            sample = reps if len(reps) <= 8 else [rng.choice(reps) for _ in range(6)]
            for j in range(1, p.k + 1):
                gen = schubert_class(special_word(p, j, 1), p)
                for w in sample:
                    if chevalley(j, w, p) != multiply(gen, schubert_class(w, p), p):
                        return {"shape": (n, p.ip), "j": j, "w": w}
    return None


def _check_charpoly(rng, max_n):
    from .qsym import charpoly_check

    for n in range(2, min(max_n, 5) + 1):
        for p in all_shapes(n):
            for l in range(1, p.k + 2):
                if not charpoly_check(l, p):
                    return {"shape": (n, p.ip), "l": l}
    return None


def _check_jacobian(rng, max_n):
    from .qcoh import jacobian_check

    shapes = [ParabolicShape(2, (1,)), ParabolicShape(3, (1, 2)), ParabolicShape(3, (1,)), ParabolicShape(3, (2,))]
    if max_n >= 4:
        shapes += [ParabolicShape(4, (1, 2, 3)), ParabolicShape(4, (2,))]
    for p in shapes:
        if not jacobian_check(p):
            return {"shape": (p.n, p.ip)}
    return None


def _check_kostant(rng, max_n):
    from .weyl import full_flag

    for _ in range(20):
        n = rng.randrange(2, min(max_n, 5) + 1)
        x = ToeplitzPoint(n, tuple(Fraction(rng.randrange(1, 9), rng.randrange(1, 5)) for _ in range(n - 1)))
        ds = deltas(x)
        if any(d == 0 for d in ds):
            continue
        direct = tuple(ds[j - 1] * ds[j + 1] / ds[j] ** 2 for j in range(1, n))
        if q_from_deltas(ds, full_flag(n)) != direct:
            return {"n": n, "a": [str(v) for v in x.a]}
    return None


def _check_curve_q(rng, max_n):
    from .toeplitz import positive_curve
    from .weyl import grassmannian_shape

    for _ in range(10):
        n = rng.randrange(2, min(max_n, 5) + 1)
        d = rng.randrange(1, n)
        t = rng.uniform(0.5, 2.0)
        qv = q_values(positive_curve(d, n, 1.0 / t), grassmannian_shape(d, n))
        if abs(qv[0] - t**n) > 1e-10 * max(1.0, t**n):
            return {"n": n, "d": d, "t": t, "q": qv[0]}
    return None


def _check_pf_roundtrip(rng, max_n):
    for n in range(2, min(max_n, 4) + 1):
        for p in all_shapes(n):
            for _ in range(3):
                Q = tuple(rng.uniform(0.05, 10.0) for _ in range(p.k))
                pp = positive_point(p, Q)
                ok, margin = is_tnn(pp.point)
                if not ok:
                    return {"shape": (n, p.ip), "Q": Q, "margin": margin}
    return None


def _check_tnn_inverse(rng, max_n):
    for _ in range(15):
        n = rng.randrange(2, min(max_n, 5) + 1)
        dv = [rng.uniform(0.1, 5.0) if rng.random() < 0.7 else 0.0 for _ in range(n - 1)]
        x = tnn_inverse(dv)
        ok, margin = is_tnn(x)
        if not ok:
            return {"deltas": dv, "a": list(x.a), "margin": margin}
    return None


def _check_positivity_equivalence(rng, max_n):
    from .peterson import eval_all_schubert
    from .toeplitz import positive_curve, semigroup_mul, stratum

    for _ in range(10):
        n = rng.randrange(2, min(max_n, 4) + 1)
        x = positive_curve(rng.randrange(1, n), n, rng.uniform(0.5, 1.5))
        y = positive_curve(rng.randrange(1, n), n, rng.uniform(0.5, 1.5))
        z = semigroup_mul(x, y)
        p = stratum(z)
        vals = eval_all_schubert(z, p)
        bad = [w for w, v in vals.items() if not v > 0]
        if bad:
            return {"n": n, "a": list(z.a), "w": bad[0]}
    return None


CHECKS = [
    ("charpoly-identity", _check_charpoly),
    ("ring-axioms", _check_ring_axioms),
    ("poincare-duality", _check_duality),
    ("chevalley-rule", _check_chevalley),
    ("jacobian-euler", _check_jacobian),
    ("kostant-genkos", _check_kostant),
    ("curve-q-power", _check_curve_q),
    ("pf-roundtrip", _check_pf_roundtrip),
    ("tnn-inverse", _check_tnn_inverse),
    ("positivity-equivalence", _check_positivity_equivalence),
]


def verify_suite(max_n: int = 4, seed: int = 0):
    """Run every named verification check and return a machine-readable
    report with timings and counterexample payloads on failure."""
    if max_n > 6:
        raise ValueError("max_n must be at most 6")
    checks = []
    for name, fn in CHECKS:
        rng = random.Random("%d:%s" % (seed, name))
        t0 = time.perf_counter()
        try:
            counterexample = fn(rng, max_n)
            error = None
        except Exception as exc:  # failures are data, not crashes
            counterexample, error = None, "%s: %s" % (type(exc).__name__, exc)
        entry = {
            "name": name,
            "passed": counterexample is None and error is None,
            "seconds": round(time.perf_counter() - t0, 4),
        }
        if counterexample is not None:
            entry["counterexample"] = counterexample
        if error is not None:
            entry["error"] = error
        checks.append(entry)
    return {
        "max_n": max_n,
        "seed": seed,
        "checks": checks,
        "all_passed": all(c["passed"] for c in checks),
    }
