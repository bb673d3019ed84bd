"""Symmetric group combinatorics for flag varieties.

Permutations are tuples of 1-based images in one-line notation, so ``w[i-1]``
is w(i).  Products compose as functions: ``compose(u, v)(i) = u(v(i))``, and
``w * s_i`` (right multiplication by a simple reflection) swaps the entries in
positions i, i+1.  Worked example: u = (2,1,3), v = (1,3,2) gives
compose(u, v) = (2,3,1) since 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.

A ParabolicShape fixes n and the index set I^P = {n_1 < ... < n_k}; W_P is
generated by the simple reflections with indices outside I^P, and W^P is the
set of minimal length coset representatives of W/W_P, i.e. the permutations
that increase within each block (n_{j-1}, n_j].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def simple_reflection(i: int, n: int) -> Permutation:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u * v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(u)))


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for i, wi in enumerate(w):
        out[wi - 1] = i + 1
    return tuple(out)


def length(w: Permutation) -> int:
    """Number of inversions."""
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def longest_element(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def right_mul_s(w: Permutation, i: int) -> Permutation:
    """w * s_i: swap positions i, i+1 of the one-line word."""
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def word_to_perm(word, n: int) -> Permutation:
    """Product s_{i_1} * s_{i_2} * ... of the listed simple reflections."""
    w = identity(n)
    for i in word:
        w = right_mul_s(w, i)
    return w


def reduced_word(w: Permutation):
    """One reduced word for w, built by sorting from the right."""
    w = list(w)
    word = []
    n = len(w)
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                changed = True
    word.reverse()
    return tuple(word)


def descents(w: Permutation):
    return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]


@dataclass(frozen=True)
class ParabolicShape:
    """n together with I^P = {n_1 < ... < n_k} inside {1..n-1}."""

    n: int
    ip: tuple[int, ...]

    def __post_init__(self):
        ip = tuple(sorted(set(self.ip)))
        object.__setattr__(self, "ip", ip)
        if self.n < 1:
            raise ValueError("n must be positive")
        if ip and not (0 < ip[0] and ip[-1] < self.n):
            raise ValueError("ip must lie strictly between 0 and n")

    @property
    def k(self) -> int:
        return len(self.ip)

    @property
    def nvals(self) -> tuple[int, ...]:
        """(n_0, n_1, ..., n_k, n_{k+1}) = (0, n_1, ..., n_k, n)."""
        return (0,) + self.ip + (self.n,)

    def block_of(self, i: int) -> int:
        """The j with n_{j-1} < i <= n_j, in 1..k+1."""
        nv = self.nvals
        for j in range(1, len(nv)):
            if i <= nv[j]:
                return j
        raise ValueError("index out of range")

    def is_full_flag(self) -> bool:
        return self.ip == tuple(range(1, self.n))


def full_flag(n: int) -> ParabolicShape:
    return ParabolicShape(n, tuple(range(1, n)))


def in_wp(w: Permutation, p: ParabolicShape) -> bool:
    """w is a minimal coset representative iff w increases on each block."""
    nv = p.nvals
    for j in range(len(nv) - 1):
        for i in range(nv[j], nv[j + 1] - 1):
            if w[i] > w[i + 1]:
                return False
    return True


@lru_cache(maxsize=None)
def min_coset_reps(p: ParabolicShape) -> tuple[Permutation, ...]:
    """All of W^P, sorted by (length, one-line word)."""
    reps = [w for w in itertools.permutations(range(1, p.n + 1)) if in_wp(w, p)]
    return tuple(sorted(reps, key=lambda w: (length(w), w)))


def sort_into_wp(w: Permutation, p: ParabolicShape) -> Permutation:
    """Minimal representative of the coset wW_P: sort each block."""
    nv = p.nvals
    out = []
    for j in range(len(nv) - 1):
        out.extend(sorted(w[nv[j] : nv[j + 1]]))
    return tuple(out)


def longest_in_wp(p: ParabolicShape) -> Permutation:
    """w_0^P, the longest element of W^P."""
    return sort_into_wp(longest_element(p.n), p)


def pd(w: Permutation, p: ParabolicShape) -> Permutation:
    """Poincare dual index: minimal representative of w_0 w W_P."""
    if not in_wp(w, p):
        raise ValueError("pd: %r is not in W^P" % (w,))
    return sort_into_wp(compose(longest_element(p.n), w), p)


def grassmannian_shape(d: int, n: int) -> ParabolicShape:
    return ParabolicShape(n, (d,))


def shape_of_grassmannian(w: Permutation, d: int):
    """The partition of a Grassmannian permutation w in W^{P_d}.

    Defined by lambda_i = w(d+1-i) - (d+1-i), which satisfies |lambda| =
    length(w) and fits the d x (n-d) box.
    """
    n = len(w)
    if not in_wp(w, grassmannian_shape(d, n)):
        raise ValueError("not a Grassmannian permutation of descent %d" % d)
    lam = tuple(w[d - i] - (d + 1 - i) for i in range(1, d + 1))
    return tuple(x for x in lam)


def perm_of_shape(lam, d: int, n: int) -> Permutation:
    """Inverse of shape_of_grassmannian on shapes in the d x (n-d) box."""
    lam = tuple(lam) + (0,) * (d - len(lam))
    if len(lam) > d or any(x < 0 or x > n - d for x in lam) or list(lam) != sorted(lam, reverse=True):
        raise ValueError("shape does not fit the %d x %d box" % (d, n - d))
    first = sorted(lam[i - 1] + (d + 1 - i) for i in range(1, d + 1))
    rest = sorted(set(range(1, n + 1)) - set(first))
    return tuple(first + rest)


def tau(h: int, l: int, p: ParabolicShape) -> Permutation:
    """The quantum Chevalley element tau_{h,l}.

    Word: s_{n_h} s_{n_h+1} ... s_{n_{l+1}-1} followed by
    s_{n_l-1} s_{n_l-2} ... s_{n_{h-1}+1}.
    """
    if not (1 <= h <= l <= p.k):
        raise ValueError("need 1 <= h <= l <= k")
    nv = p.nvals
    word = list(range(nv[h], nv[l + 1])) + list(range(nv[l] - 1, nv[h - 1], -1))
    return word_to_perm(word, p.n)


def positive_roots(n: int):
    """Roots alpha_h + ... + alpha_l as intervals (h, l), 1 <= h <= l <= n-1."""
    return [(h, l) for h in range(1, n) for l in range(h, n)]


def reflection(h: int, l: int, n: int) -> Permutation:
    """s_alpha for alpha = alpha_h + ... + alpha_l: the transposition (h, l+1)."""
    w = list(range(1, n + 1))
    w[h - 1], w[l] = w[l], w[h - 1]
    return tuple(w)
