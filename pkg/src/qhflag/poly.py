"""Exact sparse multivariate polynomials over the rationals.

Variables come in indexed families:

* ``x_i``          -- Chern roots / Borel generators (one index),
* ``sigma^{(j)}_i``-- Chern classes of the tautological quotients (two indices),
* ``q_j``          -- quantum parameters (one index),
* ``lambda``       -- a single formal eigenvalue variable,
* ``E^{(j)}_i``    -- formal quantum-elementary symbols (two indices).

Internally a variable is a triple ``(family_rank, idx1, idx2)`` so plain tuple
comparison gives the canonical variable order x < sigma < q < lambda < E.  A
monomial is a sorted tuple of ``(variable, exponent)`` pairs; polynomials map
monomials to nonzero exact coefficients (int or Fraction -- integers are kept
as ints so the hot paths stay in machine arithmetic).
"""

from __future__ import annotations

from fractions import Fraction

_FAMILIES = ("x", "sigma", "q", "lambda", "E")
_RANK = {name: i for i, name in enumerate(_FAMILIES)}

Scalar = int | float | Fraction


def xvar(i: int):
    return (0, i, 0)


def svar(j: int, i: int):
    """sigma^{(j)}_i"""
    return (1, j, i)


def qvar(j: int):
    return (2, j, 0)


def lamvar():
    return (3, 0, 0)


def evar(j: int, i: int):
    """Formal symbol E^{(j)}_i."""
    return (4, j, i)


def var_name(v) -> str:
    rank, a, b = v
    fam = _FAMILIES[rank]
    if fam == "x":
        return "x_%d" % a
    if fam == "sigma":
        return "sigma^(%d)_%d" % (a, b)
    if fam == "q":
        return "q_%d" % a
    if fam == "lambda":
        return "lambda"
    return "E^(%d)_%d" % (a, b)


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _mul_mono(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    out = dict(m1)
    for v, e in m2:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items()))


class Poly:
    """Immutable-by-convention sparse polynomial with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly({})

    @staticmethod
    def const(c) -> "Poly":
        c = _norm_coeff(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
        return Poly({(): c} if c else {})

    @staticmethod
    def var(v, exp: int = 1) -> "Poly":
        if exp == 0:
            return Poly.const(1)
        return Poly({((v, exp),): 1})

    @staticmethod
    def monomial(pairs, coeff=1) -> "Poly":
        mono = tuple(sorted((v, e) for v, e in pairs if e))
        coeff = _norm_coeff(coeff)
        return Poly({mono: coeff} if coeff else {})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        return self.terms.get((), 0)

    def variables(self):
        seen = set()
        for m in self.terms:
            for v, _ in m:
                seen.add(v)
        return seen

    def total_degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mul_mono(m1, m2)
                c = c1 * c2
                s = out.get(m)
                if s is None:
                    out[m] = c
                else:
                    s = s + c
                    if s:
                        out[m] = s
                    else:
                        del out[m]
        return Poly(out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        if not isinstance(c, (int, Fraction)):
            c = Fraction(c)
        c = _norm_coeff(c)
        if not c:
            return Poly.zero()
        return Poly({m: _norm_coeff(t * c) for m, t in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            factors = [] if c != 1 or not m else []
            if c != 1 or not m:
                factors.append(str(c))
            for v, e in m:
                factors.append(var_name(v) + ("^%d" % e if e > 1 else ""))
            parts.append("*".join(factors))
        return " + ".join(parts)

    # -- substitution / evaluation ----------------------------------------

    def substitute(self, mapping) -> "Poly":
        """Replace variables by polynomials or scalars; others untouched."""
        out = Poly.zero()
        for m, c in self.terms.items():
            term = Poly.const(c)
            plain = []
            for v, e in m:
                if v in mapping:
                    repl = mapping[v]
                    if not isinstance(repl, Poly):
                        repl = Poly.const(repl)
                    term = term * repl**e
                else:
                    plain.append((v, e))
            if plain:
                term = term * Poly({tuple(plain): 1})
            out = out + term
        return out

    def evaluate(self, assignment):
        """Full numeric evaluation.  Exact if all values are int/Fraction."""
        total = None
        for m, c in self.terms.items():
            val = c
            for v, e in m:
                if v not in assignment:
                    raise KeyError("no value for variable %s" % var_name(v))
                val = val * assignment[v] ** e
            total = val if total is None else total + val
        return 0 if total is None else total

    def derivative(self, v) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            for idx, (w, e) in enumerate(m):
                if w == v:
                    rest = m[:idx] + ((w, e - 1),) + m[idx + 1 :] if e > 1 else m[:idx] + m[idx + 1 :]
                    cc = c * e
                    s = out.get(rest)
                    out[rest] = cc if s is None else s + cc
                    break
        return Poly({m: c for m, c in out.items() if c})

    # -- serialization -----------------------------------------------------

    def to_json(self):
        items = []
        for m, c in sorted(self.terms.items()):
            mono = []
            for v, e in m:
                rank, a, b = v
                fam = _FAMILIES[rank]
                if fam == "x" or fam == "q":
                    mono.append([fam, a, e])
                elif fam == "lambda":
                    mono.append([fam, e])
                else:
                    mono.append([fam, a, b, e])
            items.append({"coeff": str(Fraction(c)), "monomial": mono})
        return items

    @staticmethod
    def from_json(items) -> "Poly":
        out = Poly.zero()
        for item in items:
            pairs = []
            for entry in item["monomial"]:
                fam = entry[0]
                if fam == "x":
                    pairs.append((xvar(entry[1]), entry[2]))
                elif fam == "q":
                    pairs.append((qvar(entry[1]), entry[2]))
                elif fam == "lambda":
                    pairs.append((lamvar(), entry[1]))
                elif fam == "sigma":
                    pairs.append((svar(entry[1], entry[2]), entry[3]))
                elif fam == "E":
                    pairs.append((evar(entry[1], entry[2]), entry[3]))
                else:
                    raise ValueError("unknown variable family %r" % fam)
            out = out + Poly.monomial(pairs, Fraction(item["coeff"]))
        return out


ZERO = Poly.zero()
ONE = Poly.const(1)


def swap_x(f: Poly, i: int) -> Poly:
    """Apply the transposition x_i <-> x_{i+1} to f."""
    vi, vj = xvar(i), xvar(i + 1)
    out = {}
    for m, c in f.terms.items():
        pairs = [((vj if v == vi else vi) if v in (vi, vj) else v, e) for v, e in m]
        out[tuple(sorted(pairs))] = c
    return Poly(out)


def divided_difference(f: Poly, i: int) -> Poly:
    """(f - s_i f) / (x_i - x_{i+1}); the division is always exact.

    Works monomial by monomial via the telescoping identity
    (x^a y^b - x^b y^a)/(x - y) = sign * sum of x^c y^d over c+d = a+b-1
    with min(a,b) <= c,d < max(a,b).
    """
    vi, vj = xvar(i), xvar(i + 1)
    out = Poly.zero()
    for m, c in f.terms.items():
        a = b = 0
        rest = []
        for v, e in m:
            if v == vi:
                a = e
            elif v == vj:
                b = e
            else:
                rest.append((v, e))
        if a == b:
            continue
        sign = 1 if a > b else -1
        lo, hi = min(a, b), max(a, b)
        for t in range(lo, hi):
            pairs = list(rest)
            if t:
                pairs.append((vi, t))
            u = a + b - 1 - t
            if u:
                pairs.append((vj, u))
            out = out + Poly.monomial(pairs, sign * c)
    return out
