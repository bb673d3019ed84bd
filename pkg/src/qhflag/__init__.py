"""qhflag: quantum cohomology rings qH*(GL_n/P) in the Schubert basis, and
the totally nonnegative Toeplitz matrices they parameterize.

The main entry points:

- :mod:`qhflag.qcoh` — Schubert-basis arithmetic, Chevalley rule, structure
  tables, quantum Euler class;
- :mod:`qhflag.toeplitz` — Toeplitz points, corner minors Delta_m, strata,
  total nonnegativity;
- :mod:`qhflag.peterson` — evaluation of Schubert classes at points and the
  section/reconstruction bridge between the two sides;
- :mod:`qhflag.solver` — Perron-Frobenius fiber solves and the inverse of
  Delta on the nonnegative orthant.
"""

__version__ = "0.1.0"
