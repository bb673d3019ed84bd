from fractions import Fraction

import pytest

from qhflag.linalg import (
    charpoly_coeffs,
    det_fraction,
    det_poly,
    invert_fraction,
    matmul,
    solve_fraction,
    submatrix_det,
)
from qhflag.poly import Poly, lamvar, xvar


def test_det_poly_matches_scalar():
    mat = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    assert det_poly(mat).constant_value() == det_fraction(mat) == 18


def test_det_poly_symbolic():
    x1, x2 = Poly.var(xvar(1)), Poly.var(xvar(2))
    mat = [[x1, Poly.const(1)], [Poly.const(1), x2]]
    assert det_poly(mat) == x1 * x2 - Poly.const(1)


def test_det_poly_alternating():
    x = [Poly.var(xvar(i)) for i in (1, 2, 3)]
    mat = [x, x, [Poly.const(i) for i in range(3)]]
    assert det_poly(mat).is_zero()


def test_charpoly_coeffs_companion():
    # companion matrix of t^2 - 5t + 6
    mat = [[0, -6], [1, 5]]
    cp = charpoly_coeffs(mat, lamvar())
    lam = Poly.var(lamvar())
    assert cp == lam * lam - lam.scale(5) + Poly.const(6)


def test_solve_and_invert_fraction():
    mat = [[2, 1], [1, 1]]
    sol = solve_fraction(mat, [3, 2])
    assert sol == [Fraction(1), Fraction(1)]
    inv = invert_fraction(mat)
    assert matmul(mat, inv) == [[1, 0], [0, 1]]
    with pytest.raises(ValueError):
        solve_fraction([[1, 2], [2, 4]], [1, 1])


def test_det_fraction_singular():
    assert det_fraction([[1, 2], [2, 4]]) == 0


def test_submatrix_det():
    mat = [[1, 2, 3], [4, 5, 6], [7, 8, 10]]
    assert submatrix_det(mat, [1, 2], [2, 3], exact=True) == 2 * 6 - 3 * 5
    assert submatrix_det(mat, [], [], exact=True) == 1
    approx = submatrix_det(mat, [1, 3], [1, 3], exact=False)
    assert abs(approx - (10 - 21)) < 1e-9
