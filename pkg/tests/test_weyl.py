import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhflag.weyl import (
    ParabolicShape,
    compose,
    descents,
    full_flag,
    grassmannian_shape,
    identity,
    in_wp,
    inverse,
    length,
    longest_element,
    longest_in_wp,
    min_coset_reps,
    pd,
    perm_of_shape,
    positive_roots,
    reduced_word,
    reflection,
    right_mul_s,
    shape_of_grassmannian,
    simple_reflection,
    sort_into_wp,
    tau,
    word_to_perm,
)

perms = st.permutations([1, 2, 3, 4]).map(tuple)


def test_compose_convention():
    u, v = (2, 1, 3), (1, 3, 2)
    assert compose(u, v) == (2, 3, 1)  # (u*v)(i) = u(v(i))


def test_identity_inverse_length():
    assert identity(4) == (1, 2, 3, 4)
    assert length(identity(5)) == 0
    assert length(longest_element(4)) == 6
    w = (3, 1, 4, 2)
    assert compose(w, inverse(w)) == identity(4)
    assert length(w) == length(inverse(w))


def test_right_mul_s_is_position_swap():
    w = (3, 1, 4, 2)
    assert right_mul_s(w, 2) == (3, 4, 1, 2)
    assert right_mul_s(w, 2) == compose(w, simple_reflection(2, 4))


@settings(max_examples=50, deadline=None)
@given(perms)
def test_reduced_word_round_trip(w):
    word = reduced_word(w)
    assert len(word) == length(w)
    assert word_to_perm(word, 4) == w


@settings(max_examples=50, deadline=None)
@given(perms, perms)
def test_length_subadditive(u, v):
    assert length(compose(u, v)) <= length(u) + length(v)
    assert (length(compose(u, v)) - length(u) - length(v)) % 2 == 0


def test_descents():
    assert descents((2, 1, 3)) == [1]
    assert descents((1, 3, 2)) == [2]
    assert descents(longest_element(4)) == [1, 2, 3]


def test_parabolic_shape_validation():
    p = ParabolicShape(5, (3, 1))
    assert p.ip == (1, 3)
    assert p.nvals == (0, 1, 3, 5)
    assert p.block_of(1) == 1 and p.block_of(2) == 2 and p.block_of(5) == 3
    with pytest.raises(ValueError):
        ParabolicShape(3, (0,))
    with pytest.raises(ValueError):
        ParabolicShape(3, (3,))
    assert full_flag(4).is_full_flag()


def test_min_coset_reps_counts():
    # |W^P| is the multinomial coefficient over block sizes
    for n in range(2, 6):
        for r in range(1, n):
            for ip in itertools.combinations(range(1, n), r):
                p = ParabolicShape(n, ip)
                nv = p.nvals
                expect = math.factorial(n)
                for j in range(1, len(nv)):
                    expect //= math.factorial(nv[j] - nv[j - 1])
                assert len(min_coset_reps(p)) == expect


def test_sort_into_wp_and_pd():
    p = ParabolicShape(4, (2,))
    assert sort_into_wp((3, 1, 4, 2), p) == (1, 3, 2, 4)
    for w in min_coset_reps(p):
        assert in_wp(w, p)
        assert pd(pd(w, p), p) == w
        assert length(pd(w, p)) == length(longest_in_wp(p)) - length(w)
    with pytest.raises(ValueError):
        pd((2, 1, 3, 4), p)  # not in W^P


def test_longest_in_wp():
    assert longest_in_wp(full_flag(3)) == (3, 2, 1)
    assert longest_in_wp(ParabolicShape(4, (2,))) == (3, 4, 1, 2)


def test_grassmannian_bijection():
    for n in (3, 4, 5):
        for d in range(1, n):
            p = grassmannian_shape(d, n)
            seen = set()
            for w in min_coset_reps(p):
                lam = shape_of_grassmannian(w, d)
                assert sum(lam) == length(w)
                assert list(lam) == sorted(lam, reverse=True)
                assert all(0 <= x <= n - d for x in lam)
                assert perm_of_shape(lam, d, n) == w
                seen.add(lam)
            assert len(seen) == len(min_coset_reps(p))


def test_tau_elements():
    p = full_flag(3)
    assert tau(1, 1, p) == (2, 1, 3)
    assert tau(2, 2, p) == (1, 3, 2)
    # tau_{h,l} for the full interval: word s_1 s_2 then s_1
    t = tau(1, 2, p)
    assert t == word_to_perm((1, 2, 1), 3) == (3, 2, 1)
    with pytest.raises(ValueError):
        tau(2, 1, p)


def test_positive_roots_and_reflections():
    assert len(positive_roots(4)) == 6
    assert reflection(1, 2, 4) == (3, 2, 1, 4)  # transposition (1,3)
    for h, l in positive_roots(4):
        r = reflection(h, l, 4)
        assert compose(r, r) == identity(4)
        assert length(r) == 2 * (l - h) + 1
