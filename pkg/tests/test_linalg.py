from fractions import Fraction

import math

import pytest
from hypothesis import given, strategies as st

from hermsig import linalg as la

small = st.integers(min_value=-6, max_value=6)


def int_matrix(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_rref_and_rank():
    M = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    R, piv = la.rref(M)
    assert piv == [0, 1]
    assert la.rank(M) == 2
    assert R[0] == [1, 0, 1]


def test_solve_returns_particular_solution():
    A = [[1, 1], [1, -1]]
    assert la.solve(A, [3, 1]) == (2, 1)
    assert la.solve([[1, 1], [2, 2]], [1, 3]) is None


def test_inverse_and_determinant():
    M = [[2, 1], [7, 4]]
    inv = la.inverse(M)
    assert la.mat_mul(M, inv) == [[1, 0], [0, 1]]
    assert la.determinant(M) == 1
    assert la.determinant([[1, 2], [2, 4]]) == 0


def test_dot_rejects_length_mismatch():
    with pytest.raises(ValueError):
        la.dot((1, 2), (1, 2, 3))


def test_nullspace_is_exact():
    M = [[1, 2, 3], [4, 5, 6]]
    (v,) = la.nullspace(M)
    assert la.mat_vec(M, v) == (0, 0)
    assert all(isinstance(x, Fraction) for x in v)


@given(int_matrix(3, 4))
def test_smith_normal_form(M):
    U, D, V = la.smith_normal_form(M)
    assert la.mat_mul(la.mat_mul(U, M), V) == D
    assert abs(la.determinant(U)) == 1 and abs(la.determinant(V)) == 1
    diag = [D[i][i] for i in range(3)]
    assert all(D[i][j] == 0 for i in range(3) for j in range(4) if i != j)
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else b % a == 0


@given(int_matrix(3, 3), st.lists(small, min_size=3, max_size=3))
def test_integer_solve_agrees_with_image(M, x):
    b = la.mat_vec(M, x)
    y = la.integer_solve(M, b)
    assert y is not None
    assert la.mat_vec(M, y) == b


def test_integer_solve_detects_index():
    # 2Z x Z does not contain (1, 0)
    assert la.integer_solve([[2, 0], [0, 1]], [1, 0]) is None
    assert la.integer_solve([[2, 0], [0, 1]], [Fraction(1, 2), 0]) is None
    assert not la.in_integer_span([(1, 1), (1, -1)], (1, 0))
    assert la.in_integer_span([(1, 1), (1, -1)], (2, 0))


@given(int_matrix(2, 4))
def test_integer_kernel_is_saturated(M):
    K = la.integer_kernel(M)
    assert len(K) == 4 - la.rank(M)
    for v in K:
        assert la.mat_vec(M, v) == (0, 0)
    # saturation: any integral kernel vector lies in the integer span of K
    for v in la.nullspace(M, 4):
        den = 1
        for x in v:
            den = den * x.denominator // math.gcd(den, x.denominator)
        w = tuple(int(x * den) for x in v)
        g = 0
        for x in w:
            g = math.gcd(g, x)
        w = tuple(x // g for x in w)
        assert la.in_integer_span(K, w)
