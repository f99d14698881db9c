import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hochschild.errors import InvariantBreach, RingError, ShapeError
from hochschild.linalg import (
    Matrix,
    determinant,
    hermite_normal_form,
    kernel_basis,
    kronecker,
    lattice_coordinates,
    rank,
    smith_normal_form,
)
from hochschild.rings import QQ, ZZ, zmod


def M(rows, ring=ZZ):
    return Matrix.from_rows(ring, rows)


@st.composite
def int_matrices(draw, max_dim=5, bound=9, rows=None, cols=None):
    r = rows or draw(st.integers(1, max_dim))
    c = cols or draw(st.integers(1, max_dim))
    e = draw(st.lists(st.integers(-bound, bound), min_size=r * c, max_size=r * c))
    return Matrix(ZZ, r, c, e)


def test_product_examples():
    A = M([[1, 2, 3], [4, 5, 6]])
    assert Matrix.identity(ZZ, 2) @ A == A
    assert M([[1, 2], [3, 4]]) @ M([[0, 1], [1, 0]]) == M([[2, 1], [4, 3]])
    assert Matrix.zeros(ZZ, 2, 0) @ Matrix.zeros(ZZ, 0, 3) == Matrix.zeros(ZZ, 2, 3)
    with pytest.raises(ShapeError):
        A @ A


def test_ring_mismatch():
    with pytest.raises(RingError):
        M([[1]]) @ M([[1]], QQ)


def test_kronecker_examples():
    B = M([[1, 2], [3, 4]])
    assert kronecker(Matrix.identity(ZZ, 2), B) == M(
        [[1, 2, 0, 0], [3, 4, 0, 0], [0, 0, 1, 2], [0, 0, 3, 4]])
    assert kronecker(M([[2]]), M([[3]])) == M([[6]])


@given(int_matrices(3, rows=2, cols=3), int_matrices(3, rows=3, cols=2),
       int_matrices(3, rows=2, cols=2), int_matrices(3, rows=2, cols=1))
def test_kronecker_mixed_product(a, c, b, d):
    assert kronecker(a, b) @ kronecker(c, d) == kronecker(a @ c, b @ d)


def test_kernel_examples():
    K = kernel_basis(M([[1, 1]], QQ))
    assert K.columns() == [[1, -1]]
    assert kernel_basis(Matrix.identity(QQ, 4)).cols == 0
    K = kernel_basis(M([[2, 4]]))
    assert K.columns() in ([[2, -1]], [[-2, 1]])


def test_integer_kernel_generates_all_small_solutions():
    # brute force: every integer solution in a box is an integer combination
    A = M([[2, 4, 6], [0, 3, 9]])
    K = kernel_basis(A)
    sols = [v for v in product(range(-12, 13), repeat=3)
            if all(sum(a * x for a, x in zip(row, v)) == 0 for row in A.to_rows())]
    assert len(sols) > 1
    coords = lattice_coordinates(K, Matrix.from_columns(ZZ, sols, 3))
    assert all(type(x) is int for x in coords.entries)


def test_lattice_coordinates_rejects_outside():
    K = Matrix.from_columns(ZZ, [[2, 0]], 2)
    with pytest.raises(InvariantBreach):
        lattice_coordinates(K, Matrix.from_columns(ZZ, [[1, 0]], 2))


@settings(max_examples=60)
@given(int_matrices())
def test_kernel_properties(A):
    for ring in (ZZ, QQ):
        B = Matrix(ring, A.rows, A.cols, A.entries)
        K = kernel_basis(B)
        assert (B @ K).is_zero()
        assert rank(B) + K.cols == B.cols
        if K.cols:
            assert rank(K) == K.cols


def test_rank_examples():
    assert rank(Matrix.identity(QQ, 5)) == 5
    assert rank(M([[1, 2], [2, 4]])) == 1
    assert rank(M([[1, 1], [1, -1]], zmod(2))) == 1
    with pytest.raises(RingError):
        rank(M([[2]], zmod(4)))


def test_rank_matches_snf_on_prime_matrix():
    A = M([[2, 3, 5, 7], [11, 13, 17, 19], [23, 29, 31, 37], [41, 43, 47, 53]])
    assert rank(A) == smith_normal_form(A).rank


def test_rank_over_rationals_with_fractions():
    A = M([[Fraction(1, 2), 1], [1, 2]], QQ)
    assert rank(A) == 1


def test_snf_examples():
    r = smith_normal_form(Matrix.identity(ZZ, 2))
    assert r.D == Matrix.identity(ZZ, 2)
    assert list(r.invariant_factors) == [1, 1]
    r = smith_normal_form(M([[2, 4], [6, 8]]))
    assert list(r.invariant_factors) == [2, 4]
    r = smith_normal_form(Matrix.zeros(ZZ, 2, 3))
    assert r.D == Matrix.zeros(ZZ, 2, 3) and r.rank == 0


def _check_snf(A):
    r = smith_normal_form(A)
    assert r.U @ A @ r.V == r.D
    assert abs(determinant(r.U)) == 1 and abs(determinant(r.V)) == 1
    f = list(r.invariant_factors)
    assert all(x > 0 for x in f)
    assert all(f[i + 1] % f[i] == 0 for i in range(len(f) - 1))
    off = [r.D[i, j] for i in range(r.D.rows) for j in range(r.D.cols) if i != j]
    assert not any(off)
    assert r.rank == rank(Matrix(QQ, A.rows, A.cols, A.entries))


@settings(max_examples=80)
@given(int_matrices(6))
def test_snf_properties(A):
    _check_snf(A)


def test_snf_against_sympy():
    from sympy import ZZ as SZZ
    from sympy.polys.matrices import DomainMatrix
    from sympy.polys.matrices.normalforms import invariant_factors
    rng = random.Random(7)
    for _ in range(40):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-6, 6) for _ in range(c)] for _ in range(r)]
        ours = list(smith_normal_form(M(rows)).invariant_factors)
        theirs = [abs(int(x)) for x in invariant_factors(DomainMatrix.from_list(rows, SZZ))]
        assert ours == [x for x in theirs if x]


def test_hnf_is_canonical():
    A = M([[2, 4, 6], [1, 1, 1]])
    U = M([[1, 1], [0, 1]])
    assert hermite_normal_form(A) == hermite_normal_form(U @ A)


def test_determinant():
    assert determinant(M([[1, 2], [3, 4]])) == -2
    assert determinant(M([[Fraction(1, 2), 0], [0, 4]], QQ)) == 2
