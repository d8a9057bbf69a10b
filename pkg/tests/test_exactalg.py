"""Exact linear algebra over Q and F_p: echelon forms, kernels, inverses."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knopf import exactalg as xa
from knopf.exactalg import FieldSpec


def test_field_identity_and_coercion(QQ):
    assert QQ.coerce("2/3") == Fraction(2, 3)
    assert QQ.one == 1 and QQ.zero == 0
    f5 = FieldSpec.prime(5)
    assert f5.coerce(7) == 2
    assert f5.inv(2) == 3
    assert f5.characteristic == 5 and QQ.characteristic == 0


def test_field_equality_and_hash():
    assert FieldSpec.prime(3) == FieldSpec.prime(3)
    assert FieldSpec.prime(3) != FieldSpec.prime(5)
    assert FieldSpec.rationals() != FieldSpec.prime(2)
    assert len({FieldSpec.prime(3), FieldSpec.prime(3)}) == 1


def test_nonprime_modulus_rejected():
    with pytest.raises(Exception):
        FieldSpec.prime(6)


def test_rref_known_instance(QQ):
    mat = QQ.asarray([[2, 4], [1, 2]])
    r, pivots = xa.rref(QQ, mat)
    assert pivots == [0]
    assert xa.arrays_equal(r[0], QQ.asarray([1, 2]))
    assert xa.is_zero(r[1])


def test_kernel_and_rank_mod_p():
    f = FieldSpec.prime(3)
    mat = f.asarray([[1, 2], [2, 4]])
    assert xa.rank(f, mat) == 1
    ker = xa.kernel_basis(f, mat)
    assert len(ker) == 1
    assert xa.is_zero(f.reduce(mat @ ker[0]))


def test_solve_and_invert(QQ):
    a = QQ.asarray([[1, 2], [3, 5]])
    rhs = QQ.asarray([1, 2])
    x = xa.solve(QQ, a, rhs)
    assert xa.arrays_equal(QQ.reduce(a @ x), rhs)
    inv = xa.invert(QQ, a)
    assert xa.arrays_equal(QQ.reduce(a @ inv), QQ.eye(2))


def test_singular_matrix_has_no_inverse(QQ):
    assert xa.invert(QQ, QQ.asarray([[1, 2], [2, 4]])) is None


def test_inconsistent_system_returns_none(QQ):
    a = QQ.asarray([[1, 1], [1, 1]])
    assert xa.solve(QQ, a, QQ.asarray([0, 1])) is None


def test_tensordot_matches_matmul(QQ):
    a = QQ.asarray([[1, 2], [3, 4]])
    b = QQ.asarray([[5, 6], [7, 8]])
    assert xa.arrays_equal(xa.tensordot(QQ, a, b, ([1], [0])),
                           xa.matmul(QQ, a, b))


def test_outer_and_kron_shapes(QQ):
    u = QQ.asarray([1, 2])
    v = QQ.asarray([3, 4, 5])
    o = xa.outer(QQ, u, v)
    assert o.shape == (2, 3) and o[1, 2] == 10
    k = xa.kron(QQ, QQ.eye(2), QQ.eye(3))
    assert xa.arrays_equal(k, QQ.eye(6))


def test_kernel_basis_pinned_values(QQ):
    f2 = FieldSpec.prime(2)
    ker = xa.kernel_basis(f2, f2.asarray([[1, 1]]))
    assert len(ker) == 1
    assert xa.arrays_equal(ker[0], f2.asarray([1, 1]))
    assert len(xa.kernel_basis(QQ, QQ.eye(2))) == 0


def test_solve_sets_free_variables_to_zero(QQ):
    x = xa.solve(QQ, QQ.asarray([[1, 1]]), QQ.asarray([1]))
    assert xa.arrays_equal(x, QQ.asarray([1, 0]))


def test_kron_scaling_and_block_expansion(QQ):
    n = QQ.asarray([[1, 2], [3, 4]])
    assert xa.arrays_equal(xa.kron(QQ, QQ.asarray([[2]]), n), QQ.reduce(2 * n))
    m = QQ.asarray([[0, 1], [1, 0]])
    expanded = QQ.asarray([
        [0, 0, 1, 2],
        [0, 0, 3, 4],
        [1, 2, 0, 0],
        [3, 4, 0, 0],
    ])
    assert xa.arrays_equal(xa.kron(QQ, m, n), expanded)


def test_rank_four_six_by_nine_kernel(QQ):
    a = QQ.asarray([
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 1, 1, 1],
        [1, 2, 3, 4],
    ])
    b = QQ.asarray([
        [1, 0, 0, 0, 1, 2, 0, 1, 1],
        [0, 1, 0, 0, 2, 0, 1, 0, 1],
        [0, 0, 1, 0, 1, 1, 1, 2, 0],
        [0, 0, 0, 1, 0, 1, 2, 1, 2],
    ])
    mat = xa.matmul(QQ, a, b)
    assert mat.shape == (6, 9)
    assert xa.rank(QQ, mat) == 4
    ker = xa.kernel_basis(QQ, mat)
    assert len(ker) == 5
    for v in ker:
        assert xa.is_zero(QQ.reduce(mat @ v))
    assert xa.rank(QQ, ker) == 5


_small_entries = st.integers(min_value=-4, max_value=4)


def _matrices(draw, field):
    rows = draw(st.integers(min_value=1, max_value=4))
    cols = draw(st.integers(min_value=1, max_value=4))
    data = draw(st.lists(
        st.lists(_small_entries, min_size=cols, max_size=cols),
        min_size=rows, max_size=rows,
    ))
    return field.asarray(data)


@st.composite
def q_matrices(draw):
    return _matrices(draw, FieldSpec.rationals())


@st.composite
def f5_matrices(draw):
    return _matrices(draw, FieldSpec.prime(5))


@given(q_matrices())
@settings(max_examples=60, deadline=None)
def test_rref_idempotent_q(mat):
    f = FieldSpec.rationals()
    r1, p1 = xa.rref(f, mat)
    r2, p2 = xa.rref(f, r1)
    assert p1 == p2
    assert xa.arrays_equal(r1, r2)


@given(f5_matrices())
@settings(max_examples=60, deadline=None)
def test_rank_nullity_mod_5(mat):
    f = FieldSpec.prime(5)
    ker = xa.kernel_basis(f, mat)
    assert xa.rank(f, mat) + len(ker) == mat.shape[1]
    for v in ker:
        assert xa.is_zero(f.reduce(mat @ v))


@given(q_matrices())
@settings(max_examples=60, deadline=None)
def test_kernel_vectors_annihilate_q(mat):
    f = FieldSpec.rationals()
    for v in xa.kernel_basis(f, mat):
        assert xa.is_zero(f.reduce(mat @ v))
