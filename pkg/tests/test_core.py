from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from xmatrix import (XMatrix, anti_identity, anti_transpose, astype, decompose, diagonal,
                     from_dense, identity, power, recompose, to_dense, transpose, zeros)
from xmatrix import oracle
from xmatrix.core import block_arrays, from_block_arrays
from xmatrix.errors import DimensionError, FieldError, InvalidScalar, NotXShaped

from strategies import dense, xmatrices, xpairs, xtuples

A4 = XMatrix([1, 0, 9, 0], [2, 1, 4, 3])
A5 = XMatrix([1, 4, 6, 1, 8], [5, 3, 0, 9, 7])


def test_4x4_dense_layout():
    assert dense(A4) == [[1, 0, 0, 2], [0, 0, 1, 0], [0, 4, 9, 0], [3, 0, 0, 0]]


def test_center_is_folded_into_diagonal():
    a = XMatrix([1, 2, 3], [0, 5, 0])
    assert list(a.d) == [1, 7, 3]
    assert list(a.e) == [0, 0, 0]


def test_single_entry():
    assert dense(XMatrix([7], [0])) == [[7]]
    assert dense(XMatrix([7], [2])) == [[9]]


def test_from_dense_reads_both_diagonals():
    a = from_dense([[1, 3], [4, 2]])
    assert list(a.d) == [1, 2] and list(a.e) == [3, 4]
    assert from_dense(dense(A5)) == A5


def test_from_dense_rejects_off_pattern_entry():
    with pytest.raises(NotXShaped) as info:
        from_dense([[1, 0, 2], [0, 1, 0], [0, 5, 1]])
    assert info.value.position == (3, 2)


def test_field_inference_and_refusals():
    assert XMatrix([1, 2], [3, 4]).field == "rational"
    assert XMatrix([1.0, 2], [3, 4]).field == "float64"
    with pytest.raises(FieldError):
        XMatrix([1.5, 2], [3, 4], field="rational")
    with pytest.raises(InvalidScalar):
        XMatrix([float("nan"), 1.0], [0.0, 0.0])
    with pytest.raises(DimensionError):
        XMatrix([1, 2], [3])
    with pytest.raises(DimensionError):
        XMatrix([], [])


def test_mixed_modes_refused():
    with pytest.raises(FieldError):
        identity(2) + identity(2, "float64")


def test_rational_strings_accepted():
    a = XMatrix(["1/2", "3"], ["-4/6", 0])
    assert a.d[0] == Fraction(1, 2) and a.e[0] == Fraction(-2, 3)


def test_immutable():
    a = XMatrix([1, 2], [3, 4])
    with pytest.raises(AttributeError):
        a.foo = 1
    with pytest.raises(ValueError):
        a.d[0] = 5


def test_multiply_worked_example():
    c = XMatrix([1, 2], [3, 4]) @ XMatrix([5, 6], [7, 8])
    assert list(c.d) == [29, 40] and list(c.e) == [25, 36]


def test_add_worked_example():
    c = XMatrix([1, 2], [3, 4]) + XMatrix([5, 6], [7, 8])
    assert list(c.d) == [6, 8] and list(c.e) == [10, 12]


def test_transposes_of_5x5_example():
    t = transpose(A5)
    assert list(t.d) == [1, 4, 6, 1, 8] and list(t.e) == [7, 9, 0, 3, 5]
    at = anti_transpose(A5)
    assert list(at.d) == [8, 1, 6, 4, 1] and list(at.e) == [5, 3, 0, 9, 7]


@pytest.mark.parametrize("n", range(1, 8))
def test_anti_identity_squares_to_identity(n):
    j = anti_identity(n)
    assert j @ j == identity(n)


def test_decompose_4x4():
    bd = decompose(XMatrix([6, -5, 6, 1], [6, -8, -4, -5]))
    assert [b.entries for b in bd.blocks] == [((6, 6), (-5, 1)), ((-5, -8), (-4, 6))]
    assert bd.center is None


def test_decompose_odd():
    bd = decompose(XMatrix([1, 2, 1], [3, 0, 3]))
    assert len(bd.blocks) == 1 and bd.center == 2


def test_power_zero_is_identity():
    assert power(A4, 0) == identity(4)
    with pytest.raises(ValueError):
        power(A4, -1)


def test_astype_round_trip_is_exact():
    a = XMatrix([0.1, 2.5, -3.0], [1e-300, 0.0, 7.25])
    assert astype(astype(a, "rational"), "float64") == a


def test_diagonal_and_zeros():
    assert dense(diagonal([1, 2, 3])) == [[1, 0, 0], [0, 2, 0], [0, 0, 3]]
    assert zeros(5) + A5.anti_transpose() == anti_transpose(A5)


def test_entry_one_based():
    assert A4.entry(1, 4) == 2 and A4.entry(3, 3) == 9 and A4.entry(1, 2) == 0
    with pytest.raises(IndexError):
        A4.entry(0, 1)


@given(xmatrices())
def test_block_arrays_round_trip(a):
    p, q, r, s, c = block_arrays(a)
    assert from_block_arrays(p, q, r, s, c, a.field) == a


@given(xmatrices())
def test_decompose_recompose(a):
    assert recompose(decompose(a)) == a


@given(xmatrices())
def test_dense_round_trip(a):
    assert from_dense(to_dense(a)) == a


@given(xpairs())
def test_product_matches_oracle(ab):
    a, b = ab
    c = a @ b
    assert dense(c) == oracle.dense_mul(dense(a), dense(b))
    assert oracle.is_x_shaped(dense(c))


@given(xpairs())
def test_sum_matches_oracle(ab):
    a, b = ab
    assert dense(a + b) == oracle.dense_add(dense(a), dense(b))
    assert dense(a - b) == oracle.dense_add(dense(a), oracle.dense_scale(dense(b), -1))


@given(xmatrices(), st.integers(0, 6))
def test_power_matches_repeated_product(a, m):
    ref = oracle.dense_identity(a.n)
    for _ in range(m):
        ref = oracle.dense_mul(ref, dense(a))
    assert dense(power(a, m)) == ref


@given(xmatrices())
def test_transposes_match_oracle(a):
    assert dense(transpose(a)) == oracle.dense_transpose(dense(a))
    assert dense(anti_transpose(a)) == oracle.dense_anti_transpose(dense(a))


@given(xmatrices())
def test_anti_transpose_is_J_conjugate_transposed(a):
    j = anti_identity(a.n)
    assert anti_transpose(a) == transpose(j @ a @ j)


@given(xpairs())
def test_transpose_reverses_products(ab):
    a, b = ab
    assert transpose(a @ b) == transpose(b) @ transpose(a)
    assert anti_transpose(a @ b) == anti_transpose(b) @ anti_transpose(a)


@given(xtuples(3))
def test_ring_axioms(abc):
    a, b, c = abc
    assert (a @ b) @ c == a @ (b @ c)
    assert a @ (b + c) == a @ b + a @ c
    assert a + (-a) == zeros(a.n)


@given(xmatrices(field="float64"))
def test_float_product_close_to_numpy(a):
    np.testing.assert_allclose(to_dense(a @ a), to_dense(a) @ to_dense(a), atol=1e-9, rtol=1e-12)


@given(xmatrices())
def test_center_canonical(a):
    if a.n % 2:
        assert a.e[a.n // 2] == 0
