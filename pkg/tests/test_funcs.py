import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from xmatrix import XMatrix, anti_identity, identity, inverse, oracle, to_dense, zeros
from xmatrix.errors import DivergenceSuspected, FieldError, SingularMatrix
from xmatrix.funcs import cayley, evaluate_series, exp_x, poly_eval
from xmatrix.spectral import char_poly

from strategies import bisymmetric, dense, max_abs, xmatrices

small = st.floats(-2, 2, allow_nan=False, allow_subnormal=False)


def test_exp_of_swap_block():
    e = exp_x(XMatrix([0.0, 0.0], [1.0, 1.0]))
    np.testing.assert_allclose(e.d, [math.cosh(1)] * 2, rtol=1e-15)
    np.testing.assert_allclose(e.e, [math.sinh(1)] * 2, rtol=1e-15)


def test_exp_of_diagonal():
    e = exp_x(XMatrix([1.0, -2.0, 0.5], [0.0, 0.0, 0.0]))
    np.testing.assert_allclose(e.d, np.exp([1.0, -2.0, 0.5]), rtol=1e-15)
    assert not e.e.any()


def test_exp_needs_float():
    with pytest.raises(FieldError):
        exp_x(identity(2))


def test_exp_large_entries_match_eigen_decomposition():
    a = XMatrix([1.0, -3.0], [40.0, 0.5])
    w, v = np.linalg.eig(to_dense(a))
    ref = (v @ np.diag(np.exp(w)) @ np.linalg.inv(v)).real
    np.testing.assert_allclose(to_dense(exp_x(a)), ref, rtol=1e-10)


def test_series_on_zero_is_identity():
    r = evaluate_series(zeros(4, "float64"), oracle.exp_coefficients())
    assert r.converged and r.matrix == identity(4, "float64")


def test_geometric_series_is_inverse():
    f = XMatrix([0.1, -0.2, 0.15, 0.3, 0.05], [0.0] * 5)
    fj = f @ anti_identity(5, "float64")
    r = evaluate_series(fj, itertools.cycle([1.0, -1.0]), tol=1e-16, max_terms=200)
    assert r.converged
    target = inverse(identity(5, "float64") + fj)
    assert max_abs(to_dense(r.matrix - target)) <= 1e-14


def test_series_truncation_reports_terms():
    r = evaluate_series(XMatrix([0.5, 0.5], [0.0, 0.0]), itertools.repeat(1.0), max_terms=7)
    assert r.terms == 7 and not r.converged
    np.testing.assert_allclose(r.matrix.d, [sum(0.5 ** k for k in range(7))] * 2)


def test_series_divergence():
    with pytest.raises(DivergenceSuspected):
        evaluate_series(XMatrix([3.0, 3.0], [0.0, 0.0]), itertools.repeat(1.0), max_terms=500)


def test_cayley_basics():
    assert cayley(zeros(3)) == identity(3)
    assert cayley(identity(4)) == zeros(4)


def test_cayley_singular_names_block():
    with pytest.raises(SingularMatrix) as info:
        cayley(XMatrix([1, -1, 2, 1], [0, 0, 0, 0]))
    assert info.value.block == 2
    with pytest.raises(SingularMatrix) as info:
        cayley(XMatrix([0, -1, 0], [0, 0, 0]))
    assert info.value.block == "center"


def test_poly_eval_examples():
    a = XMatrix([1, 2], [3, 4])
    assert poly_eval(a, [0, 1]) == a
    assert poly_eval(a, [0, 0, 1]) == a @ a
    assert poly_eval(a, char_poly(a)) == zeros(2)


@given(xmatrices(max_n=8))
def test_cayley_hamilton_exact(a):
    assert poly_eval(a, char_poly(a)) == zeros(a.n)


@given(xmatrices(max_n=6), st.lists(st.integers(-3, 3), min_size=1, max_size=5))
def test_poly_eval_matches_oracle(a, coeffs):
    assert dense(poly_eval(a, coeffs)) == oracle.dense_polyval(coeffs, dense(a))


@given(xmatrices(field="float64", max_n=8, elements=small))
def test_exp_matches_dense_series(a):
    ref = np.array(oracle.dense_exp(dense(a)))
    assert max_abs(to_dense(exp_x(a)) - ref) <= 1e-10


@given(xmatrices(field="float64", max_n=8, elements=small))
def test_series_matches_dense_series(a):
    got = evaluate_series(a, oracle.exp_coefficients()).matrix
    ref = np.array(oracle.dense_series(dense(a), oracle.exp_coefficients()))
    assert max_abs(to_dense(got) - ref) <= 1e-10


@given(xmatrices(field="float64", max_n=8, elements=small))
def test_cayley_involution(a):
    try:
        b = cayley(a)
        back = cayley(b)
    except SingularMatrix:
        return
    if max_abs(to_dense(b)) > 1e6:
        return  # I + A nearly singular; the round trip loses all digits
    assert max_abs(to_dense(back - a)) <= 1e-8 * (1 + max_abs(to_dense(b)))


@given(xmatrices(field="float64", max_n=8, elements=small))
def test_cayley_matches_dense_solve(a):
    m = to_dense(a)
    eye = np.eye(a.n)
    if np.linalg.cond(eye + m) > 1e8:
        return
    ref = (eye - m) @ np.linalg.inv(eye + m)
    assert max_abs(to_dense(cayley(a)) - ref) <= 1e-10 * np.linalg.cond(eye + m)


@given(st.integers(1, 10).flatmap(lambda n: st.tuples(
    bisymmetric("float64", n=n), bisymmetric("float64", n=n))))
def test_exp_additive_on_commuting_pairs(ab):
    a, b = (XMatrix(np.clip(x.d, -2, 2), np.clip(x.e, -2, 2)) for x in ab)
    lhs = to_dense(exp_x(a) @ exp_x(b))
    rhs = to_dense(exp_x(a + b))
    assert max_abs(lhs - rhs) <= 1e-8 * max(1.0, max_abs(rhs))
