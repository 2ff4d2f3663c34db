from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from xmatrix import XMatrix, to_dense
from xmatrix.companion import (Layout, RealFactorization, companion_from_poly, durand_kerner,
                               real_factorize, x_companion)
from xmatrix.errors import NonConvergence
from xmatrix.spectral import MonicPoly, char_poly

CUBE_ROOT_2 = 2 ** (1 / 3)


def test_cube_root_two_factorization():
    fac = real_factorize(MonicPoly((-2.0, 0.0, 0.0)))
    assert fac.linear_roots == pytest.approx((CUBE_ROOT_2,), abs=1e-9)
    (beta, gamma), = fac.quadratics
    assert beta == pytest.approx(CUBE_ROOT_2, abs=1e-9)
    assert gamma == pytest.approx(CUBE_ROOT_2 ** 2, abs=1e-9)


def test_cube_root_two_companion():
    a = companion_from_poly(MonicPoly((-2.0, 0.0, 0.0)))
    c, c2 = CUBE_ROOT_2, CUBE_ROOT_2 ** 2
    np.testing.assert_allclose(to_dense(a), [[0, 0, -c2], [0, c, 0], [1, 0, -c]], atol=1e-9)
    np.testing.assert_allclose(char_poly(a).coeffs, (-2, 0, 0), atol=1e-9)


def test_durand_kerner_simple():
    roots, _ = durand_kerner([6.0, -5.0])
    np.testing.assert_allclose(sorted(roots.real), [2, 3], atol=1e-12)


def test_durand_kerner_gives_up():
    with pytest.raises(NonConvergence):
        durand_kerner([1.0, 0, 0, 0, 0, 0, 0, 0], max_sweeps=1)


def test_double_root_is_still_real_enough():
    fac = real_factorize(MonicPoly((1.0, -2.0)))
    np.testing.assert_allclose(fac.expand().coeffs, (1, -2), atol=1e-7)


@pytest.mark.parametrize("layout", list(Layout))
def test_exact_factors_round_trip(layout):
    fac = RealFactorization((Fraction(-1), Fraction(2), Fraction(1, 2)), ((Fraction(1), Fraction(3)),))
    a = x_companion(fac, layout)
    assert a.field == "rational"
    assert char_poly(a) == fac.expand()


def test_theorem_layout_puts_linear_roots_on_diagonal():
    fac = RealFactorization((1, 2, 3, 4), ())
    a = x_companion(fac, Layout.THEOREM)
    assert list(a.e) == [0, 0, 0, 0]
    assert sorted(a.d) == [1, 2, 3, 4]


def test_constant_left_layout_left_half():
    a = x_companion(RealFactorization((1, 2, 3, 4), ()), Layout.CONSTANT_LEFT)
    m = to_dense(a)
    assert (m[:, :2] == [[0, 0], [0, 0], [0, 1], [1, 0]]).all()


def test_odd_degree_middle_root_in_center():
    a = x_companion(RealFactorization((1, 5, 9), ()), Layout.THEOREM)
    assert a.d[1] == 5


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=10))
def test_float_round_trip(coeffs):
    f = MonicPoly(tuple(float(c) for c in coeffs))
    for layout in Layout:
        got = char_poly(companion_from_poly(f, layout)).coeffs
        assert np.max(np.abs(np.subtract(got, f.coeffs))) <= 1e-7


@given(st.lists(st.integers(-4, 4), max_size=5), st.lists(st.tuples(st.integers(-4, 4), st.integers(1, 6)), max_size=3))
def test_exact_round_trip_property(lin, quads):
    if not lin and not quads:
        return
    fac = RealFactorization(tuple(Fraction(x) for x in lin),
                            tuple((Fraction(b), Fraction(g)) for b, g in quads))
    for layout in Layout:
        assert char_poly(x_companion(fac, layout)) == fac.expand()
