"""Hypothesis strategies and small helpers shared by the test modules."""
from fractions import Fraction

import numpy as np
from hypothesis import strategies as st

from xmatrix import XMatrix, to_dense

rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))
floats = st.floats(-10, 10, allow_nan=False, allow_infinity=False, allow_subnormal=False)


def _elements(field):
    return rationals if field == "rational" else floats


@st.composite
def xmatrices(draw, field="rational", min_n=1, max_n=12, n=None, elements=None):
    n = draw(st.integers(min_n, max_n)) if n is None else n
    el = elements if elements is not None else _elements(field)
    d = draw(st.lists(el, min_size=n, max_size=n))
    e = draw(st.lists(el, min_size=n, max_size=n))
    return XMatrix(d, e, field=field)


@st.composite
def xtuples(draw, k, field="rational", min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    return tuple(draw(xmatrices(field, n=n)) for _ in range(k))


def xpairs(field="rational", min_n=1, max_n=12):
    return xtuples(2, field, min_n, max_n)


@st.composite
def bisymmetric(draw, field="rational", min_n=1, max_n=12, n=None):
    n = draw(st.integers(min_n, max_n)) if n is None else n
    el = _elements(field)
    h = n // 2
    dh = draw(st.lists(el, min_size=h, max_size=h))
    eh = draw(st.lists(el, min_size=h, max_size=h))
    mid = draw(st.lists(el, min_size=n % 2, max_size=n % 2))
    zero = [Fraction(0) if field == "rational" else 0.0] * (n % 2)
    return XMatrix(dh + mid + dh[::-1], eh + zero + eh[::-1], field=field)


def dense(a):
    """Nested-list copy for the oracle."""
    return to_dense(a).tolist()


def random_rational(rng, n, num=9, den=5):
    def draw():
        return [Fraction(int(p), int(q)) for p, q in
                zip(rng.integers(-num, num + 1, n), rng.integers(1, den + 1, n))]
    return XMatrix(draw(), draw(), field="rational")


def random_float(rng, n, scale=10.0):
    return XMatrix(rng.uniform(-scale, scale, n), rng.uniform(-scale, scale, n))


def max_abs(m):
    return float(np.max(np.abs(np.asarray(m, dtype=complex)))) if np.size(m) else 0.0
