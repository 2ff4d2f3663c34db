from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from xmatrix import XMatrix, anti_identity, identity, inverse, is_invertible, oracle
from xmatrix.bisym import (BisymCertificate, bisym_eigen, common_eigenbasis, is_bisymmetric,
                           is_central)
from xmatrix.errors import NotBisymmetric
from xmatrix.spectral import eigenvalues

from strategies import bisymmetric, dense, xmatrices


def test_displayed_shapes():
    a, b, c, d = (Fraction(v) for v in (2, 3, 5, 7))
    assert is_bisymmetric(XMatrix([a, b, a], [c, 0, c])).holds
    assert is_bisymmetric(XMatrix([a, b, b, a], [c, d, d, c])).holds


def test_witness():
    cert = is_bisymmetric(XMatrix([1, 2], [0, 0]))
    assert not cert.holds and cert.witness == (1, 2) and cert.kind == "diagonal"
    cert = is_bisymmetric(XMatrix([1, 1], [0, 3]))
    assert cert.witness == (1, 2) and cert.kind == "anti-diagonal"


def test_certificate_invariant():
    with pytest.raises(ValueError):
        BisymCertificate(True, (1, 2))


def test_eigen_example():
    pairs = bisym_eigen(XMatrix([3, 3], [2, 2]))
    assert [(p.lam, p.alpha, p.beta) for p in pairs] == [(1, 1, -1), (5, 1, 1)]


def test_eigen_zero_anti():
    pairs = bisym_eigen(XMatrix([4, 4], [0, 0]))
    assert [(p.lam, p.alpha, p.beta) for p in pairs] == [(4, 1, 0), (4, 0, 1)]


def test_eigen_refuses_non_bisymmetric():
    with pytest.raises(NotBisymmetric) as info:
        bisym_eigen(XMatrix([1, 2], [0, 0]))
    assert info.value.certificate.witness == (1, 2)


def test_common_eigenbasis_small():
    assert common_eigenbasis(2).tolist() == [[1, 1], [1, -1]]
    assert common_eigenbasis(3).T.tolist() == [[1, 0, 1], [0, 1, 0], [1, 0, -1]]


def test_central_examples():
    assert is_central(XMatrix([2, 5, 2], [0, 0, 0]))
    assert is_central(identity(6))
    assert not is_central(XMatrix([1, 2], [0, 0]))
    assert not is_central(anti_identity(4))


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(bisymmetric(n=n), bisymmetric(n=n))))
def test_commutative_subring(ab):
    a, b = ab
    assert a @ b == b @ a
    for c in (a + b, a @ b, -a, identity(a.n)):
        assert is_bisymmetric(c).holds


@given(bisymmetric())
def test_inverse_closure(a):
    assume(is_invertible(a))
    assert is_bisymmetric(inverse(a)).holds


@given(bisymmetric())
def test_exact_eigen_residual(a):
    m = dense(a)
    for p in bisym_eigen(a):
        v = p.vector(a.n).tolist()
        mv = oracle.dense_mul(m, [[x] for x in v])
        assert [row[0] for row in mv] == [p.lam * x for x in v]
        assert isinstance(p.lam, Fraction)


@given(bisymmetric(max_n=10))
def test_common_basis_diagonalizes(a):
    c = common_eigenbasis(a.n).tolist()
    conj = oracle.dense_mul(oracle.dense_mul(oracle.dense_inverse(c), dense(a)), c)
    assert all(conj[i][j] == 0 for i in range(a.n) for j in range(a.n) if i != j)


@given(bisymmetric(field="float64"))
def test_agrees_with_general_eigenvalues(a):
    mine = np.sort_complex(np.array([complex(p.lam) for p in bisym_eigen(a)]))
    ref = np.sort_complex(eigenvalues(a))
    assert np.max(np.abs(mine - ref)) <= 1e-10 * (1 + np.max(np.abs(ref)))


@given(bisymmetric(field="float64"))
def test_only_real_spectrum(a):
    assert all(isinstance(p.lam, float) for p in bisym_eigen(a))


@given(st.integers(1, 10).flatmap(lambda n: st.tuples(
    st.lists(st.integers(-5, 5), min_size=(n + 1) // 2, max_size=(n + 1) // 2).map(
        lambda half, n=n: half + half[: n // 2][::-1]),
    st.lists(xmatrices(n=n), min_size=5, max_size=5))))
def test_central_commutes_with_everything(case):
    d, others = case
    z = XMatrix(d, [0] * len(d))
    assert is_central(z)
    assert all(z @ b == b @ z for b in others)


@given(xmatrices(min_n=2))
def test_non_central_has_witness(a):
    if is_central(a):
        return
    n = a.n
    witnesses = [anti_identity(n)] + [XMatrix([1 if k == i else 0 for k in range(n)], [0] * n)
                                     for i in range(n)]
    assert any(a @ w != w @ a for w in witnesses)
