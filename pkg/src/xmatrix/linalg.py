"""Determinant, invertibility and three inverse algorithms for X-matrices."""
from __future__ import annotations

from enum import Enum

import numpy as np

from .core import (FLOAT, XMatrix, block_arrays, diagonal, from_block_arrays,
                   full, multiply, one, zero, anti_identity)
from .errors import MethodPreconditionViolated, SingularMatrix

# relative threshold under which a float block determinant counts as zero
SINGULAR_EPS = 1e-12


class InverseMethod(Enum):
    BLOCKWISE = "block"
    DIAGONAL_SPLIT = "dsplit"
    ANTI_DIAGONAL_SPLIT = "esplit"


def block_determinants(a: XMatrix) -> np.ndarray:
    """delta_i = d_i d_{n-i+1} - e_i e_{n-i+1} for each pair block."""
    p, q, r, s, _ = block_arrays(a)
    return p * s - q * r


def determinant(a: XMatrix):
    """Product of the block determinants, times the center for odd n. O(n)."""
    deltas = block_determinants(a)
    _, _, _, _, center = block_arrays(a)
    if a.field == FLOAT:
        det = float(np.prod(deltas)) if len(deltas) else 1.0
    else:
        det = one(a.field)
        for x in deltas:
            det *= x
    if center is not None:
        det = det * center
    return det


def _singular_blocks(a: XMatrix) -> np.ndarray:
    p, q, r, s, _ = block_arrays(a)
    ps, qr = p * s, q * r
    delta = ps - qr
    if a.field == FLOAT:
        return np.abs(delta) <= SINGULAR_EPS * (np.abs(ps) + np.abs(qr))
    return np.array([x == 0 for x in delta], dtype=bool)


def singular_block(a: XMatrix):
    """1-based index of the first singular block, ``"center"``, or None."""
    bad = np.flatnonzero(_singular_blocks(a))
    if len(bad):
        return int(bad[0]) + 1
    center = block_arrays(a)[4]
    if center is not None and center == 0:
        return "center"
    return None


def is_invertible(a: XMatrix) -> bool:
    """Every block determinant nonzero and, for odd n, a nonzero center.

    Float mode treats a block as singular when
    ``|delta_i| <= 1e-12 * (|d_i d_{n-i+1}| + |e_i e_{n-i+1}|)``.
    """
    return singular_block(a) is None


def _require_invertible(a: XMatrix):
    bad = singular_block(a)
    if bad == "center":
        raise SingularMatrix("center entry is zero", block="center")
    if bad is not None:
        i = bad
        raise SingularMatrix(f"pair block ({i}, {a.n - i + 1}) is singular", block=i)


def _inverse_blockwise(a: XMatrix) -> XMatrix:
    p, q, r, s, center = block_arrays(a)
    delta = p * s - q * r
    inv_c = None if center is None else one(a.field) / center
    return from_block_arrays(s / delta, -q / delta, -r / delta, p / delta, inv_c, a.field)


def _diag_recip(values: np.ndarray, field: str) -> XMatrix:
    return diagonal(one(field) / values, field)


def _inverse_diagonal_split(a: XMatrix) -> XMatrix:
    # A = D + EJ, F = E D^-1:  A^-1 = (I - F F^⊺)^-1 (I - FJ) D^-1
    d, e, field = a.d, a.e, a.field
    zero_at = np.flatnonzero(np.array([x == 0 for x in d.tolist()], dtype=bool))
    if len(zero_at):
        i = int(zero_at[0]) + 1
        raise MethodPreconditionViolated(
            f"diagonal split needs every d_i != 0, but d_{i} = 0", index=i)
    f = e / d
    i_minus_fj = XMatrix._wrap(full(a.n, 1, field), -f)
    left = _diag_recip(one(field) - f * f[::-1], field)
    return multiply(multiply(left, i_minus_fj), _diag_recip(d, field))


def _inverse_anti_diagonal_split(a: XMatrix) -> XMatrix:
    # A = D + EJ with the odd-n center moved into E, G = D E^-1:
    #   A = E (I + GJ) J  =>  A^-1 = J (I - G G^⊺)^-1 (I - GJ) E^-1
    field, n = a.field, a.n
    dd, ee = a.d.copy(), a.e.copy()
    if n % 2:
        c = n // 2
        ee[c], dd[c] = dd[c], zero(field)
    zero_at = np.flatnonzero(np.array([x == 0 for x in ee.tolist()], dtype=bool))
    if len(zero_at):
        i = int(zero_at[0]) + 1
        raise MethodPreconditionViolated(
            f"anti-diagonal split needs every e_i != 0, but e_{i} = 0", index=i)
    g = dd / ee
    # I - GJ; at the odd center g_c = 0 so this stays canonical
    i_minus_gj = XMatrix._wrap(full(n, 1, field), -g)
    left = _diag_recip(one(field) - g * g[::-1], field)
    j = anti_identity(n, field)
    return multiply(multiply(multiply(j, left), i_minus_gj), _diag_recip(ee, field))


_METHODS = {
    InverseMethod.BLOCKWISE: _inverse_blockwise,
    InverseMethod.DIAGONAL_SPLIT: _inverse_diagonal_split,
    InverseMethod.ANTI_DIAGONAL_SPLIT: _inverse_anti_diagonal_split,
}


def inverse(a: XMatrix, method=InverseMethod.BLOCKWISE) -> XMatrix:
    """Inverse of ``a``, itself an X-matrix.

    ``BLOCKWISE`` inverts every pair block by its adjugate and reciprocates
    the center. ``DIAGONAL_SPLIT`` and ``ANTI_DIAGONAL_SPLIT`` evaluate the
    closed forms built from ``F = diag(e_i/d_i)`` and ``G = diag(d_i/e_i)``;
    they only ever invert diagonal matrices, and additionally need all d_i
    (resp. all e_i, with the odd-n center counted on the anti-diagonal) to be
    nonzero. All three agree wherever they are defined.

    Raises SingularMatrix when det(a) == 0 and MethodPreconditionViolated when
    a split method does not apply.
    """
    method = InverseMethod(method)
    _require_invertible(a)
    return _METHODS[method](a)
