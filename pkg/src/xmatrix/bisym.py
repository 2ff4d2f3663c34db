"""Bi-symmetric X-matrices: invariant under both transposition and anti-transposition.

For these, d_i = d_{n-i+1} and e_i = e_{n-i+1}, so every pair block has the
form [[a, c], [c, a]]. They commute with each other and share the eigenvectors
e_i + e_{n-i+1} (eigenvalue a + c) and e_i - e_{n-i+1} (eigenvalue a - c).
Membership is checked with exact equality in both field modes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .core import RATIONAL, XMatrix, block_arrays, one, to_scalar, zero
from .errors import NotBisymmetric
from .spectral import EigenPair

DIAGONAL, ANTI_DIAGONAL = "diagonal", "anti-diagonal"


@dataclass(frozen=True)
class BisymCertificate:
    holds: bool
    witness: Optional[Tuple[int, int]] = None
    kind: Optional[str] = None

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("a certificate holds exactly when it has no witness")

    def describe(self) -> str:
        if self.holds:
            return "bi-symmetric"
        i, j = self.witness
        if self.kind == DIAGONAL:
            return f"a[{i},{i}] != a[{j},{j}]"
        return f"a[{i},{j}] != a[{j},{i}]"


def is_bisymmetric(a: XMatrix) -> BisymCertificate:
    n = a.n
    d, e = a.d, a.e
    for i in range(n // 2):
        j = n - 1 - i
        if d[i] != d[j]:
            return BisymCertificate(False, (i + 1, j + 1), DIAGONAL)
        if e[i] != e[j]:
            return BisymCertificate(False, (i + 1, j + 1), ANTI_DIAGONAL)
    return BisymCertificate(True)


def bisym_eigen(a: XMatrix) -> List[EigenPair]:
    """Eigenpairs without square roots, so exact in rational mode.

    Each block yields ``d_i - e_i`` with vector ``(1, -1)`` then ``d_i + e_i``
    with ``(1, 1)``; when ``e_i = 0`` the vectors are ``(1, 0)`` and ``(0, 1)``.
    The center comes last.
    """
    cert = is_bisymmetric(a)
    if not cert.holds:
        raise NotBisymmetric(cert)
    f = a.field
    o, z = one(f), zero(f)
    p, q, _, _, center = block_arrays(a)
    out = []
    for i, (dv, ev) in enumerate(zip(p, q), start=1):
        if ev == 0:
            out.append(EigenPair(dv, i, o, z))
            out.append(EigenPair(dv, i, z, o))
        else:
            out.append(EigenPair(dv - ev, i, o, -o))
            out.append(EigenPair(dv + ev, i, o, o))
    if center is not None:
        out.append(EigenPair(center, None, o, z))
    return out


def common_eigenbasis(n: int, field: str = RATIONAL) -> np.ndarray:
    """Columns e_i + e_{n-i+1} (ascending i), the middle unit vector, then e_i - e_{n-i+1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    o, z = one(field), zero(field)
    c = np.empty((n, n), dtype=object if field == RATIONAL else float)
    c[:, :] = z
    h = n // 2
    col = 0
    for i in range(h):
        c[i, col] = o
        c[n - 1 - i, col] = o
        col += 1
    if n % 2:
        c[h, col] = o
        col += 1
    for i in range(h):
        c[i, col] = o
        c[n - 1 - i, col] = -o
        col += 1
    return c


def is_central(a: XMatrix) -> bool:
    """True iff A commutes with every X-matrix of its size: e = 0 and d a palindrome."""
    d = a.d
    return bool(all(v == 0 for v in a.e) and all(d[i] == d[-1 - i] for i in range(a.n // 2)))
