"""Characteristic polynomial, eigen-decomposition and eigenvalue inclusion.

The characteristic polynomial of an X-matrix factors into one monic quadratic
``t^2 - theta_i t + delta_i`` per pair block (trace and determinant of the
block), times ``t - center`` for odd order. Everything spectral follows from
that factorisation, block by block.

For a pair block the Cassini oval with foci ``d_i, d_{n-i+1}`` and radius
``|e_i e_{n-i+1}|`` does more than contain the two eigenvalues: since
``(lam - d_i)(lam - d_{n-i+1}) = e_i e_{n-i+1}``, both sit exactly on its
boundary.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import contour
from .core import FLOAT, RATIONAL, XMatrix, block_arrays, from_block_arrays, full, one, zero
from .errors import FieldError


# -- polynomials ----------------------------------------------------------------

def poly_mul(a: Sequence, b: Sequence) -> list:
    """Product of two ascending coefficient lists."""
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


@dataclass(frozen=True)
class MonicPoly:
    """t^n + a_{n-1} t^{n-1} + ... + a_0, stored as ``coeffs = (a_0, ..., a_{n-1})``."""
    coeffs: Tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def full(self) -> list:
        """All coefficients in ascending order including the leading 1."""
        c = list(self.coeffs)
        return c + [c[0] * 0 + 1 if c else 1]

    def __call__(self, t):
        acc = 1
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    @classmethod
    def from_full(cls, coeffs: Sequence) -> "MonicPoly":
        coeffs = list(coeffs)
        if coeffs[-1] != 1:
            raise ValueError("leading coefficient must be 1")
        return cls(tuple(coeffs[:-1]))


# -- characteristic polynomial ---------------------------------------------------

@dataclass(frozen=True)
class QuadraticFactor:
    """t^2 - theta t + delta for pair block ``i`` (1-based)."""
    i: int
    theta: object
    delta: object

    def coefficients(self) -> list:
        return [self.delta, -self.theta, self.theta * 0 + 1]

    def __call__(self, t):
        return t * t - self.theta * t + self.delta


@dataclass(frozen=True)
class CharPolyFactors:
    quadratics: Tuple[QuadraticFactor, ...]
    linear_root: Optional[object] = None

    @property
    def degree(self) -> int:
        return 2 * len(self.quadratics) + (self.linear_root is not None)

    def multiset(self) -> List[tuple]:
        return sorted((q.theta, q.delta) for q in self.quadratics)


def char_poly_factors(a: XMatrix) -> CharPolyFactors:
    p, q, r, s, center = block_arrays(a)
    theta = (p + s).tolist()
    delta = (p * s - q * r).tolist()
    quads = tuple(QuadraticFactor(k + 1, t, dl) for k, (t, dl) in enumerate(zip(theta, delta)))
    return CharPolyFactors(quads, center)


def char_poly_coeffs(f: CharPolyFactors) -> MonicPoly:
    """Expand the factored characteristic polynomial."""
    acc = [1]
    for quad in f.quadratics:
        acc = poly_mul(acc, quad.coefficients())
    if f.linear_root is not None:
        acc = poly_mul(acc, [-f.linear_root, f.linear_root * 0 + 1])
    if len(acc) == 1:
        raise ValueError("empty factorisation")
    return MonicPoly(tuple(acc[:-1]))


def char_poly(a: XMatrix) -> MonicPoly:
    return char_poly_coeffs(char_poly_factors(a))


# -- eigenvalues and eigenvectors ---------------------------------------------------

def _require_float(a: XMatrix, what: str):
    if a.field != FLOAT:
        raise FieldError(f"{what} leaves the rationals; convert with .to_float() "
                         "or use char_poly_factors for exact results")


def _quadratic_roots(theta, delta, disc):
    """Roots of t^2 - theta t + delta, ordered by (re, im), given disc = theta^2/4 - delta."""
    half = 0.5 * theta
    real = disc >= 0
    sq = np.sqrt(np.where(real, disc, 0.0))
    # add same-signed terms only; the partner root comes from Vieta (product = delta)
    big = half + np.copysign(sq, half)
    safe = np.where(big != 0, big, 1.0)
    small = np.where(big != 0, delta / safe, 0.0)
    lo_r, hi_r = np.minimum(big, small), np.maximum(big, small)
    im = np.sqrt(np.where(real, 0.0, -disc))
    lo = np.where(real, lo_r + 0j, half - 1j * im)
    hi = np.where(real, hi_r + 0j, half + 1j * im)
    return lo, hi


def block_eigenvalues(a: XMatrix):
    """``(lo, hi, center)``: the two eigenvalues of every pair block, plus the center."""
    _require_float(a, "eigenvalues")
    p, q, r, s, center = block_arrays(a)
    hd = 0.5 * (p - s)
    # theta^2/4 - delta rewritten to avoid subtracting two large squares
    disc = hd * hd + q * r
    lo, hi = _quadratic_roots(p + s, p * s - q * r, disc)
    return lo, hi, center


def eigenvalues(a: XMatrix) -> np.ndarray:
    """All n eigenvalues as complex128.

    Ordered by block index, then by (re, im) inside a block; the odd-n
    center comes last. Float mode only.
    """
    lo, hi, center = block_eigenvalues(a)
    out = np.empty(a.n, dtype=complex)
    out[0:2 * len(lo):2] = lo
    out[1:2 * len(lo):2] = hi
    if center is not None:
        out[-1] = center
    return out


@dataclass(frozen=True)
class EigenPair:
    """Eigenvalue with eigenvector ``alpha e_i + beta e_{n-i+1}``.

    ``block`` is the 1-based pair index, or None for the odd-n center (whose
    eigenvector is the middle unit vector, alpha = 1). A ``defective`` pair is
    the placeholder for the missing second vector of a 2x2 Jordan block.
    """
    lam: complex
    block: Optional[int]
    alpha: complex
    beta: complex
    defective: bool = False

    @property
    def is_center(self) -> bool:
        return self.block is None

    def vector(self, n: int) -> np.ndarray:
        dtype = object if isinstance(self.alpha, type(zero(RATIONAL))) else complex
        v = np.zeros(n, dtype=dtype)
        if dtype is object:
            v[:] = zero(RATIONAL)
        if self.block is None:
            v[n // 2] = self.alpha
        else:
            v[self.block - 1] = self.alpha
            v[n - self.block] = self.beta
        return v


def _normalise(x: complex, y: complex):
    # divide by the larger component (alpha on ties) so the vector is unique
    piv = x if abs(x) >= abs(y) else y
    # + 0 clears signed zeros
    return x / piv + 0j, y / piv + 0j


def _null_vector(p, q, r, s, lam):
    r1 = (p - lam, q)
    r2 = (r, s - lam)
    if max(abs(r1[0]), abs(r1[1])) >= max(abs(r2[0]), abs(r2[1])):
        a, b = q, lam - p
    else:
        a, b = lam - s, r
    return _normalise(complex(a), complex(b))


def eigenvectors(a: XMatrix) -> List[EigenPair]:
    """One EigenPair per eigenvalue, in the order of :func:`eigenvalues`.

    Each vector spans the null space of ``block - lam I``, obtained from the
    larger-magnitude row of that 2x2 matrix. A repeated eigenvalue on a block
    that is not a multiple of the identity is a Jordan block: it gets one
    vector plus a ``defective`` placeholder.
    """
    lo, hi, center = block_eigenvalues(a)
    p, q, r, s, _ = block_arrays(a)
    pairs = []
    for k in range(len(lo)):
        pk, qk, rk, sk = float(p[k]), float(q[k]), float(r[k]), float(s[k])
        i = k + 1
        disc = (0.5 * (pk - sk)) ** 2 + qk * rk
        if disc == 0:
            lam = complex(lo[k])
            if pk == sk and qk == 0 and rk == 0:
                pairs.append(EigenPair(lam, i, 1 + 0j, 0j))
                pairs.append(EigenPair(lam, i, 0j, 1 + 0j))
            else:
                alpha, beta = _null_vector(pk, qk, rk, sk, lam)
                pairs.append(EigenPair(lam, i, alpha, beta))
                pairs.append(EigenPair(lam, i, 0j, 0j, defective=True))
            continue
        for lam in (complex(lo[k]), complex(hi[k])):
            alpha, beta = _null_vector(pk, qk, rk, sk, lam)
            pairs.append(EigenPair(lam, i, alpha, beta))
    if center is not None:
        pairs.append(EigenPair(complex(center), None, 1 + 0j, 0j))
    return pairs


# -- inclusion regions -----------------------------------------------------------------

@dataclass(frozen=True)
class GershgorinDisk:
    center: object
    radius: object
    row: int

    def contains(self, s, slack: float = 0.0) -> bool:
        return abs(complex(s) - float(self.center)) <= float(self.radius) * (1 + slack) + slack


def gershgorin_disks(a: XMatrix) -> List[GershgorinDisk]:
    """Row disks: center d_i, radius |e_i| (the odd-n center has radius 0)."""
    return [GershgorinDisk(c, abs(r), k + 1) for k, (c, r) in enumerate(zip(a.d.tolist(), a.e.tolist()))]


class Position(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


@dataclass(frozen=True)
class CassiniOval:
    """Region {s : |s - z1| |s - z2| <= radius} for pair block ``block``."""
    z1: object
    z2: object
    radius: object
    block: int

    def product(self, s) -> float:
        s = complex(s)
        return abs(s - float(self.z1)) * abs(s - float(self.z2))

    def contains(self, s, tol: float = 1e-9) -> bool:
        return cassini_classify(s, self, tol) is not Position.EXTERIOR

    def bounding_box(self):
        """Axis-aligned box enclosing the oval."""
        z1, z2, rad = float(self.z1), float(self.z2), float(self.radius)
        mid, half = 0.5 * (z1 + z2), 0.5 * abs(z1 - z2)
        reach = math.sqrt(half * half + rad)
        return (mid - reach, mid + reach, -math.sqrt(rad), math.sqrt(rad))


def cassini_ovals(a: XMatrix) -> List[CassiniOval]:
    """floor(n/2) ovals; the odd-n center is a point eigenvalue and has none."""
    p, q, r, s, _ = block_arrays(a)
    return [CassiniOval(z1, z2, abs(x * y), k + 1)
            for k, (z1, z2, x, y) in enumerate(zip(p.tolist(), s.tolist(), q.tolist(), r.tolist()))]


def cassini_classify(s, oval: CassiniOval, tol: float = 1e-9) -> Position:
    """Boundary when ``| |s-z1||s-z2| - radius | <= tol (1 + radius)``."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    rad = float(oval.radius)
    resid = oval.product(s) - rad
    band = tol * (1 + rad)
    if abs(resid) <= band:
        return Position.BOUNDARY
    return Position.INTERIOR if resid < 0 else Position.EXTERIOR


def cassini_contour(oval: CassiniOval, window, resolution: int = 200) -> List[np.ndarray]:
    """Boundary curves of ``oval`` inside ``window = (x0, x1, y0, y1)``.

    Traces the zero set of ``|s-z1|^2 |s-z2|^2 - radius^2`` with marching
    squares on a ``resolution x resolution`` grid. Each polyline is an
    ``(m, 2)`` array of (x, y). A zero radius yields the two foci as
    single-point polylines.
    """
    if resolution < 16:
        raise ValueError("resolution must be at least 16")
    x0, x1, y0, y1 = (float(v) for v in window)
    if not (x1 > x0 and y1 > y0):
        raise ValueError(f"empty window {window!r}")
    z1, z2, rad = float(oval.z1), float(oval.z2), float(oval.radius)
    if rad == 0:
        return [np.array([[z1, 0.0]]), np.array([[z2, 0.0]])]

    def g(X, Y):
        return ((X - z1) ** 2 + Y ** 2) * ((X - z2) ** 2 + Y ** 2) - rad * rad

    values, xs, ys = contour.sample(g, (x0, x1, y0, y1), resolution)
    return contour.marching_squares(values, xs, ys)


def default_window(ovals: Sequence[CassiniOval], extra_points=(), margin: float = 0.1):
    """A window holding every oval (and any extra points), padded by ``margin``."""
    boxes = [o.bounding_box() for o in ovals]
    boxes += [(complex(z).real, complex(z).real, complex(z).imag, complex(z).imag) for z in extra_points]
    if not boxes:
        return (-1.0, 1.0, -1.0, 1.0)
    x0 = min(b[0] for b in boxes)
    x1 = max(b[1] for b in boxes)
    y0 = min(b[2] for b in boxes)
    y1 = max(b[3] for b in boxes)
    span = max(x1 - x0, y1 - y0, 1.0)
    pad = margin * span
    return (x0 - pad, x1 + pad, y0 - pad, y1 + pad)


# -- isospectral reduction -----------------------------------------------------------------

def isospectral_reduction(a: XMatrix) -> XMatrix:
    """Replace every pair block by the companion-like ``[[0, 1], [-delta_i, theta_i]]``.

    That is ``Y = diag(g) + diag(f) J`` with ``f_i = 1``,
    ``f_{n-i+1} = -d_i d_{n-i+1} + e_i e_{n-i+1}``, ``g_i = 0`` and
    ``g_{n-i+1} = d_i + d_{n-i+1}``. Every block keeps its trace and
    determinant, so the spectrum is unchanged while the Cassini ovals move.
    """
    p, q, r, s, center = block_arrays(a)
    h, field = len(p), a.field
    return from_block_arrays(full(h, 0, field), full(h, 1, field),
                             -(p * s - q * r), p + s, center, field)
