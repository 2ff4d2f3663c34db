"""X-shaped companion matrices for real monic polynomials.

A real monic polynomial splits into real linear factors and irreducible real
quadratics. Each quadratic becomes a 2x2 companion sitting on one pair block,
and the linear roots fill the remaining blocks (plus the center when the
degree is odd), so the resulting X-matrix has exactly the prescribed
characteristic polynomial.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple

import numpy as np

from .core import FLOAT, XMatrix, from_block_arrays, infer_field, to_scalar, zero
from .errors import ConjugatePairingFailure, NonConvergence
from .spectral import MonicPoly, poly_mul

# initial guesses sit on a circle, turned off the real axis by this many
# radians so that no guess is real and none is conjugate to another
ROTATION = math.sqrt(2) / 3
MAX_SWEEPS = 1000


class Layout(Enum):
    THEOREM = "theorem"
    CONSTANT_LEFT = "constant-left"


@dataclass(frozen=True)
class RealFactorization:
    """prod (t - alpha) * prod (t^2 + beta t + gamma)."""
    linear_roots: Tuple = ()
    quadratics: Tuple[Tuple[object, object], ...] = ()
    sweeps: int = field(default=0, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "linear_roots", tuple(self.linear_roots))
        object.__setattr__(self, "quadratics", tuple(tuple(q) for q in self.quadratics))

    @property
    def degree(self) -> int:
        return len(self.linear_roots) + 2 * len(self.quadratics)

    def expand(self) -> MonicPoly:
        acc = [1]
        for alpha in self.linear_roots:
            acc = poly_mul(acc, [-alpha, 1])
        for beta, gamma in self.quadratics:
            acc = poly_mul(acc, [gamma, beta, 1])
        return MonicPoly(tuple(acc[:-1]))


def _horner(coeffs: np.ndarray, z: complex):
    """f(z) and the rounding-error scale sum |a_i| |z|^i for the monic f."""
    acc, scale = 1 + 0j, 1.0
    az = abs(z)
    for c in coeffs[::-1]:
        acc = acc * z + c
        scale = scale * az + abs(c)
    return acc, scale


def durand_kerner(coeffs, tol: float = 1e-12, max_sweeps: int = MAX_SWEEPS):
    """All complex roots of the monic polynomial with ascending ``coeffs`` (a_0..a_{n-1}).

    Gauss-Seidel Weierstrass iteration from ``n`` points on the circle of
    radius ``1 + max|a_i|``. Stops when every update is at most ``tol``, or
    when every residual is down at the rounding level of the evaluation (which
    is as good as multiple roots get). Returns ``(roots, sweeps)``.
    """
    a = np.asarray(coeffs, dtype=float)
    n = len(a)
    if n == 0:
        raise ValueError("degree-0 polynomial has no roots")
    if n == 1:
        return np.array([-a[0] + 0j]), 0
    radius = 1.0 + float(np.max(np.abs(a)))
    z = radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + ROTATION))
    eps = np.finfo(float).eps
    for sweep in range(1, max_sweeps + 1):
        max_step = 0.0
        at_noise = True
        for k in range(n):
            fz, scale = _horner(a, z[k])
            if abs(fz) > 4 * n * eps * scale:
                at_noise = False
            diffs = z[k] - np.delete(z, k)
            step = fz / np.prod(diffs)
            z[k] -= step
            max_step = max(max_step, abs(step))
        if max_step <= tol or at_noise:
            return z, sweep
    raise NonConvergence(f"Durand-Kerner did not converge in {max_sweeps} sweeps "
                         f"(last step {max_step:.3e})")


def real_factorize(f: MonicPoly, tol: float = 1e-12) -> RealFactorization:
    """Factor a real monic polynomial into real linear and quadratic factors.

    Roots with ``|im| <= tol (1 + |re|)`` become linear factors (sorted
    ascending); the others are matched with their conjugates into
    ``t^2 + beta t + gamma`` with ``beta = -2 re`` and ``gamma = |z|^2``.
    """
    if f.degree < 1:
        raise ValueError("polynomial must have degree >= 1")
    roots, sweeps = durand_kerner([float(c) for c in f.coeffs], tol)
    thr = tol * (1 + np.abs(roots.real))
    real = np.abs(roots.imag) <= thr
    upper = [z for z, m in zip(roots, real) if not m and z.imag > 0]
    lower = [z for z, m in zip(roots, real) if not m and z.imag < 0]
    if len(upper) != len(lower):
        raise ConjugatePairingFailure(
            f"{len(upper)} roots above the real axis but {len(lower)} below")
    quads = []
    for z in sorted(upper, key=lambda w: (w.real, w.imag)):
        k = min(range(len(lower)), key=lambda j: abs(lower[j] - z.conjugate()))
        w = lower.pop(k)
        quads.append((float(-(z + w).real) + 0.0, float((z * w).real)))
    linear = sorted(float(z.real) for z, m in zip(roots, real) if m)
    return RealFactorization(tuple(linear), tuple(quads), sweeps)


def x_companion(fac: RealFactorization, layout=Layout.THEOREM) -> XMatrix:
    """X-matrix whose characteristic polynomial is ``fac.expand()``.

    Quadratic ``j`` (1-based) occupies pair block ``j`` as ``[[0, -gamma], [1, -beta]]``.
    For odd degree the middle linear root goes to the center. The other linear
    roots are paired first-with-last, ``(alpha_j, alpha_{k+1-j})``, on the next
    blocks inwards: as ``diag(alpha_j, alpha_{k+1-j})`` in the THEOREM layout,
    so the middle of the matrix is ``diag(alpha_1, ..., alpha_k)``; or as
    ``[[0, -alpha_j alpha_{k+1-j}], [1, alpha_j + alpha_{k+1-j}]]`` in the
    CONSTANT_LEFT layout, whose left half is then a zero block over an
    anti-identity block.
    """
    layout = Layout(layout)
    n = fac.degree
    if n < 1:
        raise ValueError("factorisation has degree 0")
    flat = list(fac.linear_roots) + [x for q in fac.quadratics for x in q]
    fld = infer_field(flat)
    alphas = [to_scalar(x, fld) for x in fac.linear_roots]
    quads = [(to_scalar(b, fld), to_scalar(g, fld)) for b, g in fac.quadratics]
    z, o = zero(fld), zero(fld) + 1

    center = None
    if n % 2:
        mid = (len(alphas) - 1) // 2
        center = alphas[mid]
        alphas = alphas[:mid] + alphas[mid + 1:]

    p, q, r, s = [], [], [], []
    for beta, gamma in quads:
        p.append(z), q.append(-gamma), r.append(o), s.append(-beta)
    k = len(alphas)
    for j in range(k // 2):
        a1, a2 = alphas[j], alphas[k - 1 - j]
        if layout is Layout.THEOREM:
            p.append(a1), q.append(z), r.append(z), s.append(a2)
        else:
            p.append(z), q.append(-a1 * a2), r.append(o), s.append(a1 + a2)
    dtype = np.float64 if fld == FLOAT else object
    arrs = []
    for col in (p, q, r, s):
        arr = np.empty(len(col), dtype=dtype)
        arr[:] = col
        arrs.append(arr)
    return from_block_arrays(*arrs, center, fld)


def companion_from_poly(f: MonicPoly, layout=Layout.THEOREM, tol: float = 1e-12) -> XMatrix:
    return x_companion(real_factorize(f, tol), layout)
