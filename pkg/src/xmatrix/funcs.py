"""Matrix functions of X-matrices, evaluated independently on each pair block."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import (FLOAT, XMatrix, block_arrays, block_matmul, from_block_arrays,
                   full, identity, one, to_scalar, zero)
from .errors import DivergenceSuspected, FieldError, SingularMatrix
from .linalg import inverse
from .spectral import MonicPoly

GROWTH_LIMIT = 20


@dataclass(frozen=True)
class SeriesResult:
    matrix: XMatrix
    terms: int
    converged: bool


def _max_abs(blocks, center) -> float:
    m = max((float(np.max(np.abs(x))) for x in blocks if len(x)), default=0.0)
    if center is not None:
        m = max(m, float(abs(center)))
    return m


def _identity_blocks(h: int, field: str):
    return (full(h, 1, field), full(h, 0, field), full(h, 0, field), full(h, 1, field))


def evaluate_series(a: XMatrix, coeffs: Iterable, tol: float = 1e-16,
                    max_terms: int = 100) -> SeriesResult:
    """Partial sums of ``sum_k coeffs[k] A^k``, block by block.

    Stops after the first term with a nonzero coefficient whose max-norm is
    at most ``tol * (max-norm of the partial sum + 1)``, or after
    ``max_terms`` terms (then ``converged`` is False). ``coeffs`` may be any
    iterable, including an endless generator.

    Raises DivergenceSuspected when the term norm grows for 20 consecutive
    nonzero-coefficient terms.
    """
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    field = a.field
    p, q, r, s, center = block_arrays(a)
    base = (p, q, r, s)
    h = len(p)
    pw = _identity_blocks(h, field)
    c_pw = one(field)
    acc = tuple(full(h, 0, field) for _ in range(4))
    c_acc = zero(field) if center is not None else None
    prev, growth, terms, converged = None, 0, 0, False
    for coef in coeffs:
        if terms >= max_terms:
            break
        coef = to_scalar(coef, field)
        term = tuple(coef * x for x in pw)
        acc = tuple(x + y for x, y in zip(acc, term))
        c_term = None
        if center is not None:
            c_term = coef * c_pw
            c_acc = c_acc + c_term
        terms += 1
        if coef != 0:
            tnorm = _max_abs(term, c_term)
            if tnorm <= tol * (_max_abs(acc, c_acc) + 1):
                converged = True
                break
            growth = growth + 1 if prev is not None and tnorm > prev else 0
            if growth >= GROWTH_LIMIT:
                raise DivergenceSuspected(
                    f"term norm grew for {GROWTH_LIMIT} consecutive terms (now {tnorm:.3e})")
            prev = tnorm
        pw = block_matmul(pw, base)
        if center is not None:
            c_pw = c_pw * center
    return SeriesResult(from_block_arrays(*acc, c_acc, field), terms, converged)


def _expm_blocks(p, q, r, s, tol):
    # scaling and squaring: Taylor on block / 2^k with 2^k >= max-norm, then k squarings
    norm = np.maximum.reduce([np.abs(p), np.abs(q), np.abs(r), np.abs(s)])
    k = np.zeros(len(p), dtype=int)
    big = norm > 1
    k[big] = np.ceil(np.log2(norm[big])).astype(int)
    scale = np.ldexp(1.0, -k)
    x = (p * scale, q * scale, r * scale, s * scale)
    total = _identity_blocks(len(p), FLOAT)
    term = total
    for j in range(1, 60):
        term = tuple(t / j for t in block_matmul(term, x))
        total = tuple(a + b for a, b in zip(total, term))
        if _max_abs(term, None) <= tol * _max_abs(total, None):
            break
    for step in range(int(k.max(initial=0))):
        sq = block_matmul(total, total)
        live = k > step
        total = tuple(np.where(live, a, b) for a, b in zip(sq, total))
    return total


def exp_x(a: XMatrix, tol: float = 1e-16) -> XMatrix:
    """Matrix exponential; each 2x2 block by scaling and squaring, the center by exp."""
    if a.field != FLOAT:
        raise FieldError("exp_x needs float64 mode; convert with .to_float()")
    p, q, r, s, center = block_arrays(a)
    blocks = _expm_blocks(p, q, r, s, tol)
    c = None if center is None else float(np.exp(center))
    return from_block_arrays(*blocks, c, FLOAT)


def cayley(a: XMatrix) -> XMatrix:
    """psi(A) = (I - A)(I + A)^{-1}; the two factors commute."""
    eye = identity(a.n, a.field)
    try:
        inv = inverse(eye + a)
    except SingularMatrix as exc:
        where = "the center" if exc.block == "center" else f"pair block {exc.block}"
        raise SingularMatrix(f"-1 is an eigenvalue of {where}; Cayley transform undefined",
                             block=exc.block) from exc
    return (eye - a) @ inv


def poly_eval(a: XMatrix, p) -> XMatrix:
    """p(A) by blockwise Horner. ``p`` is a MonicPoly or ascending coefficients."""
    coeffs = p.full() if isinstance(p, MonicPoly) else list(p)
    if not coeffs:
        raise ValueError("empty coefficient list")
    field = a.field
    coeffs = [to_scalar(c, field) for c in coeffs]
    pp, qq, rr, ss, center = block_arrays(a)
    base = (pp, qq, rr, ss)
    h = len(pp)
    top = coeffs[-1]
    acc = (full(h, 0, field) + top, full(h, 0, field), full(h, 0, field), full(h, 0, field) + top)
    c_acc = top
    for c in reversed(coeffs[:-1]):
        P, Q, R, S = block_matmul(acc, base)
        acc = (P + c, Q, R, S + c)
        if center is not None:
            c_acc = c_acc * center + c
    return from_block_arrays(*acc, c_acc if center is not None else None, field)
