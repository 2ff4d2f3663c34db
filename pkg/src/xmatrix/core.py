"""X-matrices: storage, ring operations, transposition and the pair-block split.

An X-matrix of order ``n`` keeps only two length-``n`` arrays: ``d`` holds the
main diagonal and ``e`` the anti-diagonal, so that ``a[i, n-1-i] == e[i]``
(0-based storage; every message and report is 1-based). For odd ``n`` the two
diagonals meet in a single central entry, which is always stored in ``d`` with
the matching slot of ``e`` kept at zero.

Rows ``i`` and ``n-i+1`` only ever interact with each other, so an X-matrix is
a permuted direct sum of 2x2 *pair blocks* ``[[d_i, e_i], [e_{n-i+1}, d_{n-i+1}]]``
plus a 1x1 center for odd ``n``. Every algorithm in the package works on the
vectorised block arrays returned by :func:`block_arrays`, which is what keeps
each operation O(n).

Two field modes are supported: ``"rational"`` (object arrays of
:class:`fractions.Fraction`, exact) and ``"float64"``.
"""
from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import DimensionError, FieldError, InvalidScalar, NotXShaped

RATIONAL = "rational"
FLOAT = "float64"
FIELDS = (RATIONAL, FLOAT)


# -- scalars ------------------------------------------------------------------

def _is_float_like(v) -> bool:
    return isinstance(v, (float, np.floating))


def _is_complex_like(v) -> bool:
    return isinstance(v, (complex, np.complexfloating))


def infer_field(*sequences) -> str:
    """Float mode as soon as any entry is a float, rational otherwise."""
    for seq in sequences:
        if isinstance(seq, np.ndarray) and seq.dtype != object:
            kind = seq.dtype.kind
            if kind == "c":
                raise FieldError("complex entries are not supported inside an XMatrix")
            if kind == "f":
                return FLOAT
            continue
        for v in np.asarray(seq, dtype=object).ravel():
            if _is_complex_like(v):
                raise FieldError("complex entries are not supported inside an XMatrix")
            if _is_float_like(v):
                return FLOAT
    return RATIONAL


def to_scalar(value, field: str):
    """Convert ``value`` into the scalar type of ``field``.

    Rational mode accepts ints, Fractions, and strings such as ``"3/4"``; a
    float is refused there because it would silently drag in binary rounding.
    """
    if field == FLOAT:
        if _is_complex_like(value) or isinstance(value, str):
            raise InvalidScalar(f"not a real number: {value!r}")
        x = float(value)
        if not np.isfinite(x):
            raise InvalidScalar(f"non-finite value {value!r}")
        return x
    if field == RATIONAL:
        if _is_float_like(value):
            raise FieldError(f"float {value!r} given in rational mode")
        if isinstance(value, (Fraction, numbers.Integral)):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidScalar(f"cannot parse {value!r} as a rational") from exc
        if isinstance(value, numbers.Rational):
            return Fraction(value.numerator, value.denominator)
        raise InvalidScalar(f"cannot use {value!r} as a rational")
    raise FieldError(f"unknown field mode {field!r}")


def zero(field: str):
    return 0.0 if field == FLOAT else Fraction(0)


def one(field: str):
    return 1.0 if field == FLOAT else Fraction(1)


def _vector(values, field: str) -> np.ndarray:
    if field == FLOAT:
        try:
            arr = np.array(values, dtype=np.float64)
        except TypeError as exc:
            raise InvalidScalar(str(exc)) from exc
        if arr.ndim != 1:
            raise DimensionError("expected a one-dimensional sequence")
        if not np.isfinite(arr).all():
            raise InvalidScalar("NaN or infinite value in float64 input")
        return arr
    seq = list(values)
    arr = np.empty(len(seq), dtype=object)
    for k, v in enumerate(seq):
        arr[k] = to_scalar(v, RATIONAL)
    return arr


def full(n: int, value, field: str) -> np.ndarray:
    if field == FLOAT:
        return np.full(n, float(value))
    arr = np.empty(n, dtype=object)
    arr[:] = [to_scalar(value, RATIONAL)] * n
    return arr


# -- the matrix type ------------------------------------------------------------

class XMatrix:
    """Immutable X-matrix. Construct with ``XMatrix(d, e)`` or :func:`from_dense`.

    >>> A = XMatrix([1, 0, 9, 0], [2, 1, 4, 3])
    >>> A.det()
    Fraction(24, 1)
    """

    __slots__ = ("_d", "_e")
    __array_ufunc__ = None  # numpy scalars must defer to our reflected operators

    def __init__(self, d, e, field: Optional[str] = None):
        field = field or infer_field(d, e)
        dv, ev = _vector(d, field), _vector(e, field)
        if len(dv) != len(ev):
            raise DimensionError(f"diagonal has length {len(dv)}, anti-diagonal {len(ev)}")
        n = len(dv)
        if n < 1:
            raise DimensionError("an X-matrix needs order n >= 1")
        if n % 2:
            c = n // 2
            dv[c] = dv[c] + ev[c]
            ev[c] = zero(field)
        self._set(dv, ev)

    @classmethod
    def _wrap(cls, d: np.ndarray, e: np.ndarray) -> "XMatrix":
        # trusted internal constructor: arrays already canonical and owned
        obj = object.__new__(cls)
        obj._set(d, e)
        return obj

    def _set(self, d, e):
        d.setflags(write=False)
        e.setflags(write=False)
        object.__setattr__(self, "_d", d)
        object.__setattr__(self, "_e", e)

    def __setattr__(self, name, value):
        raise AttributeError("XMatrix is immutable")

    @property
    def d(self) -> np.ndarray:
        return self._d

    @property
    def e(self) -> np.ndarray:
        return self._e

    @property
    def n(self) -> int:
        return len(self._d)

    @property
    def field(self) -> str:
        return RATIONAL if self._d.dtype == object else FLOAT

    @property
    def is_exact(self) -> bool:
        return self.field == RATIONAL

    def entry(self, i: int, j: int):
        """Entry a_{i,j} with 1-based indices."""
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"({i}, {j}) outside a {n}x{n} matrix")
        if i == j:
            return self._d[i - 1]
        if i + j == n + 1:
            return self._e[i - 1]
        return zero(self.field)

    def __repr__(self):
        def fmt(arr):
            return "[" + ", ".join(str(x) for x in arr.tolist()) + "]"
        return f"XMatrix(n={self.n}, field={self.field!r}, d={fmt(self._d)}, e={fmt(self._e)})"

    def __eq__(self, other):
        if not isinstance(other, XMatrix):
            return NotImplemented
        return (self.field == other.field and self.n == other.n
                and bool(np.array_equal(self._d, other._d))
                and bool(np.array_equal(self._e, other._e)))

    __hash__ = None

    def __add__(self, other):
        return add(self, other) if isinstance(other, XMatrix) else NotImplemented

    def __sub__(self, other):
        return subtract(self, other) if isinstance(other, XMatrix) else NotImplemented

    def __neg__(self):
        return negate(self)

    def __matmul__(self, other):
        return multiply(self, other) if isinstance(other, XMatrix) else NotImplemented

    def __mul__(self, c):
        if isinstance(c, XMatrix):
            return NotImplemented
        return scale(self, c)

    __rmul__ = __mul__

    def __pow__(self, m):
        return power(self, m)

    @property
    def T(self) -> "XMatrix":
        return transpose(self)

    def transpose(self) -> "XMatrix":
        return transpose(self)

    def anti_transpose(self) -> "XMatrix":
        return anti_transpose(self)

    def to_dense(self) -> np.ndarray:
        return to_dense(self)

    def to_float(self) -> "XMatrix":
        return astype(self, FLOAT)

    def det(self):
        from .linalg import determinant
        return determinant(self)

    def inv(self, method=None):
        from .linalg import inverse
        return inverse(self, method) if method is not None else inverse(self)


# -- construction -------------------------------------------------------------

def from_diagonals(d: Sequence, e: Sequence, field: Optional[str] = None) -> XMatrix:
    """Build ``diag(d) + diag(e) J``; an odd-n center gets ``d_c + e_c``."""
    return XMatrix(d, e, field)


def from_dense(m, field: Optional[str] = None) -> XMatrix:
    """Read d and e off a dense square matrix.

    Any nonzero outside the two diagonals raises :class:`NotXShaped`, with no
    tolerance even in float mode.
    """
    arr = np.asarray(m, dtype=object) if not isinstance(m, np.ndarray) else m
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    if n < 1:
        raise DimensionError("an X-matrix needs order n >= 1")
    field = field or infer_field(arr)
    idx = np.arange(n)
    pattern = (idx[:, None] == idx[None, :]) | (idx[:, None] + idx[None, :] == n - 1)
    bad = np.argwhere((arr != 0) & ~pattern)
    if len(bad):
        i, j = bad[0]
        raise NotXShaped(int(i) + 1, int(j) + 1, arr[i, j])
    d = _vector([arr[k, k] for k in range(n)], field)
    e = _vector([arr[k, n - 1 - k] for k in range(n)], field)
    if n % 2:
        e[n // 2] = zero(field)
    return XMatrix._wrap(d, e)


def identity(n: int, field: str = RATIONAL) -> XMatrix:
    return XMatrix._wrap(full(n, 1, field), full(n, 0, field))


def zeros(n: int, field: str = RATIONAL) -> XMatrix:
    return XMatrix._wrap(full(n, 0, field), full(n, 0, field))


def anti_identity(n: int, field: str = RATIONAL) -> XMatrix:
    """The exchange matrix J."""
    return XMatrix(full(n, 0, field), full(n, 1, field), field)


def diagonal(values, field: Optional[str] = None) -> XMatrix:
    field = field or infer_field(values)
    d = _vector(values, field)
    return XMatrix._wrap(d, full(len(d), 0, field))


def astype(a: XMatrix, field: str) -> XMatrix:
    if field == a.field:
        return a
    if field == FLOAT:
        return XMatrix._wrap(a.d.astype(np.float64), a.e.astype(np.float64))
    # binary floats convert exactly
    return XMatrix._wrap(_exact(a.d), _exact(a.e))


def _exact(arr: np.ndarray) -> np.ndarray:
    out = np.empty(len(arr), dtype=object)
    out[:] = [Fraction(x) for x in arr.tolist()]
    return out


def to_dense(a: XMatrix) -> np.ndarray:
    """Dense ``n x n`` array (object dtype of Fractions in rational mode)."""
    n = a.n
    if a.field == FLOAT:
        out = np.zeros((n, n))
    else:
        out = np.empty((n, n), dtype=object)
        out.fill(Fraction(0))
    idx = np.arange(n)
    out[idx, n - 1 - idx] = a.e
    out[idx, idx] = a.d  # written last: the odd-n center belongs to d
    return out


# -- ring operations ------------------------------------------------------------

def _check_pair(a: XMatrix, b: XMatrix):
    if a.n != b.n:
        raise DimensionError(f"order mismatch: {a.n} vs {b.n}")
    if a.field != b.field:
        raise FieldError(f"field mismatch: {a.field} vs {b.field}")


def add(a: XMatrix, b: XMatrix) -> XMatrix:
    _check_pair(a, b)
    return XMatrix._wrap(a.d + b.d, a.e + b.e)


def subtract(a: XMatrix, b: XMatrix) -> XMatrix:
    _check_pair(a, b)
    return XMatrix._wrap(a.d - b.d, a.e - b.e)


def negate(a: XMatrix) -> XMatrix:
    return XMatrix._wrap(-a.d, -a.e)


def scale(a: XMatrix, c) -> XMatrix:
    c = to_scalar(c, a.field)
    return XMatrix._wrap(a.d * c, a.e * c)


def multiply(a: XMatrix, b: XMatrix) -> XMatrix:
    """Product in O(n).

    Row i of A meets only rows i and n-i+1 of B::

        (AB)_{i,i}     = d_i d'_i + e_i e'_{n-i+1}
        (AB)_{i,n-i+1} = d_i e'_i + e_i d'_{n-i+1}

    With a canonical center (e_c = 0 on both sides) the center entry reduces
    to d_c d'_c and the result is canonical without a fold.
    """
    _check_pair(a, b)
    d, e, d2, e2 = a.d, a.e, b.d, b.e
    return XMatrix._wrap(d * d2 + e * e2[::-1], d * e2 + e * d2[::-1])


def transpose(a: XMatrix) -> XMatrix:
    return XMatrix._wrap(a.d.copy(), a.e[::-1].copy())


def anti_transpose(a: XMatrix) -> XMatrix:
    """Reflection across the anti-diagonal, (A^⊺)_{i,j} = a_{n-j+1, n-i+1}."""
    return XMatrix._wrap(a.d[::-1].copy(), a.e.copy())


# -- pair blocks ------------------------------------------------------------------

Blocks = Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]


def block_arrays(a: XMatrix):
    """Vectorised pair blocks ``(p, q, r, s, center)``.

    Block i (0-based here, 1-based in reports) is ``[[p[i], q[i]], [r[i], s[i]]]``
    = ``[[d_i, e_i], [e_{n-i+1}, d_{n-i+1}]]``. ``center`` is None for even n.
    """
    h = a.n // 2
    d, e = a.d, a.e
    center = None
    if a.n % 2:
        center = float(d[h]) if a.field == FLOAT else d[h]
    return d[:h], e[:h], e[::-1][:h], d[::-1][:h], center


def from_block_arrays(p, q, r, s, center, field: str) -> XMatrix:
    """Inverse of :func:`block_arrays`; ``center`` must be None for even order."""
    dtype = np.float64 if field == FLOAT else object
    if center is None:
        mid_d = np.empty(0, dtype=dtype)
        mid_e = np.empty(0, dtype=dtype)
    else:
        mid_d = np.empty(1, dtype=dtype)
        mid_d[0] = center
        mid_e = np.empty(1, dtype=dtype)
        mid_e[0] = zero(field)
    p, q, r, s = (np.asarray(x, dtype=dtype) for x in (p, q, r, s))
    d = np.concatenate([p, mid_d, s[::-1]])
    e = np.concatenate([q, mid_e, r[::-1]])
    return XMatrix._wrap(d, e)


def block_matmul(x: Blocks, y: Blocks) -> Blocks:
    """Elementwise product of two stacks of 2x2 blocks."""
    p1, q1, r1, s1 = x
    p2, q2, r2, s2 = y
    return (p1 * p2 + q1 * r2, p1 * q2 + q1 * s2,
            r1 * p2 + s1 * r2, r1 * q2 + s1 * s2)


def power(a: XMatrix, m: int) -> XMatrix:
    """A**m by repeated squaring of every pair block; A**0 is the identity."""
    if isinstance(m, bool) or not isinstance(m, numbers.Integral) or m < 0:
        raise ValueError(f"power needs a nonnegative integer exponent, got {m!r}")
    m = int(m)
    field = a.field
    p, q, r, s, center = block_arrays(a)
    h = len(p)
    acc = (full(h, 1, field), full(h, 0, field), full(h, 0, field), full(h, 1, field))
    base = (p, q, r, s)
    c_acc, c_base = one(field), center
    k = m
    while k:
        if k & 1:
            acc = block_matmul(acc, base)
            if center is not None:
                c_acc = c_acc * c_base
        k >>= 1
        if k:
            base = block_matmul(base, base)
            if center is not None:
                c_base = c_base * c_base
    return from_block_arrays(*acc, c_acc if center is not None else None, field)


@dataclass(frozen=True)
class PairBlock:
    """The 2x2 block on rows/columns (i, n-i+1); ``i`` is 1-based."""
    i: int
    entries: Tuple[Tuple[object, object], Tuple[object, object]]

    @property
    def trace(self):
        return self.entries[0][0] + self.entries[1][1]

    @property
    def det(self):
        (p, q), (r, s) = self.entries
        return p * s - q * r


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: Tuple[PairBlock, ...]
    center: Optional[object] = None

    @property
    def n(self) -> int:
        return 2 * len(self.blocks) + (self.center is not None)


def decompose(a: XMatrix) -> BlockDecomposition:
    p, q, r, s, center = block_arrays(a)
    blocks = tuple(
        PairBlock(k + 1, ((p[k], q[k]), (r[k], s[k]))) for k in range(len(p))
    )
    return BlockDecomposition(blocks, center)


def recompose(bd: BlockDecomposition, n: Optional[int] = None) -> XMatrix:
    if n is not None and n != bd.n:
        raise DimensionError(f"decomposition has order {bd.n}, not {n}")
    if [b.i for b in bd.blocks] != list(range(1, len(bd.blocks) + 1)):
        raise ValueError("block indices must run 1..floor(n/2) in order")
    flat = [x for b in bd.blocks for row in b.entries for x in row]
    if bd.center is not None:
        flat.append(bd.center)
    if not flat:
        raise DimensionError("empty decomposition")
    field = infer_field(flat)
    p = [b.entries[0][0] for b in bd.blocks]
    q = [b.entries[0][1] for b in bd.blocks]
    r = [b.entries[1][0] for b in bd.blocks]
    s = [b.entries[1][1] for b in bd.blocks]
    p, q, r, s = (_vector(x, field) for x in (p, q, r, s))
    center = None if bd.center is None else to_scalar(bd.center, field)
    return from_block_arrays(p, q, r, s, center, field)
