"""Dense brute-force reference implementations.

Everything here works on plain nested lists (or anything indexable as
``a[i][j]``) with textbook loops, and deliberately imports nothing from the
structured modules: it exists to check them. Entries may be Fractions (exact)
or floats. Nothing in this module is O(n).
"""
from fractions import Fraction


def _rows(a):
    return [list(row) for row in a]


def _square(a):
    a = _rows(a)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    return a, n


def _like_zero(a):
    for row in a:
        for x in row:
            return x * 0
    return 0


def dense_identity(n, one=Fraction(1)):
    zero = one * 0
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def dense_anti_identity(n, one=Fraction(1)):
    zero = one * 0
    return [[one if i + j == n - 1 else zero for j in range(n)] for i in range(n)]


def dense_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def dense_scale(a, c):
    return [[c * x for x in row] for row in a]


def dense_mul(a, b):
    """Triple-loop product (zero entries of ``a`` skipped)."""
    a, b = _rows(a), _rows(b)
    m, k = len(a), len(b)
    if any(len(row) != k for row in a):
        raise ValueError("inner dimensions do not conform")
    p = len(b[0]) if b else 0
    zero = _like_zero(a)
    out = [[zero] * p for _ in range(m)]
    for i in range(m):
        row = out[i]
        for t in range(k):
            x = a[i][t]
            if x == 0:
                continue
            bt = b[t]
            for j in range(p):
                row[j] = row[j] + x * bt[j]
    return out


def dense_transpose(a):
    a, n = _square(a)
    return [[a[j][i] for j in range(n)] for i in range(n)]


def dense_anti_transpose(a):
    """(A^⊺)_{i,j} = a_{n-j+1, n-i+1}."""
    a, n = _square(a)
    return [[a[n - 1 - j][n - 1 - i] for j in range(n)] for i in range(n)]


def _laplace(a):
    n = len(a)
    if n == 1:
        return a[0][0]
    total = a[0][0] * 0
    for j in range(n):
        if a[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * _laplace(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _bareiss(a):
    # fraction-free elimination; exact over any field, integral on integer input
    a = [row[:] for row in a]
    n = len(a)
    sign = 1
    prev = a[0][0] * 0 + 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return a[0][0] * 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def dense_det(a, method="auto"):
    """Determinant by Laplace expansion (n <= 12) or Bareiss elimination (n <= 64).

    ``auto`` uses Laplace for small float input and Bareiss otherwise.
    """
    a, n = _square(a)
    if n == 0:
        return 1
    exact = all(not isinstance(x, float) for row in a for x in row)
    if method == "auto":
        method = "laplace" if (n <= 12 and not exact) else "bareiss"
    if method == "laplace":
        if n > 12:
            raise ValueError("Laplace expansion limited to n <= 12")
        return _laplace(a)
    if method == "bareiss":
        if n > 64:
            raise ValueError("Bareiss elimination limited to n <= 64")
        return _bareiss([[Fraction(x) if isinstance(x, int) else x for x in row] for row in a])
    raise ValueError(f"unknown method {method!r}")


def dense_trace(a):
    return sum((a[i][i] for i in range(len(a))), _like_zero(a))


def dense_charpoly(a):
    """Coefficients [c_0, ..., c_{n-1}] of det(tI - A) = t^n + c_{n-1} t^{n-1} + ... + c_0.

    Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
    Only ring operations and division by integers, so exact on Fractions.
    """
    a, n = _square(a)
    one = _like_zero(a) + 1
    coeffs = [None] * n
    m = dense_identity(n, one)
    for k in range(1, n + 1):
        am = dense_mul(a, m)
        c = -dense_trace(am) / k
        coeffs[n - k] = c
        m = dense_add(am, dense_scale(dense_identity(n, one), c))
    return coeffs


def dense_inverse(a):
    """Gauss-Jordan with partial pivoting (largest magnitude)."""
    a, n = _square(a)
    one = _like_zero(a) + 1
    aug = [row[:] + ident for row, ident in zip(a, dense_identity(n, one))]
    for col in range(n):
        piv = max(range(col, n), key=lambda i: abs(aug[i][col]))
        if aug[piv][col] == 0:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def dense_polyval(coeffs, a):
    """sum_k coeffs[k] A^k by plain powers (no Horner)."""
    a, n = _square(a)
    one = _like_zero(a) + 1
    acc = dense_scale(dense_identity(n, one), 0)
    pw = dense_identity(n, one)
    for c in coeffs:
        acc = dense_add(acc, dense_scale(pw, c))
        pw = dense_mul(pw, a)
    return acc


def dense_series(a, coeffs, tol=1e-16, max_terms=200):
    """Truncated sum_k c_k A^k on the dense matrix.

    Stops after the first nonzero-coefficient term whose max-norm is at most
    ``tol * (max-norm of the partial sum + 1)``.
    """
    a, n = _square(a)
    acc = [[0.0] * n for _ in range(n)]
    pw = dense_identity(n, 1.0)
    for k, c in enumerate(coeffs):
        if k >= max_terms:
            break
        term = dense_scale(pw, c)
        acc = dense_add(acc, term)
        tnorm = max(abs(x) for row in term for x in row)
        anorm = max(abs(x) for row in acc for x in row)
        if c != 0 and tnorm <= tol * (anorm + 1):
            break
        pw = dense_mul(pw, a)
    return acc


def exp_coefficients():
    c, k = 1.0, 0
    while True:
        yield c
        k += 1
        c = c / k


def dense_exp(a, tol=1e-17, max_terms=200):
    return dense_series(a, exp_coefficients(), tol, max_terms)


def is_x_shaped(a):
    a, n = _square(a)
    return all(a[i][j] == 0 for i in range(n) for j in range(n)
               if i != j and i + j != n - 1)
