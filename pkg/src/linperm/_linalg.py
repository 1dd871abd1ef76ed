"""Small dense linear algebra over a finite field.

Matrices are lists of rows of field elements; for prime fields they may
also be (and internally stay) numpy int arrays taken mod p, which keeps
repeated matrix powers and matrix-vector products cheap.
"""

from __future__ import annotations

import numpy as np

from ._polys import _is_prime_field


def _to_np(rows):
    if isinstance(rows, np.ndarray):
        return rows
    return np.array([[c.coeffs[0] for c in row] for row in rows], dtype=np.int64)


def identity(field, n: int):
    if _is_prime_field(field):
        return np.eye(n, dtype=np.int64)
    zero, one = field.zero(), field.one()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(field, a, b):
    if _is_prime_field(field):
        return (_to_np(a) @ _to_np(b)) % field.p
    zero = field.zero()
    n, k, m = len(a), len(b), len(b[0])
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        for l in range(k):
            c = a[i][l]
            if c == zero:
                continue
            row_b = b[l]
            row_o = out[i]
            for j in range(m):
                row_o[j] = row_o[j] + c * row_b[j]
    return out


def matvec(field, a, v):
    """Matrix times vector of field elements; always returns field elements."""
    if _is_prime_field(field):
        vec = np.array([c.coeffs[0] for c in v], dtype=np.int64)
        out = (_to_np(a) @ vec) % field.p
        return [field.element((int(x),)) for x in out]
    return [row[0] for row in matmul(field, a, [[x] for x in v])]


def matpow(field, a, e: int):
    if _is_prime_field(field):
        p = field.p
        result = np.eye(len(a), dtype=np.int64)
        base = _to_np(a)
        while e > 0:
            if e & 1:
                result = (result @ base) % p
            base = (base @ base) % p
            e >>= 1
        return result
    result = identity(field, len(a))
    base = a
    while e > 0:
        if e & 1:
            result = matmul(field, result, base)
        base = matmul(field, base, base)
        e >>= 1
    return result


def rank_mod(rows: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over F_p by Gaussian elimination."""
    m = rows.copy() % p
    if m.size == 0:
        return 0
    r = 0
    for col in range(m.shape[1]):
        pivots = np.nonzero(m[r:, col])[0]
        if len(pivots) == 0:
            continue
        piv = r + int(pivots[0])
        m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, col]), -1, p)
        m[r, col:] = (m[r, col:] * inv) % p
        sub = m[r + 1:, col:]
        if sub.size:
            m[r + 1:, col:] = (sub - np.outer(m[r + 1:, col], m[r, col:])) % p
        r += 1
        if r == m.shape[0]:
            break
    return r


def rank(field, rows) -> int:
    """Rank over the field by Gaussian elimination."""
    if isinstance(rows, np.ndarray):
        if rows.size == 0:
            return 0
    elif not rows:
        return 0
    if _is_prime_field(field):
        return rank_mod(_to_np(rows), field.p)
    zero = field.zero()
    m = [list(row) for row in rows]
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    for col in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][col] != zero), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inverse()
        m[r] = [c * inv for c in m[r]]
        for i in range(n_rows):
            if i != r and m[i][col] != zero:
                c = m[i][col]
                m[i] = [a - c * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == n_rows:
            break
    return r
