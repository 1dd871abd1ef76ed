"""Dense polynomial arithmetic over a finite field.

Coefficient vectors are little-endian tuples of field elements with no
trailing zeros (the zero polynomial is the empty tuple).  Functions are
generic over any coefficient field exposing ``zero()``/``one()`` and whose
elements support ``+ - * ==`` and ``.inverse()``; prime fields (``field.k
== 1``) get numpy-backed fast paths for the operations that dominate
irreducibility testing and factorization.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def _is_prime_field(field) -> bool:
    return getattr(field, "k", 0) == 1


def _ints(coeffs):
    return np.array([c.coeffs[0] for c in coeffs], dtype=np.int64)


def _elems(field, arr):
    return ptrim(field, tuple(field.element((int(v),)) for v in arr))


def ptrim(field, coeffs):
    coeffs = tuple(coeffs)
    zero = field.zero()
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == zero:
        end -= 1
    return coeffs[:end]


def pzero(field):
    return ()


def pone(field):
    return (field.one(),)


def pX(field):
    """The monomial x."""
    return (field.zero(), field.one())


def pdeg(coeffs) -> int:
    return len(coeffs) - 1


def pconst(field, coeffs):
    return coeffs[0] if coeffs else field.zero()


def padd(field, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return ptrim(field, out)


def pneg(field, a):
    return tuple(-c for c in a)


def psub(field, a, b):
    return padd(field, a, pneg(field, b))


def pscale(field, a, s):
    if s == field.zero():
        return ()
    return ptrim(field, tuple(c * s for c in a))


def pmul(field, a, b):
    if not a or not b:
        return ()
    if _is_prime_field(field):
        conv = np.convolve(_ints(a), _ints(b)) % field.p
        return _elems(field, conv)
    zero = field.zero()
    out = [zero] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == zero:
            continue
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return ptrim(field, out)


def pdivmod(field, a, b):
    """Quotient and remainder of a by b (b nonzero)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    zero = field.zero()
    lead_inv = b[-1].inverse()
    rem = list(a)
    quo = [zero] * (len(a) - len(b) + 1)
    for shift in range(len(a) - len(b), -1, -1):
        c = rem[shift + len(b) - 1] * lead_inv
        if c == zero:
            continue
        quo[shift] = c
        for i, bc in enumerate(b):
            rem[shift + i] = rem[shift + i] - c * bc
    return ptrim(field, quo), ptrim(field, rem)


def pmod(field, a, b):
    return pdivmod(field, a, b)[1]


def pmonic(field, a):
    if not a:
        return ()
    return pscale(field, a, a[-1].inverse())


def pgcd(field, a, b):
    while b:
        a, b = b, pmod(field, a, b)
    return pmonic(field, a)


def pegcd(field, a, b):
    """Extended gcd: returns (g, u, v) with u*a + v*b = g and g monic."""
    r0, r1 = a, b
    u0, u1 = pone(field), pzero(field)
    v0, v1 = pzero(field), pone(field)
    while r1:
        q, r = pdivmod(field, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, psub(field, u0, pmul(field, q, u1))
        v0, v1 = v1, psub(field, v0, pmul(field, q, v1))
    if not r0:
        return (), u0, v0
    lead_inv = r0[-1].inverse()
    return (
        pscale(field, r0, lead_inv),
        pscale(field, u0, lead_inv),
        pscale(field, v0, lead_inv),
    )


@lru_cache(maxsize=256)
def _reduction_matrix(p: int, mod_ints: tuple) -> np.ndarray:
    """Matrix mapping coefficient vectors of degree < 2d-1 to their residue mod a monic degree-d polynomial (prime field)."""
    d = len(mod_ints) - 1
    width = max(2 * d - 1, d)
    low = np.array(mod_ints[:-1], dtype=np.int64)
    cols = np.zeros((d, width), dtype=np.int64)
    for e in range(d):
        cols[e, e] = 1
    for e in range(d, width):
        prev = cols[:, e - 1]
        shifted = np.zeros(d, dtype=np.int64)
        shifted[1:] = prev[:-1]
        cols[:, e] = (shifted - prev[-1] * low) % p
    return cols


def pmulmod(field, a, b, mod):
    """a*b reduced modulo the monic polynomial mod."""
    if not a or not b:
        return ()
    if _is_prime_field(field) and len(mod) >= 2:
        p = field.p
        d = len(mod) - 1
        red = _reduction_matrix(p, tuple(int(c.coeffs[0]) for c in mod))
        conv = np.convolve(_ints(a), _ints(b)) % p
        padded = np.zeros(red.shape[1], dtype=np.int64)
        padded[: len(conv)] = conv
        return _elems(field, (red @ padded) % p)
    return pmod(field, pmul(field, a, b), mod)


def ppowmod(field, a, e: int, mod):
    """a**e reduced modulo the monic polynomial mod."""
    result = pmod(field, pone(field), mod)
    base = pmod(field, a, mod)
    while e > 0:
        if e & 1:
            result = pmulmod(field, result, base, mod)
        base = pmulmod(field, base, base, mod)
        e >>= 1
    return result


def _itrim(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    return a[: nz[-1] + 1] if len(nz) else a[:0]


def _imod(p: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Remainder of int-array polynomials mod p (b nonzero)."""
    a = _itrim(a.copy())
    b = _itrim(b)
    db = len(b) - 1
    binv = pow(int(b[-1]), -1, p)
    while len(a) - 1 >= db:
        c = (int(a[-1]) * binv) % p
        if c:
            a[len(a) - 1 - db :] = (a[len(a) - 1 - db :] - c * b) % p
        a = _itrim(a[:-1])
    return a


def _igcd(p: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    while len(b):
        a, b = b, _imod(p, a, b)
    return a


def _irreducible_prime(p: int, q: int, f_ints: tuple) -> bool:
    """Berlekamp criterion: squarefree f is irreducible over F_q iff the
    Frobenius map h -> h^q has a one-dimensional fixed space mod f."""
    from . import _linalg

    f = np.array(f_ints, dtype=np.int64)
    d = len(f) - 1
    deriv = _itrim((f[1:] * np.arange(1, d + 1)) % p)
    if len(deriv) == 0 or len(_igcd(p, f, deriv)) - 1 != 0:
        return False
    red = _reduction_matrix(p, f_ints)
    width = red.shape[1]

    def mulmod(a, b):
        conv = np.convolve(a, b) % p
        padded = np.zeros(width, dtype=np.int64)
        padded[: len(conv)] = conv
        return (red @ padded) % p

    w = np.zeros(d, dtype=np.int64)
    w[0] = 1
    x_poly = np.zeros(d, dtype=np.int64)
    x_poly[1] = 1
    e = q
    base = x_poly
    while e > 0:  # w = x^q mod f
        if e & 1:
            w = mulmod(w, base)
        base = mulmod(base, base)
        e >>= 1
    frob = np.empty((d, d), dtype=np.int64)
    col = np.zeros(d, dtype=np.int64)
    col[0] = 1
    for j in range(d):
        frob[:, j] = col
        col = mulmod(col, w)

    fixed = (frob - np.eye(d, dtype=np.int64)) % p
    return d - _linalg.rank_mod(fixed, p) == 1


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _coords(field, poly, length):
    vec = list(poly) + [field.zero()] * (length - len(poly))
    return vec[:length]


def pis_irreducible(field, f) -> bool:
    """Irreducibility test for a monic polynomial over a field with q elements.

    Prime fields go through the array-based Berlekamp count; other fields
    use a Rabin test on the q-power map (only ever needed at small degree).
    """
    d = pdeg(f)
    if d < 1:
        return False
    if d == 1:
        return True
    if pconst(field, f) == field.zero():
        return False
    if _is_prime_field(field):
        return _irreducible_prime(field.p, field.q, tuple(c.coeffs[0] for c in f))
    from . import _linalg

    q = field.q
    # Matrix of the q-power map h -> h^q mod f in the basis 1, x, ..., x^(d-1);
    # column j holds x^(j*q) mod f.
    w = ppowmod(field, pX(field), q, f)
    cols = []
    col = pone(field)
    for _ in range(d):
        cols.append(_coords(field, col, d))
        col = pmulmod(field, col, w, f)
    frob = [[cols[j][i] for j in range(d)] for i in range(d)]
    x_vec = _coords(field, pX(field), d)
    if _linalg.matvec(field, _linalg.matpow(field, frob, d), x_vec) != x_vec:
        return False
    for r in _prime_factors(d):
        v = _linalg.matvec(field, _linalg.matpow(field, frob, d // r), x_vec)
        g = pgcd(field, psub(field, ptrim(field, v), pX(field)), f)
        if pdeg(g) != 0:
            return False
    return True


def pcyclic_mul(field, a, b, n: int):
    """Product of two length-n coefficient vectors modulo x^n - 1 (cyclic convolution)."""
    if _is_prime_field(field):
        conv = np.convolve(_ints(a), _ints(b))
        out = np.zeros(n, dtype=np.int64)
        for start in range(0, len(conv), n):
            chunk = conv[start : start + n]
            out[: len(chunk)] += chunk
        out %= field.p
        return tuple(field.element((int(v),)) for v in out)
    zero = field.zero()
    out = [zero] * n
    for i, ca in enumerate(a):
        if ca == zero:
            continue
        for j, cb in enumerate(b):
            out[(i + j) % n] = out[(i + j) % n] + ca * cb
    return tuple(out)
