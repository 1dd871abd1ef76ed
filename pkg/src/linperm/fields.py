"""Exact arithmetic in F_p, F_q = F_p[y]/(m(y)) and F_{q^n} = F_q[z]/(g(z)).

All values are immutable; operations are pure functions, so everything in
this module is safe to share across threads.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import sympy

from . import _linalg, _polys
from .errors import (
    BadInput,
    InternalError,
    NotCoprime,
    SpecMismatch,
    ZeroInverse,
    ZeroOrder,
)

_MAX_PRIME = 1 << 16

# Fixed moduli for base fields the literature writes without picking one.
CANONICAL_BASE_MODULI = {
    (2, 3): (1, 1, 0, 1),  # y^3 + y + 1
}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Description of F_q with q = p^k; elements are residues mod ``base_modulus``."""

    p: int
    k: int = 1
    base_modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        if not _is_prime(self.p) or self.p >= _MAX_PRIME:
            raise BadInput(f"p = {self.p} must be a prime below 2^16")
        if self.k < 1:
            raise BadInput("extension degree k must be >= 1")
        if self.k == 1:
            if self.base_modulus is not None:
                raise BadInput("base_modulus must be absent when k = 1")
            return
        mod = self.base_modulus
        if mod is None or len(mod) != self.k + 1 or mod[-1] % self.p != 1:
            raise BadInput(f"base_modulus must be monic of degree {self.k}")
        object.__setattr__(self, "base_modulus", tuple(c % self.p for c in mod))
        prime = FieldSpec(self.p)
        poly = tuple(prime.element((c,)) for c in self.base_modulus)
        if not _polys.pis_irreducible(prime, poly):
            raise BadInput("base_modulus is reducible over F_p")

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def order(self) -> int:
        return self.q

    def element(self, coeffs) -> FieldElement:
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) > self.k:
            raise BadInput("too many coefficients for this field")
        if self.k == 1:
            return _interned(self)[coeffs[0] if coeffs else 0]
        return FieldElement(self, coeffs + (0,) * (self.k - len(coeffs)))

    def zero(self) -> FieldElement:
        return self.element(())

    def one(self) -> FieldElement:
        return self.element((1,))

    def embed_int(self, c: int) -> FieldElement:
        """Image of the integer c under Z -> F_q (c times the identity)."""
        return self.element((c,))

    def from_int(self, v: int) -> FieldElement:
        """Element with base-p digits of v as coordinates (0 <= v < q)."""
        digits = []
        for _ in range(self.k):
            digits.append(v % self.p)
            v //= self.p
        return self.element(digits)

    def elements(self):
        for v in range(self.q):
            yield self.from_int(v)


@lru_cache(maxsize=None)
def _base_mul_tails(spec: FieldSpec):
    """Coordinates of y^(k+i) mod base_modulus, i = 0..k-2."""
    p, k = spec.p, spec.k
    low = [-c % p for c in spec.base_modulus[:-1]]
    tails = [low]
    for _ in range(k - 2):
        prev = tails[-1]
        nxt = [0] + prev[:-1]
        for j in range(k):
            nxt[j] = (nxt[j] + prev[-1] * low[j]) % p
        tails.append(nxt)
    return tails


@dataclass(frozen=True)
class FieldElement:
    """Element of F_q as a length-k little-endian coordinate vector mod p."""

    spec: FieldSpec
    coeffs: tuple[int, ...]

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.spec != self.spec:
            raise SpecMismatch(f"cannot combine {self!r} with {other!r}")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        self._check(other)
        p = self.spec.p
        if self.spec.k == 1:
            return _interned(self.spec)[(self.coeffs[0] + other.coeffs[0]) % p]
        return FieldElement(
            self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check(other)
        p = self.spec.p
        if self.spec.k == 1:
            return _interned(self.spec)[(self.coeffs[0] - other.coeffs[0]) % p]
        return FieldElement(
            self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        p = self.spec.p
        if self.spec.k == 1:
            return _interned(self.spec)[-self.coeffs[0] % p]
        return FieldElement(self.spec, tuple(-c % p for c in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        spec = self.spec
        p, k = spec.p, spec.k
        if k == 1:
            return _interned(spec)[(self.coeffs[0] * other.coeffs[0]) % p]
        full = [0] * (2 * k - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    full[i + j] = (full[i + j] + a * b) % p
        tails = _base_mul_tails(spec)
        out = full[:k]
        for i, c in enumerate(full[k:]):
            if c:
                tail = tails[i]
                for j in range(k):
                    out[j] = (out[j] + c * tail[j]) % p
        return FieldElement(spec, tuple(out))

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroInverse("0 has no multiplicative inverse")
        return self ** (self.spec.q - 2)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.spec.one()
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __str__(self):
        if self.spec.k == 1:
            return str(self.coeffs[0])
        return ",".join(str(c) for c in self.coeffs)


@lru_cache(maxsize=None)
def _interned(spec: FieldSpec) -> tuple:
    """The p elements of a prime field, shared to avoid churn in hot loops."""
    return tuple(FieldElement(spec, (v,)) for v in range(spec.p))


@dataclass(frozen=True)
class ExtFieldSpec:
    """Description of F_{q^n} = F_q[z]/(g(z)) over a base FieldSpec."""

    base: FieldSpec
    n: int
    ext_modulus: tuple[FieldElement, ...]

    # Splitting fields built internally for factoring x^n - 1 relax this.
    _require_coprime = True

    def __post_init__(self):
        if self.n < 1:
            raise BadInput("extension degree n must be >= 1")
        if type(self)._require_coprime and _gcd(self.n, self.base.p) != 1:
            raise BadInput(f"gcd(n, p) must be 1; got n = {self.n}, p = {self.base.p}")
        mod = tuple(self.ext_modulus)
        object.__setattr__(self, "ext_modulus", mod)
        if len(mod) != self.n + 1 or mod[-1] != self.base.one():
            raise BadInput(f"ext_modulus must be monic of degree {self.n}")
        if any(c.spec != self.base for c in mod):
            raise SpecMismatch("ext_modulus coefficients not in the base field")
        if not _polys.pis_irreducible(self.base, mod):
            raise BadInput("ext_modulus is reducible over F_q")

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def order(self) -> int:
        return self.base.q**self.n

    def element(self, coeffs) -> ExtElement:
        coeffs = tuple(
            c if isinstance(c, FieldElement) else self.base.embed_int(c) for c in coeffs
        )
        if len(coeffs) > self.n:
            raise BadInput("too many coefficients for this extension")
        for c in coeffs:
            if c.spec != self.base:
                raise SpecMismatch("coefficient from a different base field")
        return ExtElement(self, coeffs + (self.base.zero(),) * (self.n - len(coeffs)))

    def zero(self) -> ExtElement:
        return self.element(())

    def one(self) -> ExtElement:
        return self.element((1,))

    def gen(self) -> ExtElement:
        """The class of z, the adjoined root of ext_modulus."""
        return self.element((0, 1))

    def embed(self, a: FieldElement) -> ExtElement:
        if a.spec != self.base:
            raise SpecMismatch("element from a different base field")
        return self.element((a,))

    def embed_int(self, c: int) -> ExtElement:
        return self.element((c,))

    def from_int(self, v: int) -> ExtElement:
        digits = []
        for _ in range(self.n):
            digits.append(self.base.from_int(v % self.base.q))
            v //= self.base.q
        return self.element(digits)

    def elements(self):
        for combo in itertools.product(self.base.elements(), repeat=self.n):
            yield self.element(tuple(reversed(combo)))


@lru_cache(maxsize=None)
def _ext_mul_tails(spec: ExtFieldSpec):
    """Coordinates of z^(n+i) mod ext_modulus, i = 0..n-2 (generic path)."""
    base, n = spec.base, spec.n
    low = [-c for c in spec.ext_modulus[:-1]]
    tails = [low]
    for _ in range(n - 2):
        prev = tails[-1]
        nxt = [base.zero()] + prev[:-1]
        for j in range(n):
            nxt[j] = nxt[j] + prev[-1] * low[j]
        tails.append(nxt)
    return tails


@lru_cache(maxsize=None)
def _ext_mod_ints(spec: ExtFieldSpec) -> tuple:
    return tuple(c.coeffs[0] for c in spec.ext_modulus)


@dataclass(frozen=True)
class ExtElement:
    """Element of F_{q^n} as a length-n little-endian vector over F_q."""

    spec: ExtFieldSpec
    coeffs: tuple[FieldElement, ...]

    def _check(self, other):
        if not isinstance(other, ExtElement) or other.spec != self.spec:
            raise SpecMismatch(f"cannot combine {self!r} with {other!r}")

    def is_zero(self) -> bool:
        for c in self.coeffs:
            if any(c.coeffs):
                return False
        return True

    def in_base_field(self) -> bool:
        for c in self.coeffs[1:]:
            if any(c.coeffs):
                return False
        return True

    def base_value(self) -> FieldElement:
        if not self.in_base_field():
            raise InternalError(f"{self} does not lie in the base field")
        return self.coeffs[0]

    def __add__(self, other):
        self._check(other)
        return ExtElement(
            self.spec, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check(other)
        return ExtElement(
            self.spec, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return ExtElement(self.spec, tuple(-c for c in self.coeffs))

    def scale(self, s: FieldElement) -> ExtElement:
        if s.spec != self.spec.base:
            raise SpecMismatch("scalar from a different base field")
        return ExtElement(self.spec, tuple(c * s for c in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        spec = self.spec
        n = spec.n
        if spec.base.k == 1:
            p = spec.base.p
            a = np.array([c.coeffs[0] for c in self.coeffs], dtype=np.int64)
            b = np.array([c.coeffs[0] for c in other.coeffs], dtype=np.int64)
            if n == 1:
                return spec.element(((int(a[0]) * int(b[0])) % p,))
            red = _polys._reduction_matrix(p, _ext_mod_ints(spec))
            conv = np.convolve(a, b) % p
            padded = np.zeros(red.shape[1], dtype=np.int64)
            padded[: len(conv)] = conv
            out = (red @ padded) % p
            return ExtElement(
                spec, tuple(spec.base.element((int(v),)) for v in out)
            )
        zero = spec.base.zero()
        full = [zero] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                full[i + j] = full[i + j] + a * b
        out = full[:n]
        if n > 1:
            tails = _ext_mul_tails(spec)
            for i, c in enumerate(full[n:]):
                if not c.is_zero():
                    tail = tails[i]
                    for j in range(n):
                        out[j] = out[j] + c * tail[j]
        return ExtElement(spec, tuple(out))

    def inverse(self) -> ExtElement:
        if self.is_zero():
            raise ZeroInverse("0 has no multiplicative inverse")
        base = self.spec.base
        poly = _polys.ptrim(base, self.coeffs)
        g, u, _ = _polys.pegcd(base, poly, self.spec.ext_modulus)
        if _polys.pdeg(g) != 0:
            raise InternalError("gcd with an irreducible modulus must be constant")
        return self.spec.element(_polys.pscale(base, u, g[0].inverse()))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        spec = self.spec
        if spec.base.k == 1 and spec.n > 1:
            p = spec.base.p
            red = _polys._reduction_matrix(p, _ext_mod_ints(spec))
            acc = np.zeros(spec.n, dtype=np.int64)
            acc[0] = 1
            sq = np.array([c.coeffs[0] for c in self.coeffs], dtype=np.int64)
            width = red.shape[1]

            def redmul(a, b):
                conv = np.convolve(a, b) % p
                padded = np.zeros(width, dtype=np.int64)
                padded[: len(conv)] = conv
                return (red @ padded) % p

            while e > 0:
                if e & 1:
                    acc = redmul(acc, sq)
                sq = redmul(sq, sq)
                e >>= 1
            return spec.element(tuple(int(v) for v in acc))
        result = self.spec.one()
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# --- spec-surface aliases for the elementwise operations ---------------------


def field_add(a, b):
    return a + b


def field_mul(a, b):
    return a * b


def field_neg(a):
    return -a


def field_inv(a):
    return a.inverse()


# --- Frobenius and norm ------------------------------------------------------


@lru_cache(maxsize=None)
def _frobenius_matrix(spec: ExtFieldSpec):
    """Matrix of a -> a^q on F_{q^n} in the power basis (columns are (z^j)^q)."""
    base, n = spec.base, spec.n
    w = _polys.ppowmod(base, _polys.pX(base), spec.q, spec.ext_modulus)
    cols = []
    col = _polys.pone(base)
    for _ in range(n):
        cols.append(_polys._coords(base, col, n))
        col = _polys.pmulmod(base, col, w, spec.ext_modulus)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def _frobenius_power(spec: ExtFieldSpec, i: int):
    if i <= 1:
        return _linalg.matpow(spec.base, _frobenius_matrix(spec), i)
    return _linalg.matmul(
        spec.base, _frobenius_power(spec, i - 1), _frobenius_power(spec, 1)
    )


def frobenius(a: ExtElement, i: int) -> ExtElement:
    """a^(q^i) for 0 <= i < n."""
    spec = a.spec
    if not 0 <= i < spec.n:
        raise BadInput(f"frobenius exponent {i} outside [0, {spec.n})")
    if i == 0:
        return a
    vec = _linalg.matvec(spec.base, _frobenius_power(spec, i), list(a.coeffs))
    return ExtElement(spec, tuple(vec))


def norm(a: ExtElement) -> FieldElement:
    """Field norm N_{F_{q^n}/F_q}(a) = a^((q^n-1)/(q-1))."""
    spec = a.spec
    if a.is_zero():
        return spec.base.zero()
    b = a ** ((spec.order - 1) // (spec.q - 1))
    if not b.in_base_field():
        raise InternalError("norm value escaped the base field")
    return b.coeffs[0]


# --- orders and primitive elements -------------------------------------------


def integer_order_mod(q: int, n: int) -> int:
    """Least m >= 1 with q^m = 1 (mod n)."""
    if n < 1 or _gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    if n == 1:
        return 1
    m, acc = 1, q % n
    while acc != 1:
        acc = (acc * q) % n
        m += 1
    return m


def element_order(a) -> int:
    """Multiplicative order of a nonzero field element."""
    if a.is_zero():
        raise ZeroOrder("0 has no multiplicative order")
    group = a.spec.order - 1
    one = a.spec.one()
    o = group
    for prime in sympy.factorint(group):
        while o % prime == 0 and a ** (o // prime) == one:
            o //= prime
    return o


def find_primitive_element(spec):
    """First element of multiplicative order q-1 (resp. q^n-1) in a deterministic scan."""
    group = spec.order - 1
    for v in range(1, spec.order):
        a = spec.from_int(v)
        if element_order(a) == group:
            return a
    raise InternalError("no primitive element found")  # pragma: no cover


def element_of_order(spec, n: int):
    """First element of exact multiplicative order n in a deterministic scan.

    Avoids factoring the full group order: candidates u are mapped to
    u^((order-1)/n), whose order always divides n, and the order is then
    confirmed against the prime factors of n alone.
    """
    group = spec.order - 1
    if n == 1:
        return spec.one()
    if group % n != 0:
        raise BadInput(f"no element of order {n}: {n} does not divide {group}")
    cofactor = group // n
    radicals = [n // r for r in _polys._prime_factors(n)]
    one = spec.one()
    for v in range(2, spec.order):
        zeta = spec.from_int(v) ** cofactor
        if zeta != one and all(zeta**e != one for e in radicals):
            return zeta
    raise InternalError("no element of the requested order found")  # pragma: no cover


# --- irreducible polynomials and default specs -------------------------------


def find_irreducible(base: FieldSpec, degree: int, seed: int = 0):
    """Deterministic seeded search for a monic irreducible of exact degree."""
    if degree < 1:
        raise BadInput("degree must be >= 1")
    rng = random.Random(f"{seed}:{base.p}:{base.k}:{degree}")
    one = base.one()
    while True:
        coeffs = tuple(base.from_int(rng.randrange(base.q)) for _ in range(degree))
        candidate = coeffs + (one,)
        if _polys.pis_irreducible(base, candidate):
            return candidate


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            if q != 1:
                raise BadInput("q must be a prime power")
            return p, k
    raise BadInput("q must be >= 2")


@lru_cache(maxsize=None)
def base_field(q: int) -> FieldSpec:
    """F_q with the canonical modulus (F_8 uses y^3 + y + 1)."""
    p, k = _prime_power(q)
    if k == 1:
        return FieldSpec(p)
    mod = CANONICAL_BASE_MODULI.get((p, k))
    if mod is None:
        prime = FieldSpec(p)
        mod = tuple(c.coeffs[0] for c in find_irreducible(prime, k, seed=0))
    return FieldSpec(p, k, mod)


@lru_cache(maxsize=None)
def extension_field(q: int, n: int, seed: int = 0) -> ExtFieldSpec:
    """F_{q^n} over base_field(q) with a seeded deterministic modulus."""
    base = base_field(q)
    if base.k == 1 and seed == 0:
        canned = CANONICAL_BASE_MODULI.get((base.p, n))
        if canned is not None:
            return ExtFieldSpec(
                base, n, tuple(base.element((c,)) for c in canned)
            )
    return ExtFieldSpec(base, n, find_irreducible(base, n, seed))
