"""Arithmetic in F_q[x] and in the quotient ring R_{q,n} = F_q[x]/(x^n - 1).

Includes extended Euclid, unit testing/inversion, q-cyclotomic cosets and
the factorization of x^n - 1 through an explicit n-th root of unity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from . import _polys
from .errors import (
    BadInput,
    BothZero,
    InternalError,
    NotAUnit,
    SpecMismatch,
)
from .fields import (
    ExtFieldSpec,
    FieldElement,
    FieldSpec,
    _gcd,
    element_of_order,
    find_irreducible,
    integer_order_mod,
)


@dataclass(frozen=True)
class Poly:
    """Dense polynomial over F_q; little-endian coefficients, no trailing zeros."""

    spec: FieldSpec
    coeffs: tuple[FieldElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _polys.ptrim(self.spec, self.coeffs))

    @classmethod
    def from_ints(cls, spec: FieldSpec, ints) -> Poly:
        return cls(spec, tuple(spec.embed_int(c) for c in ints))

    @classmethod
    def zero(cls, spec: FieldSpec) -> Poly:
        return cls(spec, ())

    @classmethod
    def one(cls, spec: FieldSpec) -> Poly:
        return cls(spec, (spec.one(),))

    @classmethod
    def x(cls, spec: FieldSpec) -> Poly:
        return cls(spec, (spec.zero(), spec.one()))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other):
        if not isinstance(other, Poly) or other.spec != self.spec:
            raise SpecMismatch("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        return Poly(self.spec, _polys.padd(self.spec, self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return Poly(self.spec, _polys.psub(self.spec, self.coeffs, other.coeffs))

    def __neg__(self):
        return Poly(self.spec, _polys.pneg(self.spec, self.coeffs))

    def __mul__(self, other):
        self._check(other)
        return Poly(self.spec, _polys.pmul(self.spec, self.coeffs, other.coeffs))

    def __divmod__(self, other):
        self._check(other)
        q, r = _polys.pdivmod(self.spec, self.coeffs, other.coeffs)
        return Poly(self.spec, q), Poly(self.spec, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        return Poly(self.spec, _polys.pmonic(self.spec, self.coeffs))

    def derivative(self) -> Poly:
        out = [self.spec.embed_int(i) * c for i, c in enumerate(self.coeffs)][1:]
        return Poly(self.spec, tuple(out))

    def __str__(self):
        return format_poly(self.coeffs)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    a._check(b)
    return Poly(a.spec, _polys.pgcd(a.spec, a.coeffs, b.coeffs))


def poly_egcd(a: Poly, b: Poly):
    """Extended gcd: (g, u, v) with u*a + v*b = g, g monic."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    a._check(b)
    g, u, v = _polys.pegcd(a.spec, a.coeffs, b.coeffs)
    return Poly(a.spec, g), Poly(a.spec, u), Poly(a.spec, v)


@dataclass(frozen=True)
class RingSpec:
    """The quotient ring R_{q,n} = F_q[x]/(x^n - 1); requires gcd(n, q) = 1."""

    base: FieldSpec
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise BadInput("n must be >= 1")
        if _gcd(self.n, self.base.p) != 1:
            raise BadInput(
                f"gcd(n, q) must be 1; got n = {self.n}, q = {self.base.q}"
            )

    def element(self, coeffs) -> RingElement:
        """Ring element from coefficients (ints or field elements), folded mod x^n - 1."""
        out = [self.base.zero()] * self.n
        for i, c in enumerate(coeffs):
            if not isinstance(c, FieldElement):
                c = self.base.embed_int(c)
            elif c.spec != self.base:
                raise SpecMismatch("coefficient from a different field")
            out[i % self.n] = out[i % self.n] + c
        return RingElement(self, tuple(out))

    def from_poly(self, f: Poly) -> RingElement:
        if f.spec != self.base:
            raise SpecMismatch("polynomial over a different field")
        return self.element(f.coeffs)

    def zero(self) -> RingElement:
        return self.element(())

    def one(self) -> RingElement:
        return self.element((1,))

    def x(self) -> RingElement:
        return self.element((0, 1))

    def modulus(self) -> Poly:
        """x^n - 1 as a polynomial over F_q."""
        coeffs = [-self.base.one()] + [self.base.zero()] * (self.n - 1) + [self.base.one()]
        return Poly(self.base, tuple(coeffs))


@dataclass(frozen=True)
class RingElement:
    """Class of a polynomial of degree < n in R_{q,n}."""

    spec: RingSpec
    coeffs: tuple[FieldElement, ...]

    def _check(self, other):
        if not isinstance(other, RingElement) or other.spec != self.spec:
            raise SpecMismatch("elements of different rings")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def to_poly(self) -> Poly:
        return Poly(self.spec.base, self.coeffs)

    def __add__(self, other):
        self._check(other)
        return RingElement(
            self.spec, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check(other)
        return RingElement(
            self.spec, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return RingElement(self.spec, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        return RingElement(
            self.spec,
            _polys.pcyclic_mul(self.spec.base, self.coeffs, other.coeffs, self.spec.n),
        )

    def __str__(self):
        return format_poly(self.coeffs)


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def ring_is_unit(f: RingElement) -> bool:
    """True iff gcd(f, x^n - 1) = 1 over F_q."""
    if f.is_zero():
        return False
    g = poly_gcd(f.to_poly(), f.spec.modulus())
    return g.degree == 0


def ring_inverse(f: RingElement) -> RingElement:
    """Inverse of a unit in R_{q,n}."""
    if f.is_zero():
        raise NotAUnit("0 is not a unit")
    g, u, _ = poly_egcd(f.to_poly(), f.spec.modulus())
    if g.degree != 0:
        raise NotAUnit(f"gcd(f, x^n - 1) = {g} != 1")
    return f.spec.from_poly(u)


def shift_mul_x(f: RingElement, t: int) -> RingElement:
    """x^t * f mod x^n - 1: cyclic rotation of the coefficients by t."""
    if t < 0:
        raise BadInput("shift exponent must be >= 0")
    n = f.spec.n
    t %= n
    return RingElement(f.spec, f.coeffs[-t:] + f.coeffs[:-t] if t else f.coeffs)


# --- cyclotomic cosets and the factorization of x^n - 1 ----------------------


@dataclass(frozen=True)
class CyclotomicCoset:
    """Orbit of an exponent under multiplication by q mod n."""

    representative: int
    members: tuple[int, ...]


def cyclotomic_cosets(spec: RingSpec) -> list[CyclotomicCoset]:
    """Partition of {0, ..., n-1} into q-cyclotomic cosets, sorted by representative."""
    q, n = spec.base.q, spec.n
    seen = [False] * n
    cosets = []
    for s in range(n):
        if seen[s]:
            continue
        members = []
        j = s
        while not seen[j]:
            seen[j] = True
            members.append(j)
            j = (j * q) % n
        cosets.append(CyclotomicCoset(min(members), tuple(sorted(members))))
    cosets.sort(key=lambda c: c.representative)
    return cosets


class _SplittingFieldSpec(ExtFieldSpec):
    """F_{q^m} used only to host the n-th roots of unity; m need not be coprime to p."""

    _require_coprime = False


@lru_cache(maxsize=None)
def splitting_field(spec: RingSpec) -> ExtFieldSpec | FieldSpec:
    """Smallest field F_{q^m} containing the n-th roots of unity (F_q itself if m = 1)."""
    m = integer_order_mod(spec.base.q, spec.n)
    if m == 1:
        return spec.base
    return _SplittingFieldSpec(spec.base, m, find_irreducible(spec.base, m, seed=0))


def _linear_factor_product(field, roots):
    """Monic product of (x - r) over the given roots; coefficients in ``field``."""
    prod = [field.one()]
    for r in roots:
        nxt = [field.zero()] * (len(prod) + 1)
        for i, c in enumerate(prod):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - r * c
        prod = nxt
    return prod


def _linear_factor_product_prime(work: ExtFieldSpec, roots) -> "np.ndarray":
    """Array form of _linear_factor_product for splitting fields over a prime F_q.

    Rows are polynomial coefficients, each row a length-m coordinate vector.
    """
    import numpy as np

    from .fields import _ext_mod_ints

    p = work.base.p
    m = work.n
    red = _polys._reduction_matrix(p, _ext_mod_ints(work))
    width = red.shape[1]
    root_arrays = [
        np.array([c.coeffs[0] for c in r.coeffs], dtype=np.int64) for r in roots
    ]
    prod = np.zeros((1, m), dtype=np.int64)
    prod[0, 0] = 1
    for r in root_arrays:
        r_times = np.zeros_like(prod)
        for i in range(prod.shape[0]):
            conv = np.convolve(r, prod[i]) % p
            padded = np.zeros(width, dtype=np.int64)
            padded[: len(conv)] = conv
            r_times[i] = (red @ padded) % p
        nxt = np.zeros((prod.shape[0] + 1, m), dtype=np.int64)
        nxt[1:] = prod
        nxt[:-1] = (nxt[:-1] - r_times) % p
        prod = nxt
    return prod


@lru_cache(maxsize=None)
def factor_xn_minus_1(spec: RingSpec) -> list[tuple[CyclotomicCoset, Poly]]:
    """Irreducible factors of x^n - 1 over F_q, one per cyclotomic coset.

    The factor attached to coset C_s is the product of (x - zeta^j) over
    j in C_s, computed in the splitting field F_{q^m} with zeta a fixed
    n-th root of unity, then projected back into F_q.
    """
    base, n = spec.base, spec.n
    work = splitting_field(spec)
    zeta = element_of_order(work, n)
    powers = [work.one()]
    for _ in range(n - 1):
        powers.append(powers[-1] * zeta)

    out = []
    for coset in cyclotomic_cosets(spec):
        roots = [powers[j] for j in coset.members]
        if work is base:
            coeffs = tuple(_linear_factor_product(base, roots))
        elif base.k == 1:
            rows = _linear_factor_product_prime(work, roots)
            if rows[:, 1:].any():
                raise InternalError(
                    "factor coefficient escaped F_q; arithmetic is broken"
                )
            coeffs = tuple(base.element((int(v),)) for v in rows[:, 0])
        else:
            prod = _linear_factor_product(work, roots)
            for c in prod:
                if not c.in_base_field():
                    raise InternalError(
                        "factor coefficient escaped F_q; arithmetic is broken"
                    )
            coeffs = tuple(c.coeffs[0] for c in prod)
        out.append((coset, Poly(base, coeffs)))

    product = Poly.one(base)
    for _, f in out:
        product = product * f
    if product != spec.modulus():
        raise InternalError("product of coset factors is not x^n - 1")
    return out


# --- text format -------------------------------------------------------------

_TERM_RE = re.compile(
    r"^(?:(?P<coeff>[\d,]+)\*?)?(?P<x>x)(?:\^(?P<exp>\d+))?$|^(?P<const>[\d,]+)$"
)


def format_poly(coeffs) -> str:
    """Canonical text form: 'c*x^e' terms joined by '+', descending exponents."""
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c.is_zero():
            continue
        c_str = str(c)
        if e == 0:
            terms.append(c_str)
        else:
            x_part = "x" if e == 1 else f"x^{e}"
            terms.append(x_part if c == c.spec.one() else f"{c_str}*{x_part}")
    return "+".join(terms) if terms else "0"


def _parse_field_coeff(text: str, spec: FieldSpec) -> FieldElement:
    parts = [int(v) for v in text.split(",")]
    if len(parts) == 1:
        return spec.embed_int(parts[0])
    return spec.element(parts)


def parse_poly(text: str, spec: FieldSpec) -> Poly:
    """Parse the term format (also accepts the dense '[c0,c1,...]' form)."""
    text = text.replace(" ", "")
    if not text:
        raise BadInput("empty polynomial string")
    if text == "0":
        return Poly.zero(spec)
    if text.startswith("[") and text.endswith("]"):
        ints = [int(v) for v in text[1:-1].split(",")] if text != "[]" else []
        return Poly.from_ints(spec, ints)
    acc: dict[int, FieldElement] = {}
    for term in text.split("+"):
        m = _TERM_RE.match(term)
        if not m:
            raise BadInput(f"cannot parse polynomial term {term!r}")
        if m.group("const") is not None:
            e, c = 0, _parse_field_coeff(m.group("const"), spec)
        else:
            e = int(m.group("exp")) if m.group("exp") else 1
            raw = m.group("coeff")
            c = spec.one() if raw is None else _parse_field_coeff(raw, spec)
        acc[e] = acc.get(e, spec.zero()) + c
    coeffs = [spec.zero()] * (max(acc) + 1)
    for e, c in acc.items():
        coeffs[e] = c
    return Poly(spec, tuple(coeffs))


def parse_ring_element(text: str, spec: RingSpec) -> RingElement:
    return spec.from_poly(parse_poly(text, spec.base))
