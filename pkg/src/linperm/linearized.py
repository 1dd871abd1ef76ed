"""Linearized polynomials over F_{q^n} and their compositional structure.

A linearized polynomial F(x) = sum f_i x^{[i]} (with x^{[i]} = x^{q^i},
coefficients in F_{q^n}, kept in reduced form with exactly n slots) induces
an F_q-linear map on F_{q^n}. When all coefficients lie in F_q, F corresponds
to its conventional q-associate f(x) = sum f_i x^i in F_q[x]/(x^n - 1), and
composition of maps matches ring multiplication of associates. That bridge
turns permutation testing into a unit test in the ring (equivalently: f is
coprime to x^n - 1, equivalently no product with a primitive idempotent
vanishes) and compositional inversion into componentwise inversion.
"""

from __future__ import annotations

import itertools
import re
import warnings
from dataclasses import dataclass
from functools import lru_cache

from . import _linalg
from .errors import (
    BadInput,
    CoefficientsNotInBaseField,
    ConditionNotMet,
    InternalError,
    NotAPermutation,
    SpecMismatch,
    ZeroCoefficient,
    ZeroNotInA,
)
from .fields import ExtElement, ExtFieldSpec, FieldElement, frobenius
from .idempotents import ComponentVector, IdempotentBasis, project, reconstruct
from .polyring import (
    RingElement,
    RingSpec,
    poly_egcd,
    ring_inverse,
    ring_is_unit,
    ring_mul,
)

__all__ = [
    "LinearizedPoly",
    "identity",
    "has_base_coeffs",
    "conventional_associate",
    "linearized_associate",
    "evaluate",
    "compose",
    "is_permutation",
    "is_permutation_gcd",
    "is_permutation_rank",
    "coefficient_sum_reject",
    "compositional_inverse",
    "is_involution",
    "sign_vector_involutions",
    "binomial_is_permutation",
    "pm_sufficient_conditions",
    "a_complete_check",
    "a_complete_sufficient_pm",
    "format_linearized",
    "parse_linearized",
]


@dataclass(frozen=True)
class LinearizedPoly:
    """Reduced-degree linearized polynomial: slot i holds the x^{[i]} coefficient."""

    spec: ExtFieldSpec
    coeffs: tuple[ExtElement, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.spec.n:
            raise BadInput(
                f"expected {self.spec.n} coefficients, got {len(self.coeffs)}"
            )
        for c in self.coeffs:
            if c.spec != self.spec:
                raise SpecMismatch("coefficient from a different field")

    @classmethod
    def from_coeffs(cls, spec: ExtFieldSpec, coeffs) -> "LinearizedPoly":
        return cls(spec, tuple(coeffs))

    @classmethod
    def monomial(cls, spec: ExtFieldSpec, c: ExtElement, i: int) -> "LinearizedPoly":
        if not 0 <= i < spec.n:
            raise BadInput(f"exponent {i} out of range")
        coeffs = [spec.zero()] * spec.n
        coeffs[i] = c
        return cls(spec, tuple(coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other):
        if self.spec != other.spec:
            raise SpecMismatch("operands from different fields")
        return LinearizedPoly(
            self.spec, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        if self.spec != other.spec:
            raise SpecMismatch("operands from different fields")
        return LinearizedPoly(
            self.spec, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return LinearizedPoly(self.spec, tuple(-c for c in self.coeffs))

    def __str__(self):
        return format_linearized(self)


def identity(spec: ExtFieldSpec) -> LinearizedPoly:
    """The identity map x, canonical coefficient vector (1, 0, ..., 0)."""
    return LinearizedPoly.monomial(spec, spec.one(), 0)


def has_base_coeffs(F: LinearizedPoly) -> bool:
    return all(c.in_base_field() for c in F.coeffs)


def _base_coeffs(F: LinearizedPoly) -> list[FieldElement]:
    if not has_base_coeffs(F):
        raise CoefficientsNotInBaseField(
            "operation requires coefficients in the base field"
        )
    return [c.base_value() for c in F.coeffs]


def conventional_associate(F: LinearizedPoly) -> RingElement:
    """f(x) = sum f_i x^i in F_q[x]/(x^n - 1); same coefficient vector."""
    ring = RingSpec(F.spec.base, F.spec.n)
    return ring.element(_base_coeffs(F))


def linearized_associate(f: RingElement, spec: ExtFieldSpec) -> LinearizedPoly:
    if f.spec.base != spec.base or f.spec.n != spec.n:
        raise SpecMismatch("ring and field spec disagree")
    return LinearizedPoly(spec, tuple(spec.embed(c) for c in f.coeffs))


def evaluate(F: LinearizedPoly, a: ExtElement) -> ExtElement:
    if a.spec != F.spec:
        raise SpecMismatch("argument from a different field")
    out = F.spec.zero()
    for i, c in enumerate(F.coeffs):
        if not c.is_zero():
            out = out + c * frobenius(a, i)
    return out


def compose(F: LinearizedPoly, G: LinearizedPoly) -> LinearizedPoly:
    """Symbolic product F(G(x)); slot k collects f_i * g_j^{q^i} over i+j = k mod n."""
    if F.spec != G.spec:
        raise SpecMismatch("operands from different fields")
    spec = F.spec
    n = spec.n
    out = [spec.zero()] * n
    for i, fi in enumerate(F.coeffs):
        if fi.is_zero():
            continue
        for j, gj in enumerate(G.coeffs):
            if gj.is_zero():
                continue
            k = (i + j) % n
            out[k] = out[k] + fi * frobenius(gj, i)
    return LinearizedPoly(spec, tuple(out))


def is_permutation(F: LinearizedPoly, basis: IdempotentBasis) -> bool:
    """Idempotent criterion: F permutes F_{q^n} iff no product f*e_i vanishes."""
    f = conventional_associate(F)
    if f.spec != basis.spec:
        raise SpecMismatch("basis from a different ring")
    zero = basis.spec.zero()
    return all(ring_mul(f, c.idempotent) != zero for c in basis.components)


def is_permutation_gcd(F: LinearizedPoly) -> bool:
    """Unit criterion: gcd(f, x^n - 1) constant."""
    return ring_is_unit(conventional_associate(F))


def is_permutation_rank(F: LinearizedPoly) -> bool:
    """Rank test for arbitrary coefficients: the induced F_q-linear map on
    F_{q^n} must have full rank n."""
    spec = F.spec
    n = spec.n
    support = [(i, c) for i, c in enumerate(F.coeffs) if not c.is_zero()]
    if not support:
        return False
    if spec.base.k == 1:
        # assemble the map's matrix directly: mul-by-c composed with Frob^i
        import numpy as np

        from .fields import _frobenius_power

        p = spec.base.p
        M = np.zeros((n, n), dtype=np.int64)
        for i, c in support:
            Fi = np.asarray(_frobenius_power(spec, i), dtype=np.int64)
            if c.in_base_field():
                M = (M + int(c.base_value().coeffs[0]) * Fi) % p
            else:
                M = (M + _mul_matrix(c) @ Fi) % p
        return _linalg.rank_mod(M, p) == n
    z = spec.gen()
    rows = []
    power = spec.one()
    for _ in range(n):
        image = spec.zero()
        for i, c in support:
            image = image + c * frobenius(power, i)
        rows.append(list(image.coeffs))
        power = power * z
    return _linalg.rank(spec.base, rows) == n


def _mul_matrix(c: ExtElement):
    """Matrix of a -> c*a in the power basis (prime base field), as int64."""
    import numpy as np

    spec = c.spec
    z = spec.gen()
    cols = []
    col = c
    for _ in range(spec.n):
        cols.append([fe.coeffs[0] for fe in col.coeffs])
        col = col * z
    return np.array(cols, dtype=np.int64).T


def coefficient_sum_reject(F: LinearizedPoly) -> bool:
    """True (reject) when the coefficients sum to zero in F_q; such F never permutes."""
    coeffs = _base_coeffs(F)
    total = F.spec.base.zero()
    for c in coeffs:
        total = total + c
    return total.is_zero()


def compositional_inverse(
    F: LinearizedPoly, basis: IdempotentBasis
) -> LinearizedPoly:
    """Inverse through the component decomposition.

    Project f onto the simple components, invert each entry modulo its factor
    and reconstruct; the result is cross-checked against the direct ring
    inverse before converting back to linearized form.
    """
    if not is_permutation(F, basis):
        raise NotAPermutation("polynomial is not a linear permutation")
    f = conventional_associate(F)
    v = project(f, basis)
    spec = basis.spec
    inv_entries = []
    for entry, comp in zip(v.entries, basis.components):
        g, u, _ = poly_egcd(entry.to_poly() % comp.factor, comp.factor)
        if g.degree != 0:
            raise InternalError("component entry not invertible mod its factor")
        u = u % comp.factor
        scale = g.coeffs[0].inverse()
        inv_entries.append(spec.element([c * scale for c in u.coeffs]))
    f_inv = reconstruct(ComponentVector(spec, tuple(inv_entries)), basis)
    if f_inv != ring_inverse(f):
        raise InternalError("component inverse disagrees with ring inverse")
    return linearized_associate(f_inv, F.spec)


def is_involution(F: LinearizedPoly) -> bool:
    """Whether F composed with itself is the identity map."""
    if has_base_coeffs(F):
        f = conventional_associate(F)
        return ring_mul(f, f) == f.spec.one()
    return compose(F, F) == identity(F.spec)


@lru_cache(maxsize=None)
def _ext_for_ring(spec: RingSpec) -> ExtFieldSpec:
    from .fields import find_irreducible

    return ExtFieldSpec(spec.base, spec.n, find_irreducible(spec.base, spec.n, 0))


def sign_vector_involutions(
    basis: IdempotentBasis, spec: ExtFieldSpec | None = None
) -> list[LinearizedPoly]:
    """All involutions of the form sum of +-e_i (associates of sign vectors).

    In odd characteristic the 2^t sign assignments give 2^t distinct
    involutions and exhaust the square roots of unity in the ring. In
    characteristic 2 the signs coincide and the construction collapses to
    the identity alone.
    """
    ring = basis.spec
    if spec is None:
        spec = _ext_for_ring(ring)
    if spec.base != ring.base or spec.n != ring.n:
        raise SpecMismatch("field spec does not match the basis ring")
    if ring.base.p == 2:
        warnings.warn(
            "characteristic 2: +1 = -1, sign vectors all give the identity",
            stacklevel=2,
        )
        return [identity(spec)]
    out = []
    one = ring.base.one()
    for signs in itertools.product((one, -one), repeat=basis.t):
        f = ring.zero()
        for s, comp in zip(signs, basis.components):
            f = f + _scale_ring(comp.idempotent, s)
        if ring_mul(f, f) != ring.one():
            raise InternalError("sign vector did not square to 1")
        out.append(linearized_associate(f, spec))
    return out


def _scale_ring(f: RingElement, s: FieldElement) -> RingElement:
    return f.spec.element([c * s for c in f.coeffs])


def binomial_is_permutation(
    fi: FieldElement, fj: FieldElement, i: int, j: int
) -> bool:
    """Binomial criterion: f_i x^{[i]} + f_j x^{[j]} permutes iff f_i + f_j != 0."""
    if fi.is_zero() or fj.is_zero():
        raise ZeroCoefficient("binomial coefficients must be nonzero")
    if not 0 <= i < j:
        raise BadInput("exponents must satisfy 0 <= i < j")
    return not (fi + fj).is_zero()


def _pm_condition_values(
    coeffs: list[FieldElement], p: int, m: int
) -> list[FieldElement]:
    """The m+1 left-hand sides of the p^m permutation conditions.

    Value 0 is the plain coefficient sum; value i (1 <= i <= m) is the
    constant term of f * e_i up to the stated weights: the sum over
    j < p^{m-i+1} of w_j f_{p^m - j p^{i-1}} with w_j = 1/p^{m-i} - 1/p^{m-i+1}
    when p | j and w_j = -1/p^{m-i+1} otherwise, subscripts mod p^m.
    """
    base = coeffs[0].spec
    n = p**m
    values = [sum(coeffs[1:], coeffs[0])]
    for i in range(1, m + 1):
        inv_big = base.embed_int(pow(p, m - i + 1, base.p)).inverse()
        inv_small = base.embed_int(pow(p, m - i, base.p)).inverse()
        w_div = inv_small - inv_big
        w_nondiv = -inv_big
        acc = base.zero()
        step = p ** (i - 1)
        for j in range(p ** (m - i + 1)):
            idx = (n - j * step) % n
            w = w_div if j % p == 0 else w_nondiv
            acc = acc + w * coeffs[idx]
        values.append(acc)
    return values


def pm_sufficient_conditions(F: LinearizedPoly, p: int, m: int) -> bool:
    """Sufficient permutation test for n = p^m via constant terms of f*e_i.

    True guarantees F is a permutation; False is inconclusive (the conditions
    only force the constant term of each product to be nonzero).
    """
    from .idempotents import cor4_condition

    if F.spec.n != p**m:
        raise BadInput(f"n = {F.spec.n} is not {p}^{m}")
    coeffs = _base_coeffs(F)
    if not cor4_condition(p, m, F.spec.base.q):
        raise ConditionNotMet(
            "closed-form idempotents are not primitive for these parameters"
        )
    return all(not v.is_zero() for v in _pm_condition_values(coeffs, p, m))


def a_complete_check(
    F: LinearizedPoly, A, basis: IdempotentBasis | None = None
) -> bool:
    """Exact A-complete test: F + lambda*x must permute for every lambda in A.

    Uses the idempotent criterion when coefficients stay in F_q, otherwise
    falls back to the rank test. A must contain 0 (so F itself is included).
    """
    A = list(A)
    spec = F.spec
    if not any(_as_ext(spec, lam).is_zero() for lam in A):
        raise ZeroNotInA("A must contain 0")
    for lam in A:
        shifted = F + LinearizedPoly.monomial(spec, _as_ext(spec, lam), 0)
        if basis is not None and has_base_coeffs(shifted):
            ok = is_permutation(shifted, basis)
        else:
            ok = is_permutation_rank(shifted)
        if not ok:
            return False
    return True


def _as_ext(spec: ExtFieldSpec, lam) -> ExtElement:
    if isinstance(lam, ExtElement):
        if lam.spec != spec:
            raise SpecMismatch("shift constant from a different field")
        return lam
    if isinstance(lam, FieldElement):
        return spec.embed(lam)
    return spec.embed_int(lam)


def a_complete_sufficient_pm(F: LinearizedPoly, A, p: int, m: int) -> bool:
    """Sufficient A-complete test for n = p^m, A a subset of F_q containing 0.

    Mirrors the p^m permutation conditions with shifted right-hand sides:
    for every lambda in A, the coefficient sum must avoid -lambda and each
    weighted sum must avoid -(1/p^{m-i} - 1/p^{m-i+1}) lambda. True
    guarantees A-completeness; False is inconclusive.
    """
    from .idempotents import cor4_condition

    if F.spec.n != p**m:
        raise BadInput(f"n = {F.spec.n} is not {p}^{m}")
    coeffs = _base_coeffs(F)
    base = F.spec.base
    lams = []
    for lam in A:
        e = _as_ext(F.spec, lam)
        if not e.in_base_field():
            raise BadInput("the sufficient conditions need A inside F_q")
        lams.append(e.base_value())
    if not any(lam.is_zero() for lam in lams):
        raise ZeroNotInA("A must contain 0")
    if not cor4_condition(p, m, base.q):
        raise ConditionNotMet(
            "closed-form idempotents are not primitive for these parameters"
        )
    values = _pm_condition_values(coeffs, p, m)
    for lam in lams:
        if values[0] == -lam:
            return False
        for i in range(1, m + 1):
            inv_big = base.embed_int(pow(p, m - i + 1, base.p)).inverse()
            inv_small = base.embed_int(pow(p, m - i, base.p)).inverse()
            if values[i] == -(inv_small - inv_big) * lam:
                return False
    return True


# --- text format -------------------------------------------------------------

_LIN_TERM_RE = re.compile(
    r"^(?:(?P<coeff>[^*x]+)\*?)?x(?:\^\[(?P<exp>\d+)\])?$"
)


def format_linearized(F: LinearizedPoly) -> str:
    """Terms "c*x^[i]" joined by " + ", descending i; "c*x" for i = 0.

    Unit coefficients are dropped ("x^[6]", "x"); the zero map prints "0".
    Coefficients outside F_q render in the bracketed coordinate form.
    """
    terms = []
    for i in range(F.spec.n - 1, -1, -1):
        c = F.coeffs[i]
        if c.is_zero():
            continue
        var = f"x^[{i}]" if i else "x"
        if c == F.spec.one():
            terms.append(var)
        elif c.in_base_field():
            terms.append(f"{c.base_value()}*{var}")
        else:
            terms.append(f"{c}*{var}")
    return " + ".join(terms) if terms else "0"


def parse_linearized(text: str, spec: ExtFieldSpec) -> LinearizedPoly:
    """Parse "c*x^[i]" sums; tolerates compact style "2x^[21]" and LaTeX braces."""
    cleaned = text.replace("{", "").replace("}", "").replace(" ", "")
    if cleaned in ("0", ""):
        return LinearizedPoly(spec, tuple([spec.zero()] * spec.n))
    coeffs = [spec.zero()] * spec.n
    for term in cleaned.split("+"):
        m = _LIN_TERM_RE.match(term)
        if m is None:
            raise BadInput(f"cannot parse term {term!r}")
        exp = int(m.group("exp")) if m.group("exp") is not None else 0
        if not 0 <= exp < spec.n:
            raise BadInput(f"exponent {exp} out of range for n = {spec.n}")
        raw = m.group("coeff")
        if raw is None:
            c = spec.one()
        else:
            c = _parse_ext_coeff(raw, spec)
        coeffs[exp] = coeffs[exp] + c
    return LinearizedPoly(spec, tuple(coeffs))


def _parse_ext_coeff(raw: str, spec: ExtFieldSpec) -> ExtElement:
    base = spec.base
    if "," in raw:
        parts = [int(v) for v in raw.split(",")]
        if len(parts) == base.k:
            return spec.embed(base.element(parts))
        if len(parts) == spec.n:
            raise BadInput("full extension coefficients need bracket syntax")
        raise BadInput(f"coefficient {raw!r} has wrong length")
    try:
        v = int(raw)
    except ValueError:
        raise BadInput(f"cannot parse coefficient {raw!r}") from None
    if base.k == 1:
        return spec.embed_int(v)
    # integers name F_q elements by base-p digits (3 over F_8 is y+1)
    if not 0 <= v < base.q:
        raise BadInput(f"coefficient {v} out of range for q = {base.q}")
    return spec.embed(base.from_int(v))
