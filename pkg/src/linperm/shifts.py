"""The alpha-cyclic shift S_alpha(F) = F(alpha x^{[1]}) and its orbit structure.

Composing on the right with alpha x^{[1]} rotates the coefficient vector one
slot while twisting by Frobenius powers of alpha. Applying it n times scales
every coefficient by the norm N(alpha), so orbit lengths are n times the
multiplicative order of the norm in F_q^*. Closed orbits of permutations,
shifted inverses and half-order involutions all fall out of that arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadInput,
    HypothesisViolated,
    InternalError,
    NotAPermutation,
    OddOrder,
    ZeroAlpha,
)
from .fields import ExtElement, element_order, frobenius, norm
from .linearized import LinearizedPoly, is_involution, is_permutation_rank

__all__ = [
    "ShiftClass",
    "alpha_shift",
    "alpha_shift_power",
    "cyclic_order",
    "is_maximal_order_element",
    "shift_class",
    "shifted_inverse",
    "half_order_involution",
]

ORBIT_CAP = 10**5


@dataclass(frozen=True)
class ShiftClass:
    """The orbit of a permutation under repeated alpha-shifts."""

    representative: LinearizedPoly
    alpha: ExtElement
    order: int
    members: tuple[LinearizedPoly, ...]


def _check_alpha(F: LinearizedPoly, alpha: ExtElement) -> None:
    if alpha.is_zero():
        raise ZeroAlpha("alpha must be nonzero")
    if alpha.spec != F.spec:
        raise BadInput("alpha from a different field")


def alpha_shift(F: LinearizedPoly, alpha: ExtElement) -> LinearizedPoly:
    """One shift: slot i+1 (mod n) of the result is alpha^{[i]} * f_i."""
    _check_alpha(F, alpha)
    spec = F.spec
    n = spec.n
    out = [spec.zero()] * n
    for i, c in enumerate(F.coeffs):
        if not c.is_zero():
            out[(i + 1) % n] = frobenius(alpha, i) * c
    return LinearizedPoly(spec, tuple(out))


def alpha_shift_power(F: LinearizedPoly, alpha: ExtElement, t: int) -> LinearizedPoly:
    if t < 0:
        raise BadInput("shift count must be nonnegative")
    for _ in range(t):
        F = alpha_shift(F, alpha)
    return F


def cyclic_order(F: LinearizedPoly, alpha: ExtElement) -> int:
    """Orbit length n*t, with t the order of norm(alpha) in F_q^*.

    S_alpha^n scales coefficients by the norm, so the first return to F
    happens after n*t steps and never earlier at a non-multiple of n unless
    the orbit degenerates; permutations never degenerate.
    """
    _check_alpha(F, alpha)
    if not is_permutation_rank(F):
        raise NotAPermutation("cyclic order is defined for permutations")
    return F.spec.n * element_order(norm(alpha))


def is_maximal_order_element(alpha: ExtElement) -> bool:
    """Whether orbits under alpha reach the maximal length (q-1)n."""
    if alpha.is_zero():
        raise ZeroAlpha("alpha must be nonzero")
    return element_order(norm(alpha)) == alpha.spec.base.q - 1


def shift_class(
    F: LinearizedPoly, alpha: ExtElement, cap: int = ORBIT_CAP
) -> ShiftClass:
    order = cyclic_order(F, alpha)
    if order > cap:
        raise BadInput(f"orbit of length {order} exceeds cap {cap}")
    members = [F]
    current = F
    for _ in range(order - 1):
        current = alpha_shift(current, alpha)
        members.append(current)
    if alpha_shift(current, alpha) != F:
        raise InternalError("orbit did not close at the computed order")
    if len(set(members)) != order:
        raise InternalError("orbit members not distinct")
    return ShiftClass(F, alpha, order, tuple(members))


def _check_prop10(spec, alpha: ExtElement) -> None:
    q = spec.base.q
    if alpha.is_zero():
        raise ZeroAlpha("alpha must be nonzero")
    from math import gcd

    if gcd(spec.n, q - 1) != 1:
        raise HypothesisViolated(f"gcd(n, q-1) = {gcd(spec.n, q - 1)} != 1")
    if not alpha.in_base_field():
        raise HypothesisViolated("alpha must lie in F_q")
    if q > 2 and element_order(alpha) != q - 1:
        raise HypothesisViolated("alpha must be primitive in F_q^*")


def shifted_inverse(
    F_inv: LinearizedPoly, alpha: ExtElement, t: int
) -> LinearizedPoly:
    """Inverse of the t-fold shift: S_alpha^{(q-1)n - t}(F_inv).

    Valid when gcd(n, q-1) = 1 and alpha is a primitive element of F_q^*,
    so that alpha x^{[1]} is central and its symbolic order is (q-1)n.
    """
    spec = F_inv.spec
    _check_prop10(spec, alpha)
    full = (spec.base.q - 1) * spec.n
    if not 0 <= t <= full:
        raise BadInput(f"t must lie in [0, {full}]")
    return alpha_shift_power(F_inv, alpha, full - t)


def half_order_involution(F: LinearizedPoly, alpha: ExtElement) -> LinearizedPoly:
    """S_alpha^{(q-1)n/2}(F) for an involution F; again an involution."""
    spec = F.spec
    _check_prop10(spec, alpha)
    full = (spec.base.q - 1) * spec.n
    if full % 2:
        raise OddOrder(f"(q-1)n = {full} is odd")
    if not is_involution(F):
        raise HypothesisViolated("F must be an involution")
    out = alpha_shift_power(F, alpha, full // 2)
    if not is_involution(out):
        raise InternalError("half-order shift failed to produce an involution")
    return out
