"""Cyclic shift maps on linearized permutations and their order structure."""

import random

import pytest

from linperm import (
    LinearizedPoly,
    RingSpec,
    alpha_shift,
    alpha_shift_power,
    base_field,
    compose,
    compositional_inverse,
    cyclic_order,
    element_order,
    evaluate,
    extension_field,
    half_order_involution,
    identity,
    is_involution,
    is_maximal_order_element,
    is_permutation_rank,
    norm,
    parse_linearized,
    primitive_idempotents,
    shift_class,
    shifted_inverse,
    sign_vector_involutions,
)
from linperm.errors import HypothesisViolated, NotAPermutation, OddOrder

E35 = extension_field(3, 5)
R35 = RingSpec(base_field(3), 5)


def rand_perm(rng, ext, basis):
    from linperm import is_permutation

    q = ext.base.q
    while True:
        F = LinearizedPoly(
            ext,
            tuple(ext.embed(ext.base.from_int(rng.randrange(q))) for _ in range(ext.n)),
        )
        if is_permutation(F, basis):
            return F


def test_shift_slots():
    z = E35.gen()
    F = parse_linearized("2x^[4]+x", E35)
    S = alpha_shift(F, z)
    # slot i+1 carries frobenius(alpha, i) * f_i
    assert S.coeffs[1] == z
    from linperm import frobenius

    assert S.coeffs[0] == frobenius(z, 4).scale(E35.base.embed_int(2))


def test_shift_is_composition_with_ax():
    rng = random.Random(2)
    z = E35.gen()
    A = LinearizedPoly.monomial(E35, z, 1)
    for _ in range(5):
        F = LinearizedPoly(E35, tuple(E35.from_int(rng.randrange(243)) for _ in range(5)))
        assert alpha_shift(F, z) == compose(F, A)


def test_shift_power_n_scales_by_norm():
    rng = random.Random(7)
    for p, n in [(3, 5), (2, 3), (5, 2), (11, 9)]:
        E = extension_field(p, n)
        alpha = E.from_int(rng.randrange(1, E.order))
        F = LinearizedPoly(E, tuple(E.from_int(rng.randrange(E.order)) for _ in range(n)))
        na = norm(alpha)
        want = LinearizedPoly(E, tuple(c.scale(na) for c in F.coeffs))
        assert alpha_shift_power(F, alpha, n) == want


def test_cyclic_order_matches_orbit():
    basis = primitive_idempotents(R35)
    rng = random.Random(19)
    F = rand_perm(rng, E35, basis)
    for v in range(1, 243):
        alpha = E35.from_int(v)
        t = element_order(norm(alpha))
        k = cyclic_order(F, alpha)
        assert k == 5 * t
        # iterate the orbit explicitly
        cur = alpha_shift(F, alpha)
        steps = 1
        while cur != F:
            cur = alpha_shift(cur, alpha)
            steps += 1
        assert steps == k


def test_cyclic_order_small_fields():
    for p, n in [(2, 3), (5, 2)]:
        E = extension_field(p, n)
        basis = primitive_idempotents(RingSpec(base_field(p), n))
        F = rand_perm(random.Random(4), E, basis)
        for v in range(1, E.order):
            alpha = E.from_int(v)
            assert cyclic_order(F, alpha) == n * element_order(norm(alpha))


def test_maximal_order():
    q = 3
    got = sum(
        1 for v in range(1, 243) if is_maximal_order_element(E35.from_int(v))
    )
    # alpha has maximal shift order iff its norm generates F_q^*
    want = sum(
        1
        for v in range(1, 243)
        if element_order(norm(E35.from_int(v))) == q - 1
    )
    assert got == want > 0


def test_shift_class_closure():
    basis = primitive_idempotents(R35)
    F = rand_perm(random.Random(31), E35, basis)
    alpha = E35.from_int(3)
    cls = shift_class(F, alpha)
    assert len(cls.members) == cyclic_order(F, alpha)
    assert len(set(cls.members)) == len(cls.members)
    assert all(is_permutation_rank(G) for G in cls.members)
    assert F in cls.members


def test_shift_preserves_permutation():
    basis = primitive_idempotents(R35)
    F = rand_perm(random.Random(41), E35, basis)
    G = parse_linearized("x^[1]+2x", E35)  # singular, x - 1 divides x^5 - 1
    z = E35.gen()
    assert is_permutation_rank(alpha_shift(F, z))
    assert not is_permutation_rank(alpha_shift(G, z))


def test_cyclic_order_rejects_non_permutation():
    G = parse_linearized("x^[1]+2x", E35)
    with pytest.raises(NotAPermutation):
        cyclic_order(G, E35.one())


def test_shifted_inverse():
    basis = primitive_idempotents(R35)
    rng = random.Random(53)
    alpha = E35.embed(base_field(3).embed_int(2))  # primitive in F_3^*
    ident = identity(E35)
    for _ in range(10):
        F = rand_perm(rng, E35, basis)
        Finv = compositional_inverse(F, basis)
        for t in range(0, 11):
            Ft = alpha_shift_power(F, alpha, t)
            Gt = shifted_inverse(Finv, alpha, t)
            assert compose(Ft, Gt) == ident
            assert compose(Gt, Ft) == ident


def test_shifted_inverse_hypotheses():
    basis = primitive_idempotents(R35)
    F = rand_perm(random.Random(61), E35, basis)
    Finv = compositional_inverse(F, basis)
    with pytest.raises(HypothesisViolated):
        shifted_inverse(Finv, E35.gen(), 1)  # alpha not in F_q
    with pytest.raises(HypothesisViolated):
        shifted_inverse(Finv, E35.one(), 1)  # 1 is not primitive in F_3^*
    E4 = extension_field(3, 4)
    with pytest.raises(HypothesisViolated):
        # gcd(n, q-1) = 2, the shift bookkeeping breaks down
        shifted_inverse(identity(E4), E4.embed(base_field(3).embed_int(2)), 1)


def test_half_order_involution():
    basis = primitive_idempotents(R35)
    rng = random.Random(71)
    alpha = E35.embed(base_field(3).embed_int(2))
    for inv in sign_vector_involutions(basis)[:4]:
        G = half_order_involution(inv, alpha)
        assert is_involution(G)
    F = rand_perm(rng, E35, basis)
    if not is_involution(F):
        # half-order shift of a non-involution need not be one, but of an
        # involution it always is; sanity check the pointwise version too
        I = sign_vector_involutions(basis)[1]
        G = half_order_involution(I, alpha)
        for v in (1, 50, 123):
            a = E35.from_int(v)
            assert evaluate(G, evaluate(G, a)) == a


def test_half_order_odd_rejected():
    E = extension_field(2, 3)
    basis = primitive_idempotents(RingSpec(base_field(2), 3))
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        I = sign_vector_involutions(basis)[0]
    with pytest.raises(OddOrder):
        half_order_involution(I, E.one())  # (q-1)*n = 3 is odd


def test_base_scalar_shift_is_central():
    # for alpha in F_q^*, the shift map A(x) = alpha x^[1] has base coeffs
    # only in slot 1, and composing with base-coefficient F commutes
    rng = random.Random(83)
    alpha = E35.embed(base_field(3).embed_int(2))
    A = LinearizedPoly.monomial(E35, alpha, 1)
    F = LinearizedPoly(
        E35, tuple(E35.embed_int(rng.randrange(3)) for _ in range(5))
    )
    assert compose(F, A) == compose(A, F)
