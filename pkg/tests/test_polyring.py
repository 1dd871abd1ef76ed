"""Polynomials over F_q, the cyclic quotient ring and the x^n - 1 factorization."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linperm import (
    FieldSpec,
    Poly,
    RingSpec,
    base_field,
    cyclotomic_cosets,
    factor_xn_minus_1,
    format_poly,
    parse_poly,
    parse_ring_element,
    poly_egcd,
    poly_gcd,
    ring_inverse,
    ring_is_unit,
    ring_mul,
    shift_mul_x,
)
from linperm.errors import BadInput, BothZero, NotAUnit
from linperm.polyring import splitting_field

ALL_SPECS = [(2, 3), (3, 2), (3, 5), (5, 2), (3, 25), (11, 9), (8, 11), (3, 125)]


def ring(q, n):
    return RingSpec(base_field(q), n)


def poly_strategy(q, max_deg=6):
    base = base_field(q)
    return st.lists(
        st.integers(0, q - 1), min_size=0, max_size=max_deg + 1
    ).map(lambda cs: Poly(base, tuple(base.from_int(c) for c in cs)))


@given(poly_strategy(3), poly_strategy(3), poly_strategy(3))
def test_poly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(poly_strategy(3), poly_strategy(3))
def test_divmod_recomposes(a, b):
    if b.is_zero():
        return
    qt, r = divmod(a, b)
    assert qt * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(poly_strategy(5), poly_strategy(5))
def test_bezout(a, b):
    if a.is_zero() and b.is_zero():
        return
    g, u, v = poly_egcd(a, b)
    assert u * a + v * b == g
    assert g == poly_gcd(a, b)


def test_egcd_both_zero(F3):
    z = Poly(F3, ())
    with pytest.raises(BothZero):
        poly_egcd(z, z)


def test_ring_spec_rejects_noncoprime(F3):
    with pytest.raises(BadInput):
        RingSpec(F3, 6)


@pytest.mark.parametrize("q,n", ALL_SPECS)
def test_factorization_recomposes(q, n):
    spec = ring(q, n)
    factors = factor_xn_minus_1(spec)
    prod = Poly(spec.base, (spec.base.one(),))
    for _, f in factors:
        prod = prod * f
    assert prod == spec.modulus()
    # degrees partition n and match coset sizes
    assert sum(f.degree for _, f in factors) == n
    for coset, f in factors:
        assert f.degree == len(coset.members)


@pytest.mark.parametrize("q,n", ALL_SPECS)
def test_cosets_partition(q, n):
    spec = ring(q, n)
    cosets = cyclotomic_cosets(spec)
    seen = set()
    for c in cosets:
        assert c.representative == min(c.members)
        seen.update(c.members)
    assert seen == set(range(n))


def test_known_factor_degrees():
    assert [f.degree for _, f in factor_xn_minus_1(ring(3, 125))] == [1, 100, 20, 4]
    assert [f.degree for _, f in factor_xn_minus_1(ring(8, 11))] == [1, 10]
    assert [f.degree for _, f in factor_xn_minus_1(ring(11, 9))] == [1, 6, 2]
    assert [str(f) for _, f in factor_xn_minus_1(ring(2, 3))] == ["x+1", "x^2+x+1"]


def test_splitting_field_degree():
    assert splitting_field(ring(3, 125)).n == 100
    # already split when the order is 1-dimensional over the base
    assert splitting_field(ring(3, 2)) == base_field(3)


def test_unit_iff_coprime():
    spec = ring(3, 5)
    x = spec.x()
    assert ring_is_unit(x)
    e = spec.element([spec.base.embed_int(1)] * 5)  # x^4+...+1 divides x^5-1
    assert not ring_is_unit(e)
    with pytest.raises(NotAUnit):
        ring_inverse(e)


def test_known_ring_inverse_r3_25():
    spec = ring(3, 25)
    f0 = parse_ring_element("x^20+2*x^15+1", spec)
    inv = ring_inverse(f0)
    assert format_poly(inv.coeffs) == "2*x^20+2*x^10+x^5+2"
    assert ring_mul(f0, inv) == spec.one()


def test_shift_mul_x_is_rotation():
    spec = ring(3, 25)
    f0 = parse_ring_element("x^20+2*x^15+1", spec)
    assert format_poly(shift_mul_x(f0, 1).coeffs) == "x^21+2*x^16+x"
    assert shift_mul_x(f0, 25) == f0


@given(st.lists(st.integers(0, 2), min_size=5, max_size=5))
def test_ring_mul_matches_poly_mod(coeffs):
    spec = ring(3, 5)
    f = spec.element([spec.base.embed_int(c) for c in coeffs])
    g = spec.x()
    lhs = ring_mul(f, g).to_poly()
    rhs = (f.to_poly() * g.to_poly()) % spec.modulus()
    assert lhs == rhs


@given(st.lists(st.integers(0, 4), min_size=1, max_size=7))
def test_format_parse_roundtrip(coeffs):
    F5 = FieldSpec(5)
    p = Poly(F5, tuple(F5.embed_int(c) for c in coeffs))
    assert parse_poly(format_poly(p.coeffs), F5) == p


def test_parse_accepts_compact_style(F3):
    assert parse_poly("x^20+2x^15+1", F3) == parse_poly("x^20+2*x^15+1", F3)
    assert parse_poly("[1,0,2]", F3) == parse_poly("2*x^2+1", F3)


def test_format_zero(F3):
    assert format_poly([F3.zero()]) == "0"
