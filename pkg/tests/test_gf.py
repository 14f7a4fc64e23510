import pytest
from hypothesis import given, strategies as st

from hecnum import (
    FieldTooLarge,
    IncompatibleFields,
    NotIrreducible,
    NotPrime,
    ZeroElement,
    build_field,
    conway_polynomial,
    embed,
    field_for_order,
    norm,
    split_prime_power,
)
from bruteforce import brute_dlog, brute_is_square


def test_conway_fixed_points():
    # cross-system canonical values
    assert conway_polynomial(5, 1) == (3, 1)      # root 2
    assert conway_polynomial(5, 2) == (2, 4, 1)   # x^2 + 4x + 2
    assert conway_polynomial(3, 2) == (2, 2, 1)   # x^2 + 2x + 2
    assert conway_polynomial(7, 1) == (4, 1)      # root 3


def test_build_field_basics():
    F = build_field(5, 6)
    assert F.order == 15625
    g = F.gen
    assert F.pow(g, 15624) == F.one
    for r in (2, 3, 7, 31):  # prime divisors of 15624
        assert F.pow(g, 15624 // r) != F.one


def test_prime_field_elements_are_residues():
    F = build_field(53)
    assert F.scalar(7).coeffs == (7,)
    assert (F.scalar(30) + F.scalar(30)).coeffs == (7,)
    assert F.gen == F.scalar(2)


def test_not_prime_rejected():
    with pytest.raises(NotPrime):
        build_field(9)
    with pytest.raises(NotPrime):
        build_field(2)
    with pytest.raises(NotPrime):
        field_for_order(12)


def test_reducible_modulus_rejected():
    with pytest.raises(NotIrreducible):
        build_field(5, 2, modulus=[4, 0, 1])  # x^2 - 1
    with pytest.raises(NotIrreducible):
        build_field(5, 2, modulus=[1, 1])  # wrong degree


def test_custom_modulus_gets_a_generator():
    F = build_field(5, 2, modulus=[2, 1, 1])  # x^2 + x + 2, x is primitive
    assert F.pow(F.gen, 24) == F.one
    assert all(F.pow(F.gen, 24 // r) != F.one for r in (2, 3))


def test_dlog_small_fixed():
    F31 = build_field(31)
    assert F31.dlog(F31.scalar(3)) == 1
    assert F31.dlog(F31.one) == 0
    F53 = build_field(53)
    k = F53.dlog(F53.scalar(26))
    assert F53.pow(F53.gen, k) == F53.scalar(26)
    assert k == brute_dlog(F53, F53.scalar(26)) == 25


def test_dlog_zero_rejected():
    F = build_field(31)
    with pytest.raises(ZeroElement):
        F.dlog(F.zero)


def test_dlog_roundtrip_exhaustive():
    for F in (build_field(53), build_field(5, 2)):
        for k in range(F.order - 1):
            assert F.dlog(F.exp(k)) == k
        for code in range(1, F.order):
            x = F.from_code(code)
            assert F.exp(F.dlog(x)) == x


def test_dlog_bsgs_above_table_cap():
    from sympy import nextprime

    p = int(nextprime(1 << 24))
    F = build_field(p)
    assert F.tables(strict=False) is None
    for k in (0, 1, 9999, 123456789, p - 2):
        assert F.dlog(F.pow(F.gen, k)) == k % (p - 1)


def test_dlog_cap_exceeded():
    from sympy import nextprime

    p = int(nextprime(1 << 25))
    F = build_field(p, dlog_cap=1 << 20)
    with pytest.raises(FieldTooLarge):
        F.dlog(F.scalar(5))


def test_is_square_fixed():
    F53 = build_field(53)
    assert F53.is_square(F53.scalar(42))
    assert F53.is_square(F53.scalar(25))
    F83 = build_field(83)
    assert not F83.is_square(F83.scalar(62))
    with pytest.raises(ZeroElement):
        F53.is_square(F53.zero)


def test_is_square_matches_dlog_parity_and_bruteforce():
    for F in (build_field(53), build_field(3, 2), build_field(5, 2)):
        for code in range(1, F.order):
            x = F.from_code(code)
            assert F.is_square(x) == (F.dlog(x) % 2 == 0)
        if F.order <= 81:
            for code in range(1, F.order):
                x = F.from_code(code)
                assert F.is_square(x) == brute_is_square(F, x)


def test_inverses_exhaustive():
    for F in (build_field(2081), build_field(3, 5), build_field(5, 4)):
        for code in range(1, min(F.order, 700)):
            x = F.from_code(code)
            assert F.mul(x, F.inv(x)) == F.one
    F = build_field(3, 5)  # all 242 units
    for code in range(1, F.order):
        x = F.from_code(code)
        assert F.mul(x, F.inv(x)) == F.one


@given(st.integers(0, 3 * 7**3), st.integers(0, 3 * 7**3), st.integers(0, 3 * 7**3))
def test_field_axioms_sampled(i, j, k):
    F = build_field(7, 3)
    a, b, c = (F.from_code(v % F.order) for v in (i, j, k))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a


def test_pow_negative_and_div():
    F = build_field(11, 2)
    x = F.exp(7)
    assert x ** (-1) * x == F.one
    assert (x / x) == F.one


def test_embed_canonical_tower():
    F25 = build_field(5, 2)
    F56 = build_field(5, 6)
    xi = F25.gen
    img = embed(F25, F56, xi)
    assert F56.dlog(img) == 651  # (5^6-1)/(5^2-1)
    assert embed(F25, F56, F25.one) == F56.one
    assert embed(F25, F56, F25.zero) == F56.zero


def test_embed_is_field_homomorphism():
    F25 = build_field(5, 2)
    F56 = build_field(5, 6)
    elems = [F25.from_code(c) for c in range(F25.order)]
    imgs = {c: embed(F25, F56, F25.from_code(c)) for c in range(F25.order)}
    for x in elems:
        for y in elems:
            assert imgs[(x + y).code] == imgs[x.code] + imgs[y.code]
            assert imgs[(x * y).code] == imgs[x.code] * imgs[y.code]
    assert len({im.code for im in imgs.values()}) == F25.order  # injective


def test_embed_prime_subfield_additive_relations():
    F5 = build_field(5)
    F25 = build_field(5, 2)
    two = embed(F5, F25, F5.scalar(2))
    assert two == F25.exp(F5.dlog(F5.scalar(2)) * 6)  # ratio (25-1)/(5-1)
    # 2 + 2 + 2 = 6 = 1 in characteristic 5
    assert two + two + two == F25.one
    assert two == F25.scalar(2)


def test_incompatible_fields():
    with pytest.raises(IncompatibleFields):
        embed(build_field(5, 2), build_field(5, 3), build_field(5, 2).one)
    with pytest.raises(IncompatibleFields):
        embed(build_field(3, 2), build_field(5, 2), build_field(3, 2).one)


def test_norm_basics():
    F3 = build_field(3)
    F9 = build_field(3, 2)
    # norm is surjective onto the subfield units: enumerate all 8 units
    images = {norm(F9, F3, F9.from_code(c)).code for c in range(1, 9)}
    assert images == {1, 2}
    assert norm(F9, F3, F9.gen) == F3.gen  # norm of a generator generates

    F5 = build_field(5)
    F25 = build_field(5, 2)
    assert norm(F25, F5, F25.one) == F5.one
    for code in range(1, 5):
        y = F5.from_code(code)
        assert norm(F25, F5, embed(F5, F25, y)) == y * y  # y^[super:sub]
    with pytest.raises(ZeroElement):
        norm(F25, F5, F25.zero)


def test_norm_of_embedded_is_power_bigger_tower():
    F5 = build_field(5)
    F56 = build_field(5, 6)
    for code in range(1, 5):
        y = F5.from_code(code)
        assert norm(F56, F5, embed(F5, F56, y)) == y**6


def test_split_prime_power():
    assert split_prime_power(49) == (7, 2)
    assert split_prime_power(53) == (53, 1)
    with pytest.raises(NotPrime):
        split_prime_power(12)


def test_element_codes_roundtrip():
    F = build_field(7, 3)
    for code in (0, 1, 6, 48, 342):
        assert F.from_code(code).code == code
