import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdsgraphs.errors import (
    DegreeOutOfRange,
    DivisionByZero,
    FieldMismatch,
    NoSpecialCubic,
    NotPrime,
    NotPrimePower,
    WrongCharacteristic,
)
from pdsgraphs.fields import (
    factorize,
    fe_add,
    fe_inv,
    fe_mul,
    fe_neg,
    fe_pow,
    field_of_order,
    find_any_primitive_cubic,
    find_primitive_cubic,
    format_element,
    is_prime,
    make_field,
    parse_element,
    prime_power,
    sqrt_char2,
    two_squares,
)

PRIME_POWERS_16 = [2, 3, 5, 7, 8, 9, 11, 13, 16]


# -- independent oracles on plain integer lists ------------------------------


def _has_root_mod_p(coeffs, p):
    return any(sum(c * x**i for i, c in enumerate(coeffs)) % p == 0 for x in range(p))


def _root_order_mod_p(rule, p):
    """Order of x in Z_p[x]/(x^3 - r2 x^2 - r1 x - r0) by repeated multiplication."""
    r0, r1, r2 = rule
    cur = [1, 0, 0]
    for k in range(1, p**3):
        # multiply by x
        top = cur[2]
        cur = [(top * r0) % p, (cur[0] + top * r1) % p, (cur[1] + top * r2) % p]
        if cur == [1, 0, 0]:
            return k
    return None


# -- integer helpers -----------------------------------------------------------


def test_primality_and_factoring():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert factorize(4095) == {3: 2, 5: 1, 7: 1, 13: 1}
    assert prime_power(9) == (3, 2)
    assert prime_power(2) == (2, 1)
    with pytest.raises(NotPrimePower):
        prime_power(6)
    with pytest.raises(NotPrimePower):
        prime_power(1)


# -- make_field ------------------------------------------------------------


def test_make_field_prime():
    K = make_field(2, 1)
    assert K.q == 2 and K.modulus == (0, 1)


@pytest.mark.parametrize("p,e", [(2, 2), (3, 2)])
def test_make_field_first_irreducible_quadratic(p, e):
    # a monic quadratic is irreducible iff it has no root
    candidates = [low + (1,) for low in itertools.product(range(p), repeat=2)]
    first = next(f for f in candidates if not _has_root_mod_p(f, p))
    assert make_field(p, e).modulus == first


def test_make_field_examples():
    assert make_field(2, 2).modulus == (1, 1, 1)  # x^2 + x + 1
    assert make_field(3, 2).modulus == (1, 0, 1)  # x^2 + 1


def test_make_field_cubic_moduli_have_no_roots():
    for p in (2, 3, 5, 7):
        f = make_field(p, 3).modulus
        assert not _has_root_mod_p(f, p)


def test_make_field_errors():
    with pytest.raises(NotPrime):
        make_field(6, 1)
    with pytest.raises(DegreeOutOfRange):
        make_field(2, 0)
    with pytest.raises(DegreeOutOfRange):
        make_field(2, 10)


# -- arithmetic ---------------------------------------------------------------


def test_small_prime_field_arithmetic():
    K = make_field(7)
    assert fe_mul(K(3), K(5)) == K(1)
    assert fe_inv(K(3)) == K(5)
    assert fe_neg(make_field(3)(1)) == make_field(3)(2)
    assert fe_add(K(4), K(5)) == K(2)
    assert fe_pow(K(3), 6) == K.one


def test_gf4_generator_squares_to_zeta_plus_one():
    K = make_field(2, 2)
    z = K.gen
    assert z * z == z + K.one
    assert format_element(z * z) == "ζ+1"


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZero):
        make_field(5)(0).inverse()


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        make_field(5)(1) + make_field(7)(1)


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 125, 128, 243, 256, 343, 512])
def test_inverse_law_exhaustive(q):
    K = field_of_order(q)
    for a in K.nonzero():
        assert a * a.inverse() == K.one


@pytest.mark.parametrize("q", [4, 8, 9, 27, 64, 512])
def test_associativity_and_distributivity_sampled(q):
    K = field_of_order(q)
    elems = list(K.elements())
    rng = random.Random(q)
    for _ in range(300):
        a, b, c = (rng.choice(elems) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27])
def test_multiplicative_group_is_cyclic_of_order_q_minus_1(q):
    K = field_of_order(q)
    orders = set()
    for a in K.nonzero():
        x, k = a, 1
        while x != K.one:
            x, k = x * a, k + 1
        orders.add(k)
    assert max(orders) == q - 1


def test_element_format_roundtrip():
    for q in (4, 9, 16, 27):
        K = field_of_order(q)
        for a in K.elements():
            assert parse_element(K, format_element(a)) == a
    K4 = field_of_order(4)
    assert parse_element(K4, "ζ²") == parse_element(K4, "ζ+1")


# -- sqrt in characteristic 2 ---------------------------------------------------


def test_sqrt_char2_examples():
    assert sqrt_char2(make_field(2)(1)) == make_field(2)(1)
    K = make_field(2, 2)
    z = K.gen
    assert sqrt_char2(z) == z * z


@pytest.mark.parametrize("q", [2, 4, 8, 16, 32, 64, 128, 256])
def test_sqrt_char2_exhaustive(q):
    K = field_of_order(q)
    roots = [sqrt_char2(a) for a in K.elements()]
    assert all(r * r == a for r, a in zip(roots, K.elements()))
    assert len(set(roots)) == q  # squaring is a bijection, so roots are unique


def test_sqrt_char2_rejects_odd_characteristic():
    with pytest.raises(WrongCharacteristic):
        sqrt_char2(make_field(3)(1))


# -- sums of two squares ---------------------------------------------------------


def _two_squares_oracle(b):
    K = b.spec
    return min(((c, d) for c in K.elements() for d in K.elements() if c * c + d * d == b),
               key=lambda cd: (cd[0].coeffs, cd[1].coeffs))


def test_two_squares_examples():
    K3 = make_field(3)
    assert two_squares(K3(2)) == (K3(1), K3(1))
    K5 = make_field(5)
    assert two_squares(K5(4)) == (K5(0), K5(2))
    K7 = make_field(7)
    c, d = two_squares(K7(6))
    assert c * c + d * d == K7(6)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49, 81])
def test_two_squares_all_elements(q):
    K = field_of_order(q)
    for b in K.elements():
        c, d = two_squares(b)
        assert c * c + d * d == b
    if q <= 16:
        for b in K.elements():
            assert two_squares(b) == _two_squares_oracle(b)


# -- primitive cubics -------------------------------------------------------------


def test_find_primitive_cubic_q2():
    K = make_field(2)
    assert find_primitive_cubic(K) == (K(1), K(1))
    assert _root_order_mod_p((1, 1, 0), 2) == 7


def test_find_primitive_cubic_q3():
    K = make_field(3)
    assert find_primitive_cubic(K) == (K(1), K(2))
    # x^3 - x - 1: irreducible, root of order 13 only
    assert not _has_root_mod_p((-1 % 3, -1 % 3, 0, 1), 3)
    assert _root_order_mod_p((1, 1, 0), 3) == 13
    # x^3 - x - 2: root of order 26
    assert _root_order_mod_p((2, 1, 0), 3) == 26


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_find_primitive_cubic_matches_bruteforce_scan(p):
    K = make_field(p)
    expected = None
    for a in range(1, p):
        for b in range(1, p):
            if _root_order_mod_p((b, a, 0), p) == p**3 - 1:
                expected = (a, b)
                break
        if expected:
            break
    alpha, beta = find_primitive_cubic(K)
    assert (int(alpha), int(beta)) == expected


def test_find_primitive_cubic_q4_raises():
    with pytest.raises(NoSpecialCubic):
        find_primitive_cubic(field_of_order(4))


@pytest.mark.parametrize("q", [q for q in PRIME_POWERS_16 if q != 4])
def test_find_primitive_cubic_properties(q):
    from pdsgraphs.fields import cubic_pow

    K = field_of_order(q)
    alpha, beta = find_primitive_cubic(K)
    assert alpha and beta
    rule = (beta, alpha, K.zero)
    # no root in K means irreducible for a cubic
    assert all(t * t * t != alpha * t + beta for t in K.elements())
    xi = (K.zero, K.one, K.zero)
    one = (K.one, K.zero, K.zero)
    order = q**3 - 1
    assert cubic_pow(xi, order, rule) == one
    for ell in factorize(order):
        assert cubic_pow(xi, order // ell, rule) != one


def test_find_any_primitive_cubic():
    K2 = make_field(2)
    assert find_any_primitive_cubic(K2) == (K2(0), K2(1), K2(1))
    K3 = make_field(3)
    assert find_any_primitive_cubic(K3) == (K3(0), K3(1), K3(2))
    K4 = field_of_order(4)
    a2, a1, a0 = find_any_primitive_cubic(K4)
    from pdsgraphs.tower import CubicTower

    T = CubicTower(K4, a2, a1, a0)
    assert len(T.powers) == 21 and len(set(T.powers)) == 21


def test_determinism():
    K = field_of_order(13)
    assert find_primitive_cubic(K) == find_primitive_cubic(K)
    assert two_squares(K(12)) == two_squares(K(12))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([4, 8, 9, 25, 27]), st.data())
def test_field_axioms_property(q, data):
    K = field_of_order(q)
    elems = list(K.elements())
    a, b, c = (data.draw(st.sampled_from(elems)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a - a == K.zero
    if b:
        assert (a / b) * b == a
