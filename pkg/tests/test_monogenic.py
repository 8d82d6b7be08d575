import random

import pytest

from orecohom.fields import QQ, prime_field
from orecohom.kalgebra import (
    character_from_values,
    cyclic_group,
    endo_from_character,
    group_algebra,
    identity_endo,
)
from orecohom.monogenic import (
    AElem,
    MonogenicAlgebra,
    MonogenicError,
    OrePoly,
    Resolution,
    TensorElem,
    derivation_tensor,
    normality_check,
    ore_divmod,
    ore_mul,
    twist_exponent,
    validate_f,
)


@pytest.fixture(scope="module")
def sweedler_base():
    G = cyclic_group(2)
    K = group_algebra(G, QQ)
    chi = character_from_values(G, QQ, {"g": -QQ.one})
    alpha = endo_from_character(K, chi)
    return K, alpha


@pytest.fixture(scope="module")
def sweedler(sweedler_base):
    K, alpha = sweedler_base
    return MonogenicAlgebra(K, alpha, [[0, 0], [0, 0]])  # f = x^2


@pytest.fixture(scope="module")
def rational_line():
    K = group_algebra(cyclic_group(1), QQ)
    return K, identity_endo(K)


def test_ore_commutation(sweedler_base):
    K, alpha = sweedler_base
    x = OrePoly.monomial(K, alpha, K.unit, 1)
    g = OrePoly.monomial(K, alpha, K.elem("g"), 0)
    xg = ore_mul(x, g)
    # x g = alpha(g) x = -g x
    assert xg == OrePoly.monomial(K, alpha, (-K.elem("g")).coords, 1)
    assert ore_mul(x, x) == OrePoly.monomial(K, alpha, K.unit, 2)
    one = OrePoly.monomial(K, alpha, K.unit, 0)
    P = xg + g
    assert ore_mul(P, one) == P


def test_ore_divmod_examples(rational_line):
    K, ide = rational_line
    x2 = OrePoly.monomial(K, ide, K.unit, 2)
    x3 = OrePoly.monomial(K, ide, K.unit, 3)
    one = OrePoly.monomial(K, ide, K.unit, 0)
    q, r = ore_divmod(x3, x2)
    assert q == OrePoly.monomial(K, ide, K.unit, 1) and r.is_zero()
    q, r = ore_divmod(x2 + one, x2)
    assert q == one and r == one
    f = x2 - one  # x^2 - 1
    q, r = ore_divmod(x3, f)
    x1 = OrePoly.monomial(K, ide, K.unit, 1)
    assert q == x1 and r == x1
    assert ore_mul(q, f) + r == x3


def test_ore_divmod_random_reconstruction(sweedler_base):
    K, alpha = sweedler_base
    A = MonogenicAlgebra(K, alpha, [[0, 0], [0, 0]])
    f = A.f_ore()
    rng = random.Random(5)
    for _ in range(200):
        deg = rng.randint(0, 4)
        P = OrePoly(
            K, alpha,
            [[QQ.random_element(rng, 4) for _ in range(2)] for _ in range(deg + 1)],
        )
        q, r = ore_divmod(P, f)
        assert ore_mul(q, f) + r == P
        assert r.is_zero() or r.degree < 2


def test_validate_f(sweedler_base):
    K, alpha = sweedler_base
    assert validate_f(K, alpha, [[0, 0], [0, 0]]).ok
    # lambda_1 = g is not alpha-fixed under the sign twist
    bad = validate_f(K, alpha, [K.elem("g"), [0, 0]])
    assert not bad.ok and "alpha-fixed" in bad.failures[0]
    with pytest.raises(MonogenicError):
        MonogenicAlgebra(K, alpha, [K.elem("g"), [0, 0]])
    assert not validate_f(K, alpha, [[0, 0]]).ok  # n = 1 rejected


def test_a_mul_sweedler(sweedler):
    A = sweedler
    x, g = A.x, A.k_embed(A.K.elem("g"))
    assert A.a_mul(x, x).is_zero()
    assert A.a_mul(g, x) == A.monomial(A.K.elem("g"), 1)
    assert A.a_mul(x, g) == A.monomial(-A.K.elem("g"), 1)
    assert A.a_mul(A.one, x) == x


def test_a_mul_matches_ore_route(sweedler):
    A = sweedler
    rng = random.Random(11)
    for _ in range(500):
        a = AElem(A, [QQ.random_element(rng, 3) for _ in range(A.adim)])
        b = AElem(A, [QQ.random_element(rng, 3) for _ in range(A.adim)])
        via_table = A.a_mul(a, b)
        via_ore = A.from_ore(ore_mul(A.to_ore(a), A.to_ore(b)))
        assert via_table == via_ore


def test_a_mul_associative_random(sweedler):
    A = sweedler
    rng = random.Random(13)
    for _ in range(100):
        a, b, c = (
            AElem(A, [QQ.random_element(rng, 3) for _ in range(A.adim)])
            for _ in range(3)
        )
        assert A.a_mul(A.a_mul(a, b), c) == A.a_mul(a, A.a_mul(b, c))


def test_truncated_family_x_square():
    K = group_algebra(cyclic_group(1), QQ)
    A = MonogenicAlgebra(K, identity_endo(K), [[0], [-1]])  # f = x^2 - 1
    assert A.a_mul(A.x, A.x) == A.one
    bar = A.xpow_bar(3)  # x^3 = x * f + x
    assert bar == A.x
    assert A.xpow_bar(1).is_zero()
    assert A.xpow_bar(2) == A.one


def test_derivation_tensor(sweedler):
    A = sweedler
    assert derivation_tensor(A, 0).is_zero()
    t1 = derivation_tensor(A, 1)
    assert t1 == TensorElem.from_aelem(A.one, 0, 1)
    t2 = derivation_tensor(A, 2)
    expect = TensorElem.from_aelem(A.x, 0, 1) + TensorElem.from_aelem(A.one, 1, 1)
    assert t2 == expect


def test_tensor_actions(sweedler):
    A = sweedler
    g = A.K.elem("g")
    t = TensorElem.from_aelem(A.one, 0, 1)  # 1 (x) 1 at twist 1
    # (1 (x) 1).g = alpha(g) (x) 1 = -g (x) 1
    got = t.rightmul_k(g)
    assert got == TensorElem.from_aelem(-A.k_embed(g), 0, 1)
    # (1 (x) x).x = 1 (x) x^2 = 0 since f = x^2
    assert t.rightmul_x().rightmul_x().is_zero()
    # left and right A-action compose with the product
    a = A.monomial(g, 1)
    assert t.leftmul(a).left_factor(0) == a


def test_twist_exponent():
    assert [twist_exponent(r, 2) for r in range(6)] == [0, 1, 2, 3, 4, 5]
    assert [twist_exponent(r, 3) for r in range(6)] == [0, 1, 3, 4, 6, 7]


def test_normality_check(sweedler):
    assert normality_check(sweedler).ok


def test_resolution_sweedler(sweedler):
    R = Resolution(sweedler, 6)
    rep = R.contraction_check()
    assert rep.ok, rep.failures
    # sigma_even sends 1 (x) x^{n-1} to 1 (x) 1
    t = TensorElem.from_aelem(sweedler.one, sweedler.n - 1, R.twist(1))
    assert R.apply_s(2, t) == TensorElem.from_aelem(sweedler.one, 0, R.twist(2))


def test_resolution_truncated_gf3():
    F3 = prime_field(3)
    K = group_algebra(cyclic_group(1), F3)
    A = MonogenicAlgebra(K, identity_endo(K), [[0], [0], [0]])  # f = x^3 over GF(3)
    rep = Resolution(A, 6).contraction_check()
    assert rep.ok, rep.failures


def test_resolution_nontrivial_f():
    K = group_algebra(cyclic_group(1), QQ)
    A = MonogenicAlgebra(K, identity_endo(K), [[0], [-1]])
    rep = Resolution(A, 6).contraction_check()
    assert rep.ok, rep.failures
