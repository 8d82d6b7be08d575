import pytest

from orecohom.cohomology import Bimodule, SmallComplex, classes_equal, cohomology_group
from orecohom.fields import QQ, prime_field
from orecohom.kalgebra import (
    character_from_values,
    cyclic_group,
    endo_from_character,
    group_algebra,
    identity_endo,
    scalar_algebra,
)
from orecohom.monogenic import AElem, MonogenicAlgebra
from orecohom.products import (
    BarCochain,
    ComparisonMaps,
    ProductsError,
    SmallCochain,
    all_bar_indices,
    bar_differential,
    bracket_bar,
    bracket_class_table,
    bracket_small_closed,
    bracket_small_generic,
    chain_map_report,
    circle_j,
    compose_place_small,
    cup_bar,
    cup_class_table,
    cup_small,
    cup_small_oracle,
    delta_sum,
    identity_one_cochain,
    phi_eval,
    phi_psi_class_identity,
    psi_eval,
)


@pytest.fixture(scope="module")
def sweedler():
    G = cyclic_group(2)
    K = group_algebra(G, QQ)
    chi = character_from_values(G, QQ, {"g": -1})
    alpha = endo_from_character(K, chi)
    return MonogenicAlgebra(K, alpha, [{}, {}])


@pytest.fixture(scope="module")
def sweedler_complex(sweedler):
    return SmallComplex(sweedler, Bimodule.regular(sweedler), 6)


@pytest.fixture(scope="module")
def gf3_cubic():
    K = scalar_algebra(prime_field(3))
    return MonogenicAlgebra(K, identity_endo(K), [0, 0, 0])


@pytest.fixture(scope="module")
def gf3_complex(gf3_cubic):
    return SmallComplex(gf3_cubic, Bimodule.regular(gf3_cubic), 6)


@pytest.fixture(scope="module")
def line_cubic():
    K = scalar_algebra(QQ)
    return MonogenicAlgebra(K, identity_endo(K), [1, 2, 1])


@pytest.fixture(scope="module")
def line_cubic_complex(line_cubic):
    return SmallComplex(line_cubic, Bimodule.regular(line_cubic), 5)


@pytest.fixture(scope="module")
def c4_sign():
    G = cyclic_group(4)
    K = group_algebra(G, QQ)
    chi = character_from_values(G, QQ, {"g": -1})
    alpha = endo_from_character(K, chi)
    return MonogenicAlgebra(K, alpha, [{}, {"1": 1, "g^2": -1}])


@pytest.fixture(scope="module")
def c4_complex(c4_sign):
    return SmallComplex(c4_sign, Bimodule.regular(c4_sign), 6)


# -- comparison maps on cochains ----------------------------------------------


def test_psi_low_degrees(sweedler):
    A = sweedler
    g = A.k_embed(A.K.elem("g"))
    gx = A.monomial(A.K.elem("g"), 1)
    assert psi_eval(SmallCochain(A, 0, g)).table == {(): g}
    assert psi_eval(SmallCochain.from_kx(A, 1, "g")).table == {(1,): gx}
    assert psi_eval(SmallCochain.from_k(A, 2, 1)).table == {(1, 1): A.one}
    assert psi_eval(SmallCochain.from_kx(A, 3, "g")).table == {(1, 1, 1): gx}


def test_psi_even_support_pattern(gf3_cubic):
    A = gf3_cubic
    mu = SmallCochain.from_k(A, 2, 2)
    t = psi_eval(mu)
    two = A.k_embed(A.K.elem(2))
    assert t.at((1, 2)) == two
    assert t.at((2, 1)) == two
    assert t.at((1, 1)).is_zero()
    # outside the flat patterns the division quotient itself appears
    assert t.at((2, 2)) == A.monomial(A.K.elem(2), 1)
    quad = psi_eval(SmallCochain.from_k(A, 4, 1))
    assert quad.at((1, 2, 1, 2)) == A.one
    assert quad.at((1, 2, 2, 1)) == A.one
    assert quad.at((1, 2, 1, 1)).is_zero()
    assert quad.at((1, 1, 1, 2)).is_zero()


def test_psi_odd_support_pattern(gf3_cubic):
    A = gf3_cubic
    mux = SmallCochain.from_kx(A, 3, 2)
    t = psi_eval(mux)
    assert t.at((1, 2, 1)) == A.monomial(A.K.elem(2), 1)
    assert t.at((1, 1, 1)).is_zero()
    # last index free: the twisted partial sum scales x^l (here alpha = id)
    assert t.at((2, 1, 2)) == A.monomial(A.K.elem(4), 2)
    assert t.at((2, 1, 1)) == A.monomial(A.K.elem(2), 1)
    assert t.at((1, 1, 2)).is_zero()


def test_psi_output_is_twisted_invariant(sweedler):
    m = SmallCochain.from_kx(sweedler, 3, "g")
    t = psi_eval(m)
    BarCochain(sweedler, 3, t.table, check=True)


def test_phi_low_degrees(sweedler):
    A = sweedler
    g = A.k_embed(A.K.elem("g"))
    gx = A.monomial(A.K.elem("g"), 1)
    assert phi_eval(BarCochain.constant(A, g)).value == g
    assert phi_eval(BarCochain(A, 1, {(1,): gx})).value == gx
    assert phi_eval(BarCochain(A, 2, {(1, 1): g})).value == g


def test_phi_psi_fix_cohomology_classes(sweedler_complex, gf3_complex, c4_complex):
    for C in (sweedler_complex, gf3_complex, c4_complex):
        for r in range(5):
            assert phi_psi_class_identity(C, r), (C.alg.n, r)


def test_phi_psi_fix_classes_line_cubic(line_cubic_complex):
    for r in range(4):
        assert phi_psi_class_identity(line_cubic_complex, r)


# -- bar differential and chain maps ------------------------------------------


def test_bar_differential_of_constant_unit_vanishes(sweedler):
    b = bar_differential(BarCochain.constant(sweedler, sweedler.one))
    assert b.is_zero()


def test_bar_differential_squares_to_zero(line_cubic):
    A = line_cubic
    g = BarCochain(A, 1, {(1,): A.xpow(2), (2,): A.one + A.xpow(1)})
    assert bar_differential(bar_differential(g)).is_zero()


def test_chain_maps_commute(sweedler_complex, gf3_complex, c4_complex):
    for C in (sweedler_complex, gf3_complex, c4_complex):
        rep = chain_map_report(C, 3)
        assert rep.ok, rep.failures


def test_chain_maps_commute_line_cubic(line_cubic_complex):
    rep = chain_map_report(line_cubic_complex, 3)
    assert rep.ok, rep.failures


def test_chain_map_report_needs_headroom(sweedler):
    M = Bimodule.regular(sweedler)
    sub = SmallComplex(sweedler, M, 2)
    with pytest.raises(ProductsError, match="built"):
        chain_map_report(sub, 3)


# -- resolution-level comparison maps ------------------------------------------


def test_comparison_closed_matches_recursion(sweedler, gf3_cubic, c4_sign):
    for alg in (sweedler, gf3_cubic, c4_sign):
        rep = ComparisonMaps(alg, 5).comparison_report(4)
        assert rep.ok, rep.failures


def test_comparison_closed_matches_recursion_line_cubic(line_cubic):
    rep = ComparisonMaps(line_cubic, 5).comparison_report(4)
    assert rep.ok, rep.failures


def test_phi_closed_low_degrees(line_cubic):
    maps = ComparisonMaps(line_cubic, 3)
    A = line_cubic
    assert maps.phi_closed(0) == {(): A.one}
    assert maps.phi_closed(1) == {(1,): A.one}
    # entries from the two blocks with slot room: the x^1 coefficient of f
    # contributes 1 to key (1,1), the leading block adds x there and 1 at (1,2)
    d2 = maps.phi_closed(2)
    assert set(d2) == {(1, 1), (1, 2)}
    assert d2[(1, 1)] == A.one + A.xpow(1)
    assert d2[(1, 2)] == A.one


# -- cup products ---------------------------------------------------------------


def test_cup_with_unit_is_identity(sweedler):
    A = sweedler
    one0 = SmallCochain.from_k(A, 0, 1)
    for b in (
        SmallCochain.from_k(A, 0, "g"),
        SmallCochain.from_kx(A, 1, "g"),
        SmallCochain.from_k(A, 2, 1),
    ):
        assert cup_small(one0, b).value == b.value
        assert cup_small(b, one0).value == b.value


def test_cup_odd_odd_vanishes_for_square_zero(sweedler):
    A = sweedler
    x1 = SmallCochain.from_kx(A, 1, 1)
    assert cup_small(x1, x1).value.is_zero()


def test_cup_odd_odd_unit_obstruction(c4_sign):
    A = c4_sign
    x1 = SmallCochain.from_kx(A, 1, 1)
    expect = A.k_embed(A.K.elem({"1": -1, "g^2": 1}))
    assert cup_small(x1, x1).value == expect


def test_cup_obstruction_is_a_coboundary(c4_sign, c4_complex):
    A = c4_sign
    val = cup_small(SmallCochain.from_kx(A, 1, 1), SmallCochain.from_kx(A, 1, 1))
    H2 = cohomology_group(c4_complex, 2)
    assert H2.is_coboundary(val.value.coords)


def test_cup_closed_matches_bar_oracle(sweedler):
    A = sweedler
    basis = {
        0: [SmallCochain.from_k(A, 0, 1), SmallCochain.from_k(A, 0, "g")],
        1: [SmallCochain.from_kx(A, 1, 1), SmallCochain.from_kx(A, 1, "g")],
        2: [SmallCochain.from_k(A, 2, 1), SmallCochain.from_k(A, 2, "g")],
    }
    for p in range(3):
        for q in range(3):
            for a in basis[p]:
                for b in basis[q]:
                    assert cup_small(a, b) == cup_small_oracle(a, b)


def test_cup_closed_matches_bar_oracle_nonzero_tail(c4_sign):
    A = c4_sign
    basis = {
        0: [SmallCochain.from_k(A, 0, 1), SmallCochain.from_k(A, 0, "g")],
        1: [SmallCochain.from_kx(A, 1, 1), SmallCochain.from_kx(A, 1, "g")],
        2: [SmallCochain.from_k(A, 2, 1), SmallCochain.from_k(A, 2, "g")],
    }
    for p in range(3):
        for q in range(3):
            for a in basis[p]:
                for b in basis[q]:
                    assert cup_small(a, b) == cup_small_oracle(a, b)


def test_cup_bar_is_associative(gf3_cubic):
    A = gf3_cubic
    g = BarCochain(A, 1, {(1,): A.xpow(1), (2,): A.xpow(2)})
    h = BarCochain(A, 1, {(2,): A.one + A.xpow(1)})
    k = BarCochain(A, 2, {(1, 2): A.xpow(2)})
    assert cup_bar(cup_bar(g, h), k) == cup_bar(g, cup_bar(h, k))


def test_cup_graded_commutative_on_classes(sweedler_complex):
    C = sweedler_complex
    A = C.alg
    for p in range(3):
        for q in range(3):
            Hp, Hq = cohomology_group(C, p), cohomology_group(C, q)
            for av in Hp.reps_ambient:
                for bv in Hq.reps_ambient:
                    a = SmallCochain(A, p, AElem(A, av), check=False)
                    b = SmallCochain(A, q, AElem(A, bv), check=False)
                    ab = cup_small(a, b).value
                    ba = cup_small(b, a).value
                    if p * q % 2:
                        ba = -ba
                    assert classes_equal(C, p + q, ab.coords, ba.coords)


def test_cup_respects_coboundary_shift(sweedler, sweedler_complex):
    A = sweedler
    x1 = SmallCochain.from_kx(A, 1, 1)
    shifted = SmallCochain(A, 1, x1.value + A.monomial(A.K.elem({"g": -2}), 1))
    b = SmallCochain.from_k(A, 2, 1)
    lhs = cup_small(x1, b).value
    rhs = cup_small(shifted, b).value
    assert classes_equal(sweedler_complex, 3, lhs.coords, rhs.coords)


# -- composition and brackets on the bar side ----------------------------------


def test_circle_with_identity_cochain(gf3_cubic):
    A = gf3_cubic
    ident = identity_one_cochain(A)
    g = BarCochain(A, 2, {(1, 2): A.xpow(2), (2, 2): A.one})
    assert circle_j(g, ident, 1) == g
    assert circle_j(g, ident, 2) == g


def test_circle_slot_out_of_range(sweedler):
    g = psi_eval(SmallCochain.from_kx(sweedler, 1, 1))
    with pytest.raises(ProductsError, match="slot"):
        circle_j(g, g, 2)
    with pytest.raises(ProductsError, match="slot"):
        circle_j(g, g, 0)


def test_degree_zero_composition_consumes_no_slots(sweedler):
    A = sweedler
    g = psi_eval(SmallCochain.from_kx(A, 1, "g"))
    h = BarCochain.constant(A, A.k_embed(A.K.elem("g")))
    out = circle_j(g, h, 1)
    assert out.degree == 0
    # the substituted value lies in K, so normalization kills the slot
    assert out.at(()).is_zero()


def test_degree_zero_composition_with_x_part(gf3_cubic):
    A = gf3_cubic
    g = BarCochain(A, 1, {(1,): A.one, (2,): A.xpow(2)})
    h = BarCochain.constant(A, A.xpow(2) + A.k_embed(A.K.elem(1)))
    out = circle_j(g, h, 1)
    assert out.degree == 0
    assert out.at(()) == A.xpow(2)


def test_slotwise_values_even_into_odd(sweedler):
    A = sweedler
    a2 = SmallCochain.from_k(A, 2, "g")
    b1 = SmallCochain.from_kx(A, 1, "g")
    assert compose_place_small(a2, b1, 1).value == A.one
    assert compose_place_small(a2, b1, 2).value == -A.one


def test_slotwise_values_odd_into_odd(sweedler):
    A = sweedler
    a3 = SmallCochain.from_kx(A, 3, "g")
    b1 = SmallCochain.from_kx(A, 1, "g")
    x = A.x
    assert compose_place_small(a3, b1, 1).value == x
    assert compose_place_small(a3, b1, 2).value == -x
    assert compose_place_small(a3, b1, 3).value == x


def test_slotwise_even_inputs_vanish(sweedler):
    A = sweedler
    b0 = SmallCochain.from_k(A, 0, "g")
    a2 = SmallCochain.from_k(A, 2, "g")
    a3 = SmallCochain.from_kx(A, 3, "g")
    for j in (1, 2):
        assert compose_place_small(a2, b0, j).value.is_zero()
    for j in (1, 2, 3):
        assert compose_place_small(a3, b0, j).value.is_zero()


# -- Gerstenhaber bracket --------------------------------------------------------


def test_bracket_of_degree_zero_pair_is_zero(sweedler):
    A = sweedler
    a = SmallCochain.from_k(A, 0, "g")
    out = bracket_small_generic(a, a)
    assert out.degree == 0 and out.value.is_zero()


def test_bracket_degree_bound_enforced(sweedler):
    a = SmallCochain.from_kx(sweedler, 3, "g")
    with pytest.raises(ProductsError, match="bound"):
        bracket_small_generic(a, a, bound=4)


def test_bracket_odd_self_vanishes(sweedler):
    A = sweedler
    x1 = SmallCochain.from_kx(A, 1, 1)
    assert bracket_small_generic(x1, x1).value.is_zero()


def test_delta_sum(sweedler):
    K = sweedler.K
    alpha = sweedler.alpha
    assert delta_sum(alpha, K.elem("g"), 0).is_zero()
    assert delta_sum(alpha, K.elem("g"), 2).is_zero()
    assert delta_sum(alpha, K.elem("g"), 3) == K.elem("g")
    assert delta_sum(alpha, K.elem(1), 3) == K.elem(3)


def test_closed_bracket_formulas(sweedler):
    A = sweedler
    K = A.K
    two_g = bracket_small_closed(
        SmallCochain.from_k(A, 2, "g"), SmallCochain.from_kx(A, 1, 1), witness=True
    )
    assert two_g.value == A.k_embed(K.elem({"g": 2}))
    zero = bracket_small_closed(
        SmallCochain.from_k(A, 0, "g"), SmallCochain.from_kx(A, 1, "g"), witness=True
    )
    assert zero.value.is_zero()
    ee = bracket_small_closed(
        SmallCochain.from_k(A, 2, "g"), SmallCochain.from_k(A, 2, 1), witness=True
    )
    assert ee.degree == 3 and ee.value.is_zero()


def test_closed_bracket_requires_witness(sweedler):
    a = SmallCochain.from_k(sweedler, 2, "g")
    b = SmallCochain.from_kx(sweedler, 1, 1)
    with pytest.raises(ProductsError, match="witness"):
        bracket_small_closed(a, b, witness=None)


def test_closed_bracket_requires_canonical_inputs(sweedler):
    A = sweedler
    mixed = SmallCochain(A, 2, A.one + A.monomial(A.K.elem({"g": 1}), 1), check=False)
    with pytest.raises(ProductsError, match="canonical"):
        bracket_small_closed(mixed, SmallCochain.from_kx(A, 1, 1), witness=True)


def _canonical(alg, parity, m, lam):
    if parity == 0:
        return SmallCochain.from_k(alg, 2 * m, lam)
    return SmallCochain.from_kx(alg, 2 * m + 1, lam)


def test_generic_bracket_matches_closed_sweedler(sweedler):
    A = sweedler
    for pa in (0, 1):
        for ma in (0, 1):
            for pb in (0, 1):
                for mb in (0, 1):
                    for la in ("1", "g"):
                        for lb in ("1", "g"):
                            a = _canonical(A, pa, ma, la)
                            b = _canonical(A, pb, mb, lb)
                            got = bracket_small_generic(a, b)
                            want = bracket_small_closed(a, b, witness=True)
                            assert got == want, (pa, ma, pb, mb, la, lb)


def test_generic_bracket_matches_closed_c4(c4_sign):
    A = c4_sign
    for pa in (0, 1):
        for ma in (0, 1):
            for pb in (0, 1):
                for mb in (0, 1):
                    for la, lb in (("1", "g"), ("g", "g"), ("g", "1"), ("1", "1")):
                        a = _canonical(A, pa, ma, la)
                        b = _canonical(A, pb, mb, lb)
                        got = bracket_small_generic(a, b)
                        want = bracket_small_closed(a, b, witness=True)
                        assert got == want, (pa, ma, pb, mb, la, lb)


def test_odd_odd_closed_bracket_carries_x(sweedler):
    A = sweedler
    a = SmallCochain.from_kx(A, 1, 1)
    b = SmallCochain.from_kx(A, 3, "g")
    out = bracket_small_closed(a, b, witness=True)
    # (delta_1(g) - delta_3(1) g) x = (g - 3g) x
    assert out.value == A.monomial(A.K.elem({"g": -2}), 1)
    assert bracket_small_generic(a, b) == out


def test_even_classes_bracket_to_zero(sweedler_complex):
    C = sweedler_complex
    A = C.alg
    for p in (0, 2):
        for q in (0, 2):
            deg = p + q - 1
            if deg < 0:
                continue
            Hd = cohomology_group(C, deg)
            for av in cohomology_group(C, p).reps_ambient:
                for bv in cohomology_group(C, q).reps_ambient:
                    a = SmallCochain(A, p, AElem(A, av), check=False)
                    b = SmallCochain(A, q, AElem(A, bv), check=False)
                    out = bracket_small_generic(a, b)
                    assert Hd.is_coboundary(out.value.coords)


def test_second_kind_bracket_on_unit_pair(c4_sign):
    A = c4_sign
    x1 = SmallCochain.from_kx(A, 1, 1)
    gx = SmallCochain.from_kx(A, 1, "g")
    assert bracket_small_generic(x1, gx).value.is_zero()
    assert bracket_small_closed(x1, gx, witness=True).value.is_zero()


# -- serialized class tables ------------------------------------------------------


def test_cup_class_table_shape(sweedler_complex):
    rows = cup_class_table(sweedler_complex, 2)
    assert len(rows) == 6
    for row in rows:
        assert set(row) == {
            "deg_a",
            "deg_b",
            "basis_index_a",
            "basis_index_b",
            "result_class_coords",
        }
    F = sweedler_complex.field
    by_deg = {(r["deg_a"], r["deg_b"]): r for r in rows}
    unit_sq = by_deg[(0, 0)]
    assert any(not F.decode(c).is_zero() for c in unit_sq["result_class_coords"])
    odd_sq = by_deg[(1, 1)]
    assert all(F.decode(c).is_zero() for c in odd_sq["result_class_coords"])


def test_bracket_class_table_even_rows_vanish(sweedler_complex):
    rows = bracket_class_table(sweedler_complex, 3)
    assert rows
    F = sweedler_complex.field
    for row in rows:
        if row["deg_a"] % 2 == 0 and row["deg_b"] % 2 == 0:
            assert all(F.decode(c).is_zero() for c in row["result_class_coords"])


# -- validation edges --------------------------------------------------------------


def test_small_cochain_rejects_untwisted_value(sweedler):
    with pytest.raises(ProductsError, match="invariant"):
        SmallCochain(sweedler, 0, sweedler.x)


def test_canonical_constructor_parity(sweedler):
    with pytest.raises(ProductsError, match="even"):
        SmallCochain.from_k(sweedler, 1, 1)
    with pytest.raises(ProductsError, match="odd"):
        SmallCochain.from_kx(sweedler, 2, 1)


def test_bar_cochain_rejects_bad_index(sweedler):
    with pytest.raises(ProductsError, match="index"):
        BarCochain(sweedler, 1, {(2,): sweedler.one})


def test_bar_cochain_invariance_check(sweedler):
    with pytest.raises(ProductsError, match="invariant"):
        BarCochain(sweedler, 1, {(1,): sweedler.one}, check=True)
