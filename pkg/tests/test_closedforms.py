"""Closed-form tables checked end to end against the generic pipeline."""

import pytest

from orecohom.fields import QQ
from orecohom.kalgebra import Endo
from orecohom.linalg import Mat, span_equal
from orecohom.monogenic import MonogenicAlgebra, MonogenicError
from orecohom.cohomology import (
    Bimodule,
    build_small_complex,
    cohomology_dims,
    cohomology_group,
)
from orecohom.products import SmallCochain, cup_small
from orecohom.closedforms import (
    ClosedFormError,
    certify_diagonalizable,
    character_class_basis,
    check_collapsed_cochain_spaces,
    check_collapsed_differentials,
    class_membership_period,
    cohomology_periodicity,
    collapsed_cohomology_table,
    cyclic_group_cohomology,
    diagonalizable_cohomology_table,
    find_witness,
    group_algebra_cohomology_table,
    presentation_report,
    quaternion_rotation_report,
    rank_one_hopf_report,
    untwisted_annihilator_table,
    untwisted_model_check,
    witness_check,
)
from orecohom import instances


def complex_of(alg, d):
    return build_small_complex(alg, Bimodule.regular(alg), d)


@pytest.fixture(scope="module")
def sweedler():
    alg, chi = instances.sweedler()
    return alg, chi, complex_of(alg, 6)


@pytest.fixture(scope="module")
def sweedler_inv():
    alg, chi = instances.sweedler_invertible()
    return alg, chi, complex_of(alg, 6)


@pytest.fixture(scope="module")
def taft3():
    alg, chi = instances.taft(3, 7, 2)
    return alg, chi, complex_of(alg, 6)


@pytest.fixture(scope="module")
def c4s():
    alg, chi, g1 = instances.c4_sign()
    return alg, chi, complex_of(alg, 6)


@pytest.fixture(scope="module")
def gh4u3():
    alg, chi = instances.gh4_instance(3)
    return alg, chi, complex_of(alg, 6)


@pytest.fixture(scope="module")
def shift3():
    alg = instances.qq_triple_shift()
    return alg, complex_of(alg, 6)


# -- witnesses -------------------------------------------------------------


def test_witness_sweedler(sweedler):
    alg, _, _ = sweedler
    w = find_witness(alg)
    assert w
    assert w.value == alg.K.elem("g")


def test_witness_check_flags(sweedler):
    alg, _, _ = sweedler
    w = witness_check(alg, "1")
    assert w.central and w.power_fixed and not w.differences_regular
    assert not w


def test_witness_none_for_pair_swap():
    alg = instances.qq_pair_swap(3)
    assert find_witness(alg) is None


def test_witness_triple_shift(shift3):
    alg, _ = shift3
    w = find_witness(alg)
    assert w


def test_nonzero_middle_rejected_under_witness(sweedler):
    alg, _, _ = sweedler
    with pytest.raises(MonogenicError):
        MonogenicAlgebra(alg.K, alg.alpha, [{"1": 1}, {}])


# -- collapsed cochain spaces and differentials -----------------------------


def test_collapsed_spaces_sweedler(sweedler):
    alg, _, C = sweedler
    rep = check_collapsed_cochain_spaces(C)
    assert rep["match"], rep["mismatches"]
    assert rep["closed_table"]["dims"] == [2] * 7


def test_collapsed_spaces_gh4(gh4u3):
    alg, _, C = gh4u3
    rep = check_collapsed_cochain_spaces(C)
    assert rep["match"], rep["mismatches"]
    assert rep["closed_table"]["dims"] == [6, 6, 2, 2, 6, 6, 2]


def test_collapsed_differentials(sweedler, c4s, shift3):
    for C in (sweedler[2], c4s[2], shift3[1]):
        rep = check_collapsed_differentials(C)
        assert rep["match"], rep["mismatches"]


def test_collapsed_cohomology_sweedler(sweedler):
    _, _, C = sweedler
    rep = collapsed_cohomology_table(C, up_to=5)
    assert rep["match"], rep["mismatches"]
    assert rep["closed_table"]["dims"] == [1, 1, 1, 1, 1, 1]


def test_collapsed_cohomology_c4_sign(c4s):
    _, _, C = c4s
    rep = collapsed_cohomology_table(C, up_to=5)
    assert rep["match"], rep["mismatches"]
    assert rep["closed_table"]["dims"] == [2, 1, 1, 1, 1, 1]


def test_collapsed_cohomology_shift3(shift3):
    _, C = shift3
    rep = collapsed_cohomology_table(C, up_to=5)
    assert rep["match"], rep["mismatches"]
    assert rep["closed_table"]["dims"] == [1, 0, 0, 0, 0, 0]


def test_block_elements_commute_with_constant(c4s, gh4u3, sweedler_inv):
    from orecohom.kalgebra import twisted_invariants_k

    for alg in (c4s[0], gh4u3[0], sweedler_inv[0]):
        K, n = alg.K, alg.n
        lam_n = alg.f_coeffs[-1]
        for m in range(3):
            W = twisted_invariants_k(K, alg.alpha, m * n)
            for j in range(W.cols):
                u = W.column(j)
                lhs = K.kmul(u, lam_n)
                rhs = K.kmul(alg.alpha.apply_power(n, u), lam_n)
                assert lhs == rhs


# -- cyclic-group comparison -------------------------------------------------


def test_cyclic_comparison_sweedler_invertible(sweedler_inv):
    _, _, C = sweedler_inv
    rep = cyclic_group_cohomology(C, up_to=5)
    assert rep["match"], rep["mismatches"]
    assert rep["closed_table"]["dims"] == [1, 0, 0, 0, 0, 0]


def test_cyclic_comparison_shift3(shift3):
    _, C = shift3
    rep = cyclic_group_cohomology(C, up_to=5)
    assert rep["match"], rep["mismatches"]


def test_cyclic_comparison_needs_invertible_constant(sweedler):
    _, _, C = sweedler
    with pytest.raises(ClosedFormError):
        cyclic_group_cohomology(C, up_to=4)


# -- diagonalizable twists -----------------------------------------------------


def test_certify_diagonal_cases(sweedler):
    alg, _, _ = sweedler
    assert certify_diagonalizable(alg.alpha)

    pair = instances.qq_pair_swap(3)
    assert certify_diagonalizable(pair.alpha)

    F = QQ
    K = pair.K
    jordan = Endo(K, Mat(F, [[F.one, F.one], [F.zero, F.one]]))
    assert not certify_diagonalizable(jordan)

    shift = instances.qq_triple_shift()
    assert not certify_diagonalizable(shift.alpha)

    from orecohom.kalgebra import cyclic_group, group_algebra

    Fi = instances.gaussian_rationals()
    Ki = group_algebra(cyclic_group(2), Fi)
    two = Fi.from_int(2)
    elusive = Endo(Ki, Mat(Fi, [[Fi.zero, two], [Fi.one, Fi.zero]]))
    with pytest.raises(ClosedFormError):
        certify_diagonalizable(elusive)


def test_diagonalizable_table_sweedler(sweedler):
    _, _, C = sweedler
    rep = diagonalizable_cohomology_table(C, up_to=5)
    assert rep["match"], rep["mismatches"]
    assert rep["closed_table"]["dims"] == [1, 1, 1, 1, 1, 1]
    assert rep["closed_table"]["odd_cup_rule"] == "zero"


def test_diagonalizable_table_c4_sign(c4s):
    _, _, C = c4s
    rep = diagonalizable_cohomology_table(C, up_to=5)
    assert rep["match"], rep["mismatches"]
    assert rep["closed_table"]["dims"] == [2, 1, 1, 1, 1, 1]


def test_diagonalizable_table_gh4(gh4u3):
    _, _, C = gh4u3
    rep = diagonalizable_cohomology_table(C, up_to=5)
    assert rep["match"], rep["mismatches"]
    assert rep["closed_table"]["dims"] == [2, 2, 1, 1, 2, 2]


def test_odd_cup_rule_on_classes(c4s):
    from orecohom.monogenic import AElem

    alg, _, C = c4s
    H1 = cohomology_group(C, 1)
    H2 = cohomology_group(C, 2)
    assert H1.dim == 1 and H2.dim == 1
    for va in H1.reps_ambient:
        for vb in H1.reps_ambient:
            a = SmallCochain(alg, 1, AElem(alg, va))
            b = SmallCochain(alg, 1, AElem(alg, vb))
            prod = cup_small(a, b)
            assert all(c.is_zero() for c in H2.class_coords(prod.value.coords))


# -- identity twist ------------------------------------------------------------


def test_untwisted_model_line_cubic():
    alg = instances.line_cubic()
    C = complex_of(alg, 5)
    rep = untwisted_model_check(C)
    assert rep["match"], rep["mismatches"]


def test_untwisted_model_gf3_cubic():
    alg = instances.gf3_cubic()
    C = complex_of(alg, 5)
    rep = untwisted_model_check(C)
    assert rep["match"], rep["mismatches"]


def test_untwisted_rejects_twisted(sweedler):
    _, _, C = sweedler
    with pytest.raises(ClosedFormError):
        untwisted_model_check(C)


def test_untwisted_annihilator_line_cubic():
    alg = instances.line_cubic()
    C = complex_of(alg, 5)
    rep = untwisted_annihilator_table(C, up_to=4)
    assert rep["match"], rep["mismatches"]
    assert rep["closed_table"]["dims"] == [3, 0, 0, 0, 0]


def test_untwisted_annihilator_gf3_cubic():
    alg = instances.gf3_cubic()
    C = complex_of(alg, 5)
    rep = untwisted_annihilator_table(C, up_to=4)
    assert rep["match"], rep["mismatches"]
    assert rep["closed_table"]["dims"] == [3, 3, 3, 3, 3]


def test_untwisted_annihilator_squares():
    alg = instances.untwisted_square(1)
    C = complex_of(alg, 5)
    rep = untwisted_annihilator_table(C, up_to=4)
    assert rep["match"], rep["mismatches"]
    assert rep["closed_table"]["dims"] == [2, 0, 0, 0, 0]

    alg0 = instances.untwisted_square(0)
    C0 = complex_of(alg0, 5)
    rep0 = untwisted_annihilator_table(C0, up_to=4)
    assert rep0["match"], rep0["mismatches"]
    assert rep0["closed_table"]["dims"] == [2, 1, 1, 1, 1]


# -- character-class bases ------------------------------------------------------


def test_character_class_basis_gh4(gh4u3):
    alg, chi, _ = gh4u3
    K = alg.K
    at0 = character_class_basis(K, chi, 0)
    assert all(at0["eligible"]) and at0["basis"].cols == 6
    assert at0["matches_generic"]

    at1 = character_class_basis(K, chi, 1)
    assert not any(at1["eligible"]) and at1["basis"].cols == 0
    assert at1["matches_generic"]

    at2 = character_class_basis(K, chi, 2)
    assert sum(at2["eligible"]) == 2 and at2["basis"].cols == 2
    assert at2["matches_generic"]


def test_character_class_basis_taft(taft3):
    alg, chi, _ = taft3
    rep = character_class_basis(alg.K, chi, 1)
    assert rep["basis"].cols == 0 and rep["matches_generic"]


def test_character_class_subspaces_match_all_r(gh4u3):
    alg, chi, _ = gh4u3
    for r in range(2 * alg.n * 3 + 1):
        assert character_class_basis(alg.K, chi, r)["matches_generic"]


# -- group-algebra tables --------------------------------------------------------


def test_group_table_gh4(gh4u3):
    _, chi, C = gh4u3
    rep = group_algebra_cohomology_table(C, chi, up_to=5)
    assert rep["match"], rep["mismatches"]
    assert rep["closed_table"]["dims"] == [2, 2, 1, 1, 2, 2]


def test_group_table_taft3(taft3):
    _, chi, C = taft3
    rep = group_algebra_cohomology_table(C, chi, up_to=5)
    assert rep["match"], rep["mismatches"]
    assert rep["closed_table"]["dims"] == [1, 1, 1, 1, 1, 1]


def test_gh4_symmetry_spaces(gh4u3):
    alg, _, C = gh4u3
    K = alg.K
    F = K.field
    sym = [K.elem("1").coords, (K.elem("g") + K.elem("g^2")).coords]
    anti = [(K.elem("g") - K.elem("g^2")).coords]

    def embed(cols, xdeg):
        out = []
        for u in cols:
            v = [F.zero] * alg.adim
            for b, c in enumerate(u):
                v[alg.idx(b, xdeg)] = c
            out.append(tuple(v))
        return Mat.from_columns(F, out, alg.adim)

    H0 = cohomology_group(C, 0)
    assert span_equal(
        embed(sym, 0), Mat.from_columns(F, H0.reps_ambient, alg.adim)
    )

    H2 = cohomology_group(C, 2)
    assert H2.dim == 1
    cls = H2.class_coords(embed(anti, 0).column(0))
    assert any(not c.is_zero() for c in cls)

    H1 = cohomology_group(C, 1)
    x_cls = H1.class_coords(alg.monomial(K.unit, 1).coords)
    assert any(not c.is_zero() for c in x_cls)


def test_gh4_even_strictly_smaller(gh4u3):
    _, _, C = gh4u3
    dims = cohomology_dims(C, 2)
    assert dims[2] < dims[0]


# -- periods and presentation ----------------------------------------------------


def test_class_membership_period_gh4(gh4u3):
    alg, chi, _ = gh4u3
    rep = class_membership_period(alg.K, chi, alg.n)
    assert rep["match"]
    by_class = {row["class"]: row["m0"] for row in rep["rows"]}
    assert by_class["1"] == 2
    assert by_class["g"] == 1
    assert by_class["h"] == 2


def test_periodicity_gh4(gh4u3):
    _, chi, C = gh4u3
    rep = cohomology_periodicity(C, chi, up_to=5)
    assert rep["match"], rep["mismatches"]
    assert rep["period"] == 4
    assert rep["dims"] == [2, 2, 1, 1, 2, 2]


def test_periodicity_taft3(taft3):
    _, chi, C = taft3
    rep = cohomology_periodicity(C, chi, up_to=5)
    assert rep["match"], rep["mismatches"]
    assert rep["period"] == 2


def test_presentation_gh4(gh4u3):
    _, chi, C = gh4u3
    rep = presentation_report(C, chi, up_to=5)
    assert rep["match"], rep["mismatches"]
    kinds = {(g["degree"], g["kind"]): g["count"] for g in rep["generators"]}
    assert kinds[(0, "degree-zero ring")] == 2
    assert kinds[(1, "odd module generators")] == 2
    assert kinds[(2, "even module generators")] == 1
    assert kinds[(4, "unit class")] == 1
    assert rep["exterior_pattern"] is None


def test_presentation_taft3_exterior(taft3):
    _, chi, C = taft3
    rep = presentation_report(C, chi, up_to=5)
    assert rep["match"], rep["mismatches"]
    assert rep["exterior_pattern"] is not None and rep["exterior_pattern"]["holds"]


# -- rank-one extensions -----------------------------------------------------------


def test_rank_one_broken_raises():
    F, G, chi, g1, n = instances.rank_one_broken_data()
    with pytest.raises(ClosedFormError):
        rank_one_hopf_report(F, G, chi, g1, n, 1, up_to=3)


def test_rank_one_case1():
    F, G, chi, g1, n = instances.rank_one_case1_data()
    rep = rank_one_hopf_report(F, G, chi, g1, n, 1, up_to=5)
    assert rep["match"], rep["mismatches"]
    assert rep["case"] == "monogenic over the quotient group algebra"
    assert rep["quotient_group_order"] == 4
    assert rep["quotient_table"]["closed_table"]["dims"] == [1, 1, 0, 0, 1, 1]
    admissibility = [
        h for h in rep["hypotheses"] if "not admissible" in h["name"]
    ]
    assert admissibility and admissibility[0]["holds"]


def test_rank_one_case2():
    F, G, chi, g1, n, xi = instances.rank_one_case2_data()
    rep = rank_one_hopf_report(F, G, chi, g1, n, xi, up_to=5)
    assert rep["match"], rep["mismatches"]
    assert rep["case"] == "monogenic over the group algebra"
    assert rep["dims"] == [2, 1, 1, 1, 1, 1]
    assert rep["dims"][1:] == rep["quotient_dims"][1:]
    rows = rep["bracket_rows"]
    assert rows and all(row["closed_matches_oracle"] for row in rows)
    low = [row for row in rows if row["degrees"] == [1, 1]]
    assert low and all(row["matches_commutator_class"] for row in low)


def test_mixed_degree_bracket_keeps_trace_terms(c4s):
    from orecohom.monogenic import AElem
    from orecohom.products import bracket_small_generic

    alg, _, C = c4s
    H1 = cohomology_group(C, 1)
    H3 = cohomology_group(C, 3)
    a = SmallCochain(alg, 1, AElem(alg, H1.reps_ambient[0]))
    b = SmallCochain(alg, 3, AElem(alg, H3.reps_ambient[0]))
    got = bracket_small_generic(a, b)
    cls = H3.class_coords(got.value.coords)
    assert any(not c.is_zero() for c in cls)


def test_rank_one_degenerate_distinguished_square():
    from orecohom.kalgebra import character_from_values, cyclic_group

    G = cyclic_group(2)
    chi = character_from_values(G, QQ, {"g": -1})
    rep = rank_one_hopf_report(QQ, G, chi, "g", 2, 1, up_to=4)
    assert rep["match"], rep["mismatches"]
    assert rep["case"] == "monogenic over the group algebra"
    assert rep["dims"] == rep["quotient_dims"]


# -- quaternions under rotation ------------------------------------------------------


def test_quaternion_half_turn_unit():
    rep = quaternion_rotation_report(*instances.quaternion_half_turn_data(1), up_to=4)
    assert rep["match"], rep["mismatches"]
    assert rep["generic_table"]["dims"] == [2, 0, 0, 0, 0]
    F = QQ
    assert [F.decode(c) for c in rep["companion_coefficients"]] == [F.zero, F.one]


def test_quaternion_half_turn_nilpotent():
    rep = quaternion_rotation_report(*instances.quaternion_half_turn_data(0), up_to=4)
    assert rep["match"], rep["mismatches"]
    assert rep["generic_table"]["dims"] == [2, 1, 1, 1, 1]


def test_quaternion_ineligible_coefficient():
    F, cos, sin, ch, sh, _ = instances.quaternion_half_turn_data(1)
    with pytest.raises(ClosedFormError):
        quaternion_rotation_report(F, cos, sin, ch, sh, [{"i": 1}, {}], up_to=2)
