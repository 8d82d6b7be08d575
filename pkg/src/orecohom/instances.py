"""Canned instances used by the tests, the demos, and the command line.

Each builder returns a ready-made extension algebra, plus whatever extra
data (character, distinguished element) the closed-form reports consume.
All of them run on exact fields, so every downstream computation is exact.
"""

from __future__ import annotations

from .fields import QQ, Field, extension_field, prime_field
from .kalgebra import (
    AlgebraK,
    Endo,
    GroupData,
    cyclic_group,
    character_from_values,
    endo_from_character,
    group_algebra,
    group_from_presentation_gh4,
    identity_endo,
    scalar_algebra,
)
from .linalg import Mat
from .monogenic import MonogenicAlgebra


def gaussian_rationals() -> Field:
    """The rationals with a square root of -1 adjoined."""
    return extension_field(QQ, [1, 0, 1], "i")


def sweedler() -> tuple[MonogenicAlgebra, list]:
    """Sign character on the two-element group, square of x equal to zero."""
    G = cyclic_group(2)
    K = group_algebra(G, QQ)
    chi = character_from_values(G, QQ, {"g": -1})
    alpha = endo_from_character(K, chi)
    alg = MonogenicAlgebra(K, alpha, [{}, {}])
    return alg, chi


def sweedler_invertible() -> tuple[MonogenicAlgebra, list]:
    """Same twist as ``sweedler`` but with x squaring to 1, making the
    constant coefficient invertible."""
    G = cyclic_group(2)
    K = group_algebra(G, QQ)
    chi = character_from_values(G, QQ, {"g": -1})
    alpha = endo_from_character(K, chi)
    alg = MonogenicAlgebra(K, alpha, [{}, {"1": -1}])
    return alg, chi


def taft(n: int, p: int, zeta: int) -> tuple[MonogenicAlgebra, list]:
    """Cyclic group of order n over GF(p), twisting by a primitive n-th root
    zeta, with x to the n equal to zero."""
    F = prime_field(p)
    G = cyclic_group(n)
    K = group_algebra(G, F)
    chi = character_from_values(G, F, {"g": zeta})
    alpha = endo_from_character(K, chi)
    alg = MonogenicAlgebra(K, alpha, [{}] * n)
    return alg, chi


def c4_sign(xi=1) -> tuple[MonogenicAlgebra, list, str]:
    """Order-4 cyclic group with the sign character; x squares to
    xi times (g^2 - 1).  The n-th character power is trivial and the
    distinguished element g has square different from 1."""
    G = cyclic_group(4)
    K = group_algebra(G, QQ)
    chi = character_from_values(G, QQ, {"g": -1})
    alpha = endo_from_character(K, chi)
    s = QQ.scalar(xi)
    alg = MonogenicAlgebra(K, alpha, [{}, {"1": s, "g^2": -s}])
    return alg, chi, "g"


def gh4_instance(u: int) -> tuple[MonogenicAlgebra, list]:
    """The order-4u group generated by g and h with g**u = h**4 = 1 and
    h g = g^{-1} h, twisted by the character sending g to 1 and h to a
    fourth root of unity; x squares to zero."""
    F = gaussian_rationals()
    G = group_from_presentation_gh4(u)
    K = group_algebra(G, F)
    chi = character_from_values(G, F, {"g": F.one, "h": F.gen})
    alpha = endo_from_character(K, chi)
    alg = MonogenicAlgebra(K, alpha, [{}, {}])
    return alg, chi


def qq_pair_swap(n: int = 3):
    """The split two-dimensional algebra with the swap twist.

    With n = 3 the swap has order 2, so the middle twist power is the
    identity and no witness can exist: one of the required differences is
    zero.  Returns (algebra, twist) without building the extension."""
    F = QQ
    quads = [(0, 0, 0, F.one), (1, 1, 1, F.one)]
    K = AlgebraK.from_structure_constants(
        F, 2, ["e1", "e2"], (F.one, F.one), quads
    )
    swap = Endo(K, Mat(F, [[F.zero, F.one], [F.one, F.zero]]))
    alg = MonogenicAlgebra(K, swap, [{}] * n)
    return alg


def qq_triple_shift() -> MonogenicAlgebra:
    """The split three-dimensional algebra with the cyclic shift twist and
    x cubed equal to 1; the shift has order 3, and a witness with all
    distinct components exists."""
    F = QQ
    quads = [(i, i, i, F.one) for i in range(3)]
    K = AlgebraK.from_structure_constants(
        F, 3, ["e1", "e2", "e3"], (F.one,) * 3, quads
    )
    shift = Endo(
        K,
        Mat(
            F,
            [
                [F.zero, F.zero, F.one],
                [F.one, F.zero, F.zero],
                [F.zero, F.one, F.zero],
            ],
        ),
    )
    lam3 = {"e1": -1, "e2": -1, "e3": -1}
    return MonogenicAlgebra(K, shift, [{}, {}, lam3])


def line_cubic() -> MonogenicAlgebra:
    """Rational scalars, identity twist, x**3 + x**2 + 2x + 1."""
    K = scalar_algebra(QQ)
    return MonogenicAlgebra(K, identity_endo(K), [1, 2, 1])


def untwisted_square(c: int = 1) -> MonogenicAlgebra:
    """Rational scalars, identity twist, x**2 + c."""
    K = scalar_algebra(QQ)
    return MonogenicAlgebra(K, identity_endo(K), [0, c])


def gf3_cubic() -> MonogenicAlgebra:
    """GF(3) scalars, identity twist, x**3 + 1; the derivative vanishes."""
    K = scalar_algebra(prime_field(3))
    return MonogenicAlgebra(K, identity_endo(K), [0, 0, 1])


def rank_one_case1_data():
    """Order-8 cyclic group over the rationals with i adjoined, character
    sending the generator to a fourth root of unity, distinguished element
    its square; the square of the character is nontrivial."""
    F = gaussian_rationals()
    G = cyclic_group(8)
    chi = character_from_values(G, F, {"g": F.gen})
    return F, G, chi, "g^2", 2


def rank_one_case2_data(xi=1):
    """Order-4 cyclic group with the sign character and distinguished
    element the generator; the squared character is trivial and the
    distinguished square is not 1."""
    F = QQ
    G = cyclic_group(4)
    chi = character_from_values(G, F, {"g": -1})
    return F, G, chi, "g", 2, xi


def rank_one_broken_data():
    """The inadmissible configuration: a fourth root of unity at the
    distinguished element with n = 2, so the character value is not a
    primitive square root of unity."""
    F = gaussian_rationals()
    G = cyclic_group(4)
    chi = character_from_values(G, F, {"g": F.gen})
    return F, G, chi, "g", 2


def quaternion_half_turn_data(rho=1):
    """Angle pi rotation data over the rationals with x**2 - rho; the
    half-angle unit is the last quaternion generator."""
    F = QQ
    lam2 = {"1": F.scalar(-rho)} if rho else {}
    return F, F.scalar(-1), F.zero, F.zero, F.one, [{}, lam2]
