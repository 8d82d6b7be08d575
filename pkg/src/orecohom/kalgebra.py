"""Coefficient algebras: structure constants, group algebras, quaternions.

An :class:`AlgebraK` stores sparse structure constants c_{ij}^k over one exact
field together with optional group metadata.  Twisting endomorphisms live in
:class:`Endo`; the group-algebra case builds them from characters.  Everything
is validated exhaustively at desk scale (all basis triples).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .fields import Field, Scalar
from .linalg import Mat, kernel_basis, rank, vadd, vscale


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple[str, ...] = ()

    def __bool__(self):
        return self.ok


class GroupData:
    """A finite group as a verified multiplication table on element indices."""

    def __init__(self, labels: list[str], table: list[list[int]]):
        n = len(labels)
        if len(table) != n or any(len(row) != n for row in table):
            raise AlgebraError("group table must be square over the label list")
        ident = None
        for e in range(n):
            if all(table[e][x] == x and table[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise AlgebraError("group table has no identity")
        for a, b, c in itertools.product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise AlgebraError(f"group table not associative at ({a},{b},{c})")
        inverses = []
        for a in range(n):
            inv = next((b for b in range(n) if table[a][b] == ident), None)
            if inv is None or table[inv][a] != ident:
                raise AlgebraError(f"element {labels[a]} has no inverse")
            inverses.append(inv)
        self.order = n
        self.labels = list(labels)
        self.table = [list(r) for r in table]
        self.identity = ident
        self.inverses = inverses

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def conj(self, h: int, g: int) -> int:
        """h g h^-1."""
        return self.mul(self.mul(h, g), self.inverses[h])

    @functools.cached_property
    def conj_class_of(self) -> list[int]:
        """conj_class_of[g] = smallest index in the class of g."""
        rep = list(range(self.order))
        for g in range(self.order):
            orbit = {self.conj(h, g) for h in range(self.order)}
            m = min(orbit)
            for x in orbit:
                rep[x] = min(rep[x], m)
        return rep

    def conj_classes(self) -> list[list[int]]:
        classes: dict[int, list[int]] = {}
        for g in range(self.order):
            classes.setdefault(self.conj_class_of[g], []).append(g)
        return [classes[k] for k in sorted(classes)]

    def centralizer(self, g: int) -> list[int]:
        return [h for h in range(self.order) if self.mul(h, g) == self.mul(g, h)]

    def center_indices(self) -> list[int]:
        return [g for g in range(self.order) if len(self.centralizer(g)) == self.order]

    def subgroup_generated(self, gens: list[int]) -> list[int]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    for b in (self.mul(a, g), self.mul(a, self.inverses[g])):
                        if b not in seen:
                            seen.add(b)
                            nxt.append(b)
            frontier = nxt
        return sorted(seen)

    def quotient_group(self, normal: list[int]) -> tuple["GroupData", list[int]]:
        """Quotient by a (verified) normal subgroup; returns (Q, projection)."""
        nset = set(normal)
        if self.identity not in nset:
            raise AlgebraError("subgroup must contain the identity")
        for h in range(self.order):
            for x in normal:
                if self.conj(h, x) not in nset:
                    raise AlgebraError("subgroup is not normal")
        coset_of = [-1] * self.order
        cosets: list[list[int]] = []
        for g in range(self.order):
            if coset_of[g] >= 0:
                continue
            cs = sorted(self.mul(g, x) for x in normal)
            for x in cs:
                coset_of[x] = len(cosets)
            cosets.append(cs)
        labels = [self.labels[cs[0]] + "N" for cs in cosets]
        table = [
            [coset_of[self.mul(cs[0], ds[0])] for ds in cosets] for cs in cosets
        ]
        return GroupData(labels, table), coset_of


def cyclic_group(n: int) -> GroupData:
    labels = ["1"] + [f"g^{j}" if j > 1 else "g" for j in range(1, n)]
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return GroupData(labels, table)


def group_from_presentation_gh4(u: int) -> GroupData:
    """Order-4u group with normal form g^j h^l (0 <= j < u, 0 <= l < 4),
    subject to g^u = h^4 = 1 and h g = g^-1 h."""
    if u < 1:
        raise AlgebraError("u must be positive")

    def idx(j: int, l: int) -> int:
        return (j % u) * 4 + (l % 4)

    def label(j: int, l: int) -> str:
        parts = []
        if j % u:
            parts.append("g" if j % u == 1 else f"g^{j % u}")
        if l % 4:
            parts.append("h" if l % 4 == 1 else f"h^{l % 4}")
        return "*".join(parts) if parts else "1"

    labels = [label(j, l) for j in range(u) for l in range(4)]
    table = [[0] * (4 * u) for _ in range(4 * u)]
    for j, l, j2, l2 in itertools.product(range(u), range(4), range(u), range(4)):
        sign = -1 if l % 2 else 1
        table[idx(j, l)][idx(j2, l2)] = idx(j + sign * j2, l + l2)
    G = GroupData(labels, table)
    # the defining relations, rechecked on the finished table
    g, h = G.labels.index("g") if u > 1 else G.identity, G.labels.index("h")
    assert G.conj(h, g) == G.inverses[g]
    return G


def group_from_table(labels: list[str], table: list[list[int]]) -> GroupData:
    return GroupData(labels, table)


class KElem:
    """Element of an AlgebraK, held as a coordinate vector over its basis."""

    __slots__ = ("alg", "coords")

    def __init__(self, alg: "AlgebraK", coords):
        coords = tuple(alg.field.scalar(c) for c in coords)
        if len(coords) != alg.dim:
            raise AlgebraError("coordinate length mismatch")
        self.alg = alg
        self.coords = coords

    def __add__(self, other):
        return KElem(self.alg, vadd(self.coords, other.coords))

    def __sub__(self, other):
        return KElem(self.alg, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return KElem(self.alg, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, KElem):
            return KElem(self.alg, self.alg.kmul(self.coords, other.coords))
        return KElem(self.alg, vscale(self.alg.field.scalar(other), self.coords))

    def __rmul__(self, other):
        return KElem(self.alg, vscale(self.alg.field.scalar(other), self.coords))

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        return isinstance(other, KElem) and self.alg is other.alg and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.alg), self.coords))

    def __repr__(self):
        terms = [
            f"({c})*{self.alg.basis_names[i]}"
            for i, c in enumerate(self.coords)
            if not c.is_zero()
        ]
        return " + ".join(terms) if terms else "0"


class AlgebraK:
    """Finite-dimensional associative unital algebra via sparse structure constants."""

    def __init__(
        self,
        field: Field,
        dim: int,
        basis_names: list[str],
        unit: tuple,
        mul_table: dict[tuple[int, int], list[tuple[int, Scalar]]],
        group: GroupData | None = None,
    ):
        self.field = field
        self.dim = dim
        self.basis_names = list(basis_names)
        self.unit = tuple(field.scalar(c) for c in unit)
        self.mul_table = {
            ij: [(k, field.scalar(s)) for k, s in terms if not field.scalar(s).is_zero()]
            for ij, terms in mul_table.items()
        }
        self.group = group

    @classmethod
    def from_structure_constants(
        cls, field: Field, dim: int, basis_names, unit, quads, group=None
    ) -> "AlgebraK":
        table: dict[tuple[int, int], list[tuple[int, Scalar]]] = {}
        for i, j, k, s in quads:
            table.setdefault((i, j), []).append((k, field.scalar(s)))
        return cls(field, dim, list(basis_names), tuple(unit), table, group)

    def mul_basis(self, i: int, j: int) -> list[tuple[int, Scalar]]:
        return self.mul_table.get((i, j), [])

    def kmul(self, u: tuple, v: tuple) -> tuple:
        out = [self.field.zero] * self.dim
        for i, a in enumerate(u):
            if a.is_zero():
                continue
            for j, b in enumerate(v):
                if b.is_zero():
                    continue
                ab = a * b
                for k, s in self.mul_basis(i, j):
                    out[k] = out[k] + ab * s
        return tuple(out)

    def elem(self, x) -> KElem:
        if isinstance(x, KElem):
            return x
        if isinstance(x, (int, Fraction, Scalar)):
            s = self.field.scalar(x)
            return KElem(self, tuple(s * c for c in self.unit))
        if isinstance(x, str):
            coords = [self.field.zero] * self.dim
            coords[self.basis_names.index(x)] = self.field.one
            return KElem(self, coords)
        if isinstance(x, dict):
            coords = [self.field.zero] * self.dim
            for name, c in x.items():
                coords[self.basis_names.index(name)] = self.field.scalar(c)
            return KElem(self, coords)
        return KElem(self, x)

    def basis_elem(self, i: int) -> KElem:
        coords = [self.field.zero] * self.dim
        coords[i] = self.field.one
        return KElem(self, coords)

    @functools.cached_property
    def one(self) -> KElem:
        return KElem(self, self.unit)

    def left_mult_matrix(self, u: tuple) -> Mat:
        cols = [self.kmul(u, self.basis_elem(j).coords) for j in range(self.dim)]
        return Mat.from_columns(self.field, cols, self.dim)

    def right_mult_matrix(self, u: tuple) -> Mat:
        cols = [self.kmul(self.basis_elem(j).coords, u) for j in range(self.dim)]
        return Mat.from_columns(self.field, cols, self.dim)

    def center_basis(self) -> Mat:
        rows = []
        for i in range(self.dim):
            e = self.basis_elem(i).coords
            L = self.left_mult_matrix(e)
            R = self.right_mult_matrix(e)
            for r1, r2 in zip(L.data, R.data):
                rows.append([a - b for a, b in zip(r1, r2)])
        return kernel_basis(Mat(self.field, rows, self.dim))


def algebra_validate(K: AlgebraK) -> ValidationReport:
    failures = []
    for i in range(K.dim):
        e = K.basis_elem(i).coords
        if K.kmul(K.unit, e) != e or K.kmul(e, K.unit) != e:
            failures.append(f"unit law fails at basis {i} ({K.basis_names[i]})")
    for i, j, k in itertools.product(range(K.dim), repeat=3):
        ei, ej, ek = (K.basis_elem(t).coords for t in (i, j, k))
        lhs = K.kmul(K.kmul(ei, ej), ek)
        rhs = K.kmul(ei, K.kmul(ej, ek))
        if lhs != rhs:
            failures.append(f"associativity fails at triple ({i},{j},{k})")
            return ValidationReport(False, tuple(failures))
    return ValidationReport(not failures, tuple(failures))


def group_algebra(G: GroupData, field: Field) -> AlgebraK:
    quads = [
        (a, b, G.mul(a, b), field.one) for a in range(G.order) for b in range(G.order)
    ]
    unit = [field.one if i == G.identity else field.zero for i in range(G.order)]
    return AlgebraK.from_structure_constants(
        field, G.order, G.labels, unit, quads, group=G
    )


def scalar_algebra(field: Field) -> AlgebraK:
    """The field itself as a one-dimensional algebra."""
    return AlgebraK.from_structure_constants(
        field, 1, ["1"], [field.one], [(0, 0, 0, field.one)]
    )


def class_sums(K: AlgebraK) -> list[KElem]:
    if K.group is None:
        raise AlgebraError("class sums need group metadata")
    out = []
    for cls in K.group.conj_classes():
        coords = [K.field.zero] * K.dim
        for g in cls:
            coords[g] = K.field.one
        out.append(KElem(K, coords))
    return out


class Endo:
    """Algebra endomorphism of K given by its matrix on the basis."""

    def __init__(self, alg: AlgebraK, matrix: Mat):
        if matrix.rows != alg.dim or matrix.cols != alg.dim:
            raise AlgebraError("endomorphism matrix must be dim x dim")
        self.alg = alg
        self.matrix = matrix
        self._powers: dict[int, Mat] = {0: Mat.identity(alg.field, alg.dim), 1: matrix}

    def apply(self, u: tuple) -> tuple:
        return self.matrix.matvec(u)

    def power_matrix(self, r: int) -> Mat:
        if r < 0:
            raise AlgebraError("negative twist exponent")
        if r not in self._powers:
            self._powers[r] = self.power_matrix(r - 1).matmul(self.matrix)
        return self._powers[r]

    def apply_power(self, r: int, u: tuple) -> tuple:
        return self.power_matrix(r).matvec(u)

    @functools.cached_property
    def is_automorphism(self) -> bool:
        return rank(self.matrix) == self.alg.dim

    @functools.cached_property
    def order(self) -> int | None:
        """Multiplicative order of the matrix, or None if it exceeds 4 dim^2."""
        ident = Mat.identity(self.alg.field, self.alg.dim)
        for r in range(1, 4 * self.alg.dim * self.alg.dim + 1):
            if self.power_matrix(r) == ident:
                return r
        return None

    def validate(self) -> ValidationReport:
        failures = []
        alg = self.alg
        if self.apply(alg.unit) != alg.unit:
            failures.append("endomorphism does not fix the unit")
        for i, j in itertools.product(range(alg.dim), repeat=2):
            ei, ej = alg.basis_elem(i).coords, alg.basis_elem(j).coords
            lhs = self.apply(alg.kmul(ei, ej))
            rhs = alg.kmul(self.apply(ei), self.apply(ej))
            if lhs != rhs:
                failures.append(f"multiplicativity fails at pair ({i},{j})")
                return ValidationReport(False, tuple(failures))
        return ValidationReport(not failures, tuple(failures))


def identity_endo(alg: AlgebraK) -> Endo:
    return Endo(alg, Mat.identity(alg.field, alg.dim))


def validate_character(G: GroupData, chi: list[Scalar]) -> ValidationReport:
    failures = []
    field = chi[0].field
    if chi[G.identity] != field.one:
        failures.append("character does not send the identity to 1")
    for g in range(G.order):
        if chi[g].is_zero():
            failures.append(f"character vanishes at {G.labels[g]}")
    for a, b in itertools.product(range(G.order), repeat=2):
        if chi[G.mul(a, b)] != chi[a] * chi[b]:
            failures.append(f"character not multiplicative at ({a},{b})")
            return ValidationReport(False, tuple(failures))
    return ValidationReport(not failures, tuple(failures))


def endo_from_character(K: AlgebraK, chi: list[Scalar]) -> Endo:
    """Diagonal twist g -> chi(g) g on a group algebra."""
    if K.group is None:
        raise AlgebraError("character twist needs group metadata")
    rep = validate_character(K.group, chi)
    if not rep.ok:
        raise AlgebraError("; ".join(rep.failures))
    field = K.field
    M = Mat(
        field,
        [
            [chi[j] if i == j else field.zero for j in range(K.dim)]
            for i in range(K.dim)
        ],
    )
    return Endo(K, M)


def character_from_values(G: GroupData, field: Field, gen_values: dict[str, Scalar]) -> list[Scalar]:
    """Extend generator values to all of G by the labels' normal form.

    gen_values maps a label (e.g. "g", "h") to its character value; every group
    element must be reachable as a product of the given generators."""
    gens = {G.labels.index(name): field.scalar(v) for name, v in gen_values.items()}
    chi: list[Scalar | None] = [None] * G.order
    chi[G.identity] = field.one
    frontier = [G.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g, val in gens.items():
                b = G.mul(a, g)
                want = chi[a] * val
                if chi[b] is None:
                    chi[b] = want
                    nxt.append(b)
                elif chi[b] != want:
                    raise AlgebraError("generator values are inconsistent")
        frontier = nxt
    if any(c is None for c in chi):
        raise AlgebraError("given generators do not generate the group")
    return chi  # type: ignore[return-value]


def char_power(chi: list[Scalar], r: int) -> list[Scalar]:
    return [c ** r for c in chi]


def character_order(G: GroupData, chi: list[Scalar]) -> int:
    field = chi[0].field
    v = 1
    cur = list(chi)
    while any(c != field.one for c in cur):
        cur = [c0 * c for c0, c in zip(chi, cur)]
        v += 1
        if v > 4 * G.order:
            raise AlgebraError("character order out of range")
    return v


def character_kernel(G: GroupData, chi: list[Scalar]) -> list[int]:
    field = chi[0].field
    return [g for g in range(G.order) if chi[g] == field.one]


def quaternion_algebra(
    field: Field, cos: Scalar, sin: Scalar, cos_half: Scalar, sin_half: Scalar
) -> tuple[AlgebraK, Endo]:
    """Quaternions with the rotation twist about the k-axis.

    The four inputs must satisfy both Pythagorean identities and the
    double-angle relations cos = cos_half^2 - sin_half^2, sin = 2 cos_half sin_half."""
    cos, sin = field.scalar(cos), field.scalar(sin)
    cos_half, sin_half = field.scalar(cos_half), field.scalar(sin_half)
    one = field.one
    if cos * cos + sin * sin != one:
        raise AlgebraError("cos^2 + sin^2 = 1 fails")
    if cos_half * cos_half + sin_half * sin_half != one:
        raise AlgebraError("half-angle Pythagorean identity fails")
    if cos != cos_half * cos_half - sin_half * sin_half or sin != 2 * cos_half * sin_half:
        raise AlgebraError("double-angle identities fail")
    names = ["1", "i", "j", "k"]
    o, z = field.one, field.zero
    # i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j, anticommuting
    quads = [(0, t, t, o) for t in range(4)] + [(t, 0, t, o) for t in range(1, 4)]
    signs = {
        (1, 1): (0, -o), (2, 2): (0, -o), (3, 3): (0, -o),
        (1, 2): (3, o), (2, 1): (3, -o),
        (2, 3): (1, o), (3, 2): (1, -o),
        (3, 1): (2, o), (1, 3): (2, -o),
    }
    quads += [(i, j, k, s) for (i, j), (k, s) in signs.items()]
    alg = AlgebraK.from_structure_constants(field, 4, names, (o, z, z, z), quads)
    M = Mat(
        field,
        [
            [o, z, z, z],
            [z, cos, -sin, z],
            [z, sin, cos, z],
            [z, z, z, o],
        ],
    )
    alpha = Endo(alg, M)
    rep = alpha.validate()
    assert rep.ok, rep.failures
    return alg, alpha


def twisted_invariants_k(K: AlgebraK, alpha: Endo, r: int) -> Mat:
    """Basis of {u in K : u b = alpha^r(b) u for all b}, as columns."""
    rows = []
    for i in range(K.dim):
        e = K.basis_elem(i).coords
        R = K.right_mult_matrix(e)
        L = K.left_mult_matrix(alpha.apply_power(r, e))
        for r1, r2 in zip(R.data, L.data):
            rows.append([a - b for a, b in zip(r1, r2)])
    return kernel_basis(Mat(K.field, rows, K.dim))
