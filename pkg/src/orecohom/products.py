"""Cup product and Gerstenhaber bracket on the small complex.

Two independent routes are implemented and cross-checked: closed formulas on
small cochains, and a normalized bar-complex oracle reached through the
comparison maps psi (small to bar) and phi (bar to small).  The bar side works
with tables indexed by tuples in {1..n-1}^p whose values are twisted-invariant
elements of A; a composed or merged slot value with a K-component migrates
that component left through the preceding slots (twisting by alpha along the
way), and slots reduced to the unit are killed by normalization.
"""

from __future__ import annotations

import itertools

from .cohomology import SmallComplex, classes_equal, cohomology_group, twisted_invariants
from .kalgebra import Endo, KElem, ValidationReport
from .monogenic import AElem, MonogenicAlgebra, Resolution, TensorElem, twist_exponent


class ProductsError(ValueError):
    pass


def f_lambda(alg: MonogenicAlgebra, c: int) -> tuple:
    """K-coordinates of the x^{n-c} coefficient of f; c = 0 gives the unit."""
    if c == 0:
        return alg.K.unit
    return alg.f_coeffs[c - 1]


def delta_sum(alpha: Endo, mu: KElem, l: int) -> KElem:
    """The partial orbit sum of mu under alpha, with l terms."""
    K = mu.alg
    acc = tuple(K.field.zero for _ in range(K.dim))
    cur = mu.coords
    for _ in range(l):
        acc = tuple(a + b for a, b in zip(acc, cur))
        cur = alpha.apply(cur)
    return KElem(K, acc)


class SmallCochain:
    """A degree-tagged element of the small complex with coefficients in A."""

    __slots__ = ("alg", "degree", "value")

    def __init__(self, alg: MonogenicAlgebra, degree: int, value: AElem, check: bool = True):
        if degree < 0:
            raise ProductsError("negative cochain degree")
        self.alg = alg
        self.degree = degree
        self.value = value
        if check and not self._twisted_ok():
            raise ProductsError(
                f"value is not invariant for the degree-{degree} twist"
            )

    def _twisted_ok(self) -> bool:
        alg = self.alg
        t = twist_exponent(self.degree, alg.n)
        for b in range(alg.K.dim):
            e = alg.K.basis_elem(b).coords
            lhs = self.value * alg.k_embed(e)
            rhs = alg.k_embed(alg.alpha.apply_power(t, e)) * self.value
            if lhs != rhs:
                return False
        return True

    @classmethod
    def from_k(cls, alg: MonogenicAlgebra, degree: int, lam) -> "SmallCochain":
        if degree % 2:
            raise ProductsError("K-valued canonical cochains have even degree")
        return cls(alg, degree, alg.k_embed(alg.K.elem(lam)))

    @classmethod
    def from_kx(cls, alg: MonogenicAlgebra, degree: int, lam) -> "SmallCochain":
        if degree % 2 == 0:
            raise ProductsError("Kx-valued canonical cochains have odd degree")
        return cls(alg, degree, alg.monomial(alg.K.elem(lam), 1))

    def canonical_k(self) -> KElem | None:
        """The K part when this is an even cochain supported in x-degree 0."""
        if self.degree % 2:
            return None
        if any(a != 0 for a in self.value.x_degrees()):
            return None
        return self.value.k_coeff(0)

    def canonical_kx(self) -> KElem | None:
        """The K part when this is an odd cochain supported in x-degree 1."""
        if self.degree % 2 == 0:
            return None
        if any(a != 1 for a in self.value.x_degrees()):
            return None
        return self.value.k_coeff(1)

    def __add__(self, other):
        self._match(other)
        return SmallCochain(self.alg, self.degree, self.value + other.value, check=False)

    def __sub__(self, other):
        self._match(other)
        return SmallCochain(self.alg, self.degree, self.value - other.value, check=False)

    def __neg__(self):
        return SmallCochain(self.alg, self.degree, -self.value, check=False)

    def _match(self, other):
        if self.alg is not other.alg or self.degree != other.degree:
            raise ProductsError("cochain degree mismatch")

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, SmallCochain)
            and self.alg is other.alg
            and self.degree == other.degree
            and self.value == other.value
        )

    def __repr__(self):
        return f"SmallCochain(deg={self.degree}, {self.value!r})"


def all_bar_indices(alg: MonogenicAlgebra, p: int):
    return itertools.product(range(1, alg.n), repeat=p)


class BarCochain:
    """Normalized relative cochain: a table over index tuples in {1..n-1}^p."""

    __slots__ = ("alg", "degree", "table")

    def __init__(self, alg: MonogenicAlgebra, degree: int, table: dict, check: bool = False):
        if degree < 0:
            raise ProductsError("negative cochain degree")
        clean = {}
        for idx, val in table.items():
            idx = tuple(idx)
            if len(idx) != degree or any(not 1 <= i < alg.n for i in idx):
                raise ProductsError(f"bad index {idx} for degree {degree}")
            if not val.is_zero():
                clean[idx] = val
        self.alg = alg
        self.degree = degree
        self.table = clean
        if check:
            bad = self._twist_defect()
            if bad is not None:
                raise ProductsError(f"value at {bad} is not twisted-invariant")

    def _twist_defect(self):
        alg = self.alg
        for idx, val in self.table.items():
            t = sum(idx)
            for b in range(alg.K.dim):
                e = alg.K.basis_elem(b).coords
                if val * alg.k_embed(e) != alg.k_embed(alg.alpha.apply_power(t, e)) * val:
                    return idx
        return None

    @classmethod
    def zero(cls, alg: MonogenicAlgebra, degree: int) -> "BarCochain":
        return cls(alg, degree, {})

    @classmethod
    def constant(cls, alg: MonogenicAlgebra, value: AElem) -> "BarCochain":
        return cls(alg, 0, {(): value})

    def at(self, idx) -> AElem:
        return self.table.get(tuple(idx), self.alg.zero_elem())

    def __add__(self, other):
        self._match(other)
        table = dict(self.table)
        for idx, val in other.table.items():
            table[idx] = table.get(idx, self.alg.zero_elem()) + val
        return BarCochain(self.alg, self.degree, table)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return BarCochain(self.alg, self.degree, {i: -v for i, v in self.table.items()})

    def scale(self, s) -> "BarCochain":
        s = self.alg.field.scalar(s)
        return BarCochain(self.alg, self.degree, {i: v * s for i, v in self.table.items()})

    def _match(self, other):
        if self.alg is not other.alg or self.degree != other.degree:
            raise ProductsError("bar cochain degree mismatch")

    def is_zero(self) -> bool:
        return not self.table

    def __eq__(self, other):
        return (
            isinstance(other, BarCochain)
            and self.alg is other.alg
            and self.degree == other.degree
            and self.table == other.table
        )

    def __repr__(self):
        return f"BarCochain(deg={self.degree}, {len(self.table)} entries)"


def identity_one_cochain(alg: MonogenicAlgebra) -> BarCochain:
    """The 1-cochain sending each basis monomial to itself."""
    return BarCochain(alg, 1, {(i,): alg.xpow(i) for i in range(1, alg.n)})


def _pair_bar(alg: MonogenicAlgebra, idx: tuple) -> AElem:
    """Product of division quotients over consecutive index pairs."""
    out = alg.one
    for h in range(len(idx) // 2):
        out = out * alg.xpow_bar(idx[2 * h] + idx[2 * h + 1])
        if out.is_zero():
            break
    return out


def psi_eval(m: SmallCochain) -> BarCochain:
    """The small-to-bar comparison map in m's degree."""
    alg = m.alg
    r = m.degree
    table = {}
    for idx in all_bar_indices(alg, r):
        bar = _pair_bar(alg, idx if r % 2 == 0 else idx[:-1])
        if bar.is_zero():
            continue
        if r % 2 == 0:
            table[idx] = bar * m.value
        else:
            c = idx[-1]
            acc = alg.zero_elem()
            for l in range(c):
                acc = acc + bar * alg.xpow(l) * m.value * alg.xpow(c - l - 1)
            table[idx] = acc
    return BarCochain(alg, r, table)


def phi_eval(g: BarCochain) -> SmallCochain:
    """The bar-to-small comparison map in g's degree."""
    alg = g.alg
    r = g.degree
    if r == 0:
        return SmallCochain(alg, 0, g.at(()), check=False)
    if r == 1:
        return SmallCochain(alg, 1, g.at((1,)), check=False)
    m = r // 2
    K = alg.K
    acc = alg.zero_elem()
    for i in itertools.product(range(1, alg.n + 1), repeat=m):
        lam = K.unit
        for ij in i:
            lam = K.kmul(lam, f_lambda(alg, alg.n - ij))
            if all(c.is_zero() for c in lam):
                break
        if all(c.is_zero() for c in lam):
            continue
        lam_a = alg.k_embed(lam)
        for ell in itertools.product(*[range(1, ij) for ij in i]):
            key = []
            for j in range(m, 0, -1):
                key.extend((1, ell[j - 1]))
            if r % 2:
                key.append(1)
            gval = g.at(tuple(key))
            if gval.is_zero():
                continue
            e = sum(i) - sum(ell) - m
            acc = acc + lam_a * alg.xpow(e) * gval
    return SmallCochain(alg, r, acc, check=False)


def bar_differential(g: BarCochain) -> BarCochain:
    """The normalized Hochschild coboundary on index tables.

    Merged slot products are re-expanded in normal form; the K-component of a
    merge drops (its slot normalizes to the unit) and each x^e component's
    coefficient migrates out to the left, twisted by alpha across the indices
    it passes."""
    alg = g.alg
    p = g.degree
    sign = {0: alg.field.one, 1: -alg.field.one}
    table = {}
    for idx in all_bar_indices(alg, p + 1):
        acc = alg.xpow(idx[0]) * g.at(idx[1:])
        for j in range(1, p + 1):
            s = idx[j - 1] + idx[j]
            nf = alg.xpow_nf[s]
            tw = sum(idx[: j - 1])
            for e in range(1, alg.n):
                kappa = nf[e]
                if all(c.is_zero() for c in kappa):
                    continue
                sub = idx[: j - 1] + (e,) + idx[j + 1 :]
                gval = g.at(sub)
                if gval.is_zero():
                    continue
                moved = alg.alpha.apply_power(tw, kappa)
                acc = acc + (alg.k_embed(moved) * gval) * sign[j % 2]
        acc = acc + (g.at(idx[:p]) * alg.xpow(idx[p])) * sign[(p + 1) % 2]
        table[idx] = acc
    return BarCochain(alg, p + 1, table)


def cup_bar(g: BarCochain, h: BarCochain) -> BarCochain:
    """Index-splitting product on bar cochains."""
    if g.alg is not h.alg:
        raise ProductsError("mismatched algebras")
    alg = g.alg
    p = g.degree
    table = {}
    for idx in all_bar_indices(alg, p + h.degree):
        left = g.at(idx[:p])
        if left.is_zero():
            continue
        right = h.at(idx[p:])
        if right.is_zero():
            continue
        table[idx] = left * right
    return BarCochain(alg, p + h.degree, table)


def circle_j(g: BarCochain, h: BarCochain, j: int) -> BarCochain:
    """Composition of h into the j-th slot of g, normalized."""
    if g.alg is not h.alg:
        raise ProductsError("mismatched algebras")
    r, rp = g.degree, h.degree
    if not 1 <= j <= r:
        raise ProductsError(f"slot {j} out of range for degree {r}")
    alg = g.alg
    table = {}
    for idx in all_bar_indices(alg, r + rp - 1):
        pre = idx[: j - 1]
        inner = h.at(idx[j - 1 : j - 1 + rp])
        if inner.is_zero():
            continue
        post = idx[j - 1 + rp :]
        tw = sum(pre)
        acc = alg.zero_elem()
        for e in range(1, alg.n):
            kappa = inner.k_coeff(e)
            if kappa.is_zero():
                continue
            gval = g.at(pre + (e,) + post)
            if gval.is_zero():
                continue
            moved = alg.alpha.apply_power(tw, kappa.coords)
            acc = acc + alg.k_embed(moved) * gval
        if not acc.is_zero():
            table[idx] = acc
    return BarCochain(alg, r + rp - 1, table)


def _sign(alg: MonogenicAlgebra, parity: int):
    return alg.field.one if parity % 2 == 0 else -alg.field.one


def compose_bar(g: BarCochain, h: BarCochain) -> BarCochain:
    """The alternating sum of slot compositions of h into g."""
    r, rp = g.degree, h.degree
    out = BarCochain.zero(g.alg, max(r + rp - 1, 0))
    for j in range(1, r + 1):
        out = out + circle_j(g, h, j).scale(_sign(g.alg, (j + 1) * (rp + 1)))
    return out


def bracket_bar(g: BarCochain, h: BarCochain) -> BarCochain:
    """Graded commutator of the composition product."""
    r, rp = g.degree, h.degree
    return compose_bar(g, h) - compose_bar(h, g).scale(_sign(g.alg, (r + 1) * (rp + 1)))


def cup_small(a: SmallCochain, b: SmallCochain) -> SmallCochain:
    """Closed-form cup product on the small complex."""
    alg = a.alg
    if a.degree % 2 == 0 or b.degree % 2 == 0:
        value = a.value * b.value
    else:
        value = alg.zero_elem()
        for i in range(2, alg.n + 1):
            lam = f_lambda(alg, alg.n - i)
            if all(c.is_zero() for c in lam):
                continue
            lam_a = alg.k_embed(lam)
            for j1 in range(i - 1):
                for j2 in range(i - 1 - j1):
                    j3 = i - 2 - j1 - j2
                    value = value + lam_a * alg.xpow(j1) * a.value * alg.xpow(
                        j2
                    ) * b.value * alg.xpow(j3)
    return SmallCochain(alg, a.degree + b.degree, value, check=False)


def cup_small_oracle(a: SmallCochain, b: SmallCochain) -> SmallCochain:
    """Cup product computed through the bar complex."""
    return phi_eval(cup_bar(psi_eval(a), psi_eval(b)))


def compose_place_small(a: SmallCochain, b: SmallCochain, j: int) -> SmallCochain:
    """Slot composition transported to the small complex."""
    return phi_eval(circle_j(psi_eval(a), psi_eval(b), j))


def bracket_small_generic(a: SmallCochain, b: SmallCochain, bound: int = 5) -> SmallCochain:
    """Gerstenhaber bracket through the bar-complex oracle."""
    r, rp = a.degree, b.degree
    if max(r + rp - 1, 0) > bound:
        raise ProductsError(f"bracket degree {r + rp - 1} exceeds bound {bound}")
    alg = a.alg
    if r == 0 and rp == 0:
        return SmallCochain(alg, 0, alg.zero_elem(), check=False)
    return phi_eval(bracket_bar(psi_eval(a), psi_eval(b)))


def bracket_small_closed(a: SmallCochain, b: SmallCochain, witness) -> SmallCochain:
    """Closed-form bracket for canonical cochains, valid under a central
    regular witness (which forces the canonical forms to be exhaustive)."""
    if not witness:
        raise ProductsError("closed bracket needs an established witness hypothesis")
    alg = a.alg
    n = alg.n
    alpha = alg.alpha
    deg = max(a.degree + b.degree - 1, 0)

    def need(c: SmallCochain):
        lam = c.canonical_k() if c.degree % 2 == 0 else c.canonical_kx()
        if lam is None:
            raise ProductsError("input is not in canonical form")
        return lam

    la, lb = need(a), need(b)
    if a.degree % 2 == 0 and b.degree % 2 == 0:
        return SmallCochain(alg, deg, alg.zero_elem(), check=False)
    if a.degree % 2 == 0:
        m = a.degree // 2
        out = alg.K.kmul(delta_sum(alpha, lb, m * n).coords, la.coords)
        return SmallCochain(alg, deg, alg.k_embed(out), check=False)
    if b.degree % 2 == 0:
        m = b.degree // 2
        out = alg.K.kmul(delta_sum(alpha, la, m * n).coords, lb.coords)
        neg = tuple(-c for c in out)
        return SmallCochain(alg, deg, alg.k_embed(neg), check=False)
    m, mp = a.degree // 2, b.degree // 2
    first = alg.K.kmul(delta_sum(alpha, lb, m * n + 1).coords, la.coords)
    second = alg.K.kmul(delta_sum(alpha, la, mp * n + 1).coords, lb.coords)
    out = tuple(x - y for x, y in zip(first, second))
    return SmallCochain(alg, deg, alg.monomial(out, 1), check=False)


# -- resolution-level comparison maps ----------------------------------------


class ComparisonMaps:
    """Chain maps between the twisted-square resolution and the normalized
    relative bar resolution, with closed formulas cross-checked against the
    homotopy recursion."""

    def __init__(self, alg: MonogenicAlgebra, max_degree: int = 5):
        self.alg = alg
        self.max_degree = max_degree
        self.res = Resolution(alg, max_degree)
        self._psi_rec: dict[tuple, TensorElem] = {}
        self._phi_rec: dict[int, dict] = {}

    # psi: bar side to twisted squares, evaluated on monomial middle slots

    def psi_closed(self, idx: tuple) -> TensorElem:
        alg = self.alg
        r = len(idx)
        tw = twist_exponent(r, alg.n)
        bar = _pair_bar(alg, idx if r % 2 == 0 else idx[:-1])
        if r % 2 == 0:
            return TensorElem.from_aelem(bar, 0, tw)
        out = TensorElem.zero(alg, tw)
        if bar.is_zero():
            return out
        c = idx[-1]
        for l in range(c):
            out = out + TensorElem.from_aelem(bar * alg.xpow(l), c - l - 1, tw)
        return out

    def psi_recursive(self, idx: tuple) -> TensorElem:
        idx = tuple(idx)
        if not idx:
            return TensorElem.from_aelem(self.alg.one, 0, 0)
        if idx in self._psi_rec:
            return self._psi_rec[idx]
        alg = self.alg
        r = len(idx)
        total = self.psi_recursive(idx[1:]).leftmul(alg.xpow(idx[0]))
        for j in range(1, r):
            s = idx[j - 1] + idx[j]
            nf = alg.xpow_nf[s]
            tw = sum(idx[: j - 1])
            sgn = _sign(alg, j)
            for e in range(1, alg.n):
                kappa = nf[e]
                if all(c.is_zero() for c in kappa):
                    continue
                sub = idx[: j - 1] + (e,) + idx[j + 1 :]
                moved = alg.alpha.apply_power(tw, kappa)
                piece = self.psi_recursive(sub).leftmul(alg.k_embed(moved))
                total = total.add_scaled(piece, sgn)
        last = self.psi_recursive(idx[:-1]).rightmul_xpow(idx[-1])
        total = total.add_scaled(last, _sign(alg, r))
        out = self.res.apply_s(r, total)
        self._psi_rec[idx] = out
        return out

    # phi: twisted squares to bar side; the image of the generator is stored
    # as a map from middle index tuples to the left outer factor (the right
    # outer factor is always the unit)

    def phi_closed(self, r: int) -> dict:
        alg = self.alg
        if r == 0:
            return {(): alg.one}
        if r == 1:
            return {(1,): alg.one}
        m = r // 2
        K = alg.K
        out: dict[tuple, AElem] = {}
        for i in itertools.product(range(1, alg.n + 1), repeat=m):
            lam = K.unit
            for ij in i:
                lam = K.kmul(lam, f_lambda(alg, alg.n - ij))
                if all(c.is_zero() for c in lam):
                    break
            if all(c.is_zero() for c in lam):
                continue
            lead = alg.k_embed(lam)
            for ell in itertools.product(*[range(1, ij) for ij in i]):
                key = []
                for j in range(m, 0, -1):
                    key.extend((1, ell[j - 1]))
                if r % 2:
                    key.append(1)
                key = tuple(key)
                e = sum(i) - sum(ell) - m
                term = lead * alg.xpow(e)
                cur = out.get(key)
                out[key] = term if cur is None else cur + term
        return {k: v for k, v in out.items() if not v.is_zero()}

    def phi_recursive(self, r: int) -> dict:
        if r == 0:
            return {(): self.alg.one}
        if r in self._phi_rec:
            return self._phi_rec[r]
        alg = self.alg
        prev = self.phi_recursive(r - 1)
        dgen = self.res.d_generator(r)
        sgn = _sign(alg, r)
        out: dict[tuple, AElem] = {}
        dimk = alg.K.dim
        for flat, s in dgen.coords.items():
            b = flat % dimk
            a = (flat // dimk) % alg.n
            c = flat // (dimk * alg.n)
            lead = alg.monomial(alg.K.basis_elem(b), a) * s
            right = alg.xpow(c)
            for key, left in prev.items():
                base = lead * left
                if base.is_zero():
                    continue
                here = sum(key)
                for e in range(1, alg.n):
                    kappa = right.k_coeff(e)
                    if kappa.is_zero():
                        continue
                    moved = alg.alpha.apply_power(here, kappa.coords)
                    term = (base * alg.k_embed(moved)) * sgn
                    newkey = key + (e,)
                    cur = out.get(newkey)
                    out[newkey] = term if cur is None else cur + term
        out = {k: v for k, v in out.items() if not v.is_zero()}
        self._phi_rec[r] = out
        return out

    def comparison_report(self, degree_bound: int = 4) -> ValidationReport:
        """Closed formulas agree with the homotopy recursion through the bound."""
        failures = []
        for r in range(degree_bound + 1):
            for idx in all_bar_indices(self.alg, r):
                if self.psi_closed(idx) != self.psi_recursive(idx):
                    failures.append(f"psi mismatch at degree {r}, index {idx}")
                    return ValidationReport(False, tuple(failures))
            if self.phi_closed(r) != self.phi_recursive(r):
                failures.append(f"phi mismatch at degree {r}")
                return ValidationReport(False, tuple(failures))
        return ValidationReport(True, ())


# -- chain-map and class-level validation ------------------------------------


def _invariant_columns(C: SmallComplex, exponent: int):
    cache = getattr(C, "_bar_invariant_cache", None)
    if cache is None:
        cache = {}
        C._bar_invariant_cache = cache
    if exponent not in cache:
        cache[exponent] = twisted_invariants(C.M, exponent).columns_list()
    return cache[exponent]


def chain_map_report(C: SmallComplex, degree_bound: int = 3) -> ValidationReport:
    """Exact commutation of both comparison maps with the differentials.

    Requires a complex over the regular bimodule, built past the bound."""
    alg = C.alg
    if C.M.dim != alg.adim:
        raise ProductsError("chain-map checks need the regular bimodule")
    if degree_bound + 1 > C.max_degree:
        raise ProductsError("complex not built far enough for the bound")
    failures = []
    for r in range(degree_bound + 1):
        for v in C.bases[r].columns_list():
            m = SmallCochain(alg, r, AElem(alg, v), check=False)
            lhs = bar_differential(psi_eval(m))
            dm = SmallCochain(alg, r + 1, AElem(alg, C.d_ambient(r + 1, v)), check=False)
            if lhs != psi_eval(dm):
                failures.append(f"bar differential disagrees with psi in degree {r}")
                return ValidationReport(False, tuple(failures))
    for r in range(degree_bound + 1):
        for idx in all_bar_indices(alg, r):
            for w in _invariant_columns(C, sum(idx)):
                g = BarCochain(alg, r, {idx: AElem(alg, w)})
                lhs = AElem(alg, C.d_ambient(r + 1, phi_eval(g).value.coords))
                rhs = phi_eval(bar_differential(g)).value
                if lhs != rhs:
                    failures.append(
                        f"small differential disagrees with phi in degree {r}"
                    )
                    return ValidationReport(False, tuple(failures))
    return ValidationReport(True, ())


def phi_psi_class_identity(C: SmallComplex, r: int) -> bool:
    """phi after psi fixes every degree-r cohomology class."""
    alg = C.alg
    H = cohomology_group(C, r)
    for rep in H.reps_ambient:
        m = SmallCochain(alg, r, AElem(alg, rep), check=False)
        back = phi_eval(psi_eval(m))
        if not classes_equal(C, r, back.value.coords, rep):
            return False
    return True


def cup_class_table(C: SmallComplex, max_total: int) -> list[dict]:
    """Cup products of cohomology class representatives, as class coordinates."""
    alg = C.alg
    out = []
    for p in range(max_total + 1):
        for q in range(max_total + 1 - p):
            if p + q + 1 > C.max_degree:
                continue
            Hp, Hq = cohomology_group(C, p), cohomology_group(C, q)
            Hpq = cohomology_group(C, p + q)
            for ia, av in enumerate(Hp.reps_ambient):
                a = SmallCochain(alg, p, AElem(alg, av), check=False)
                for ib, bv in enumerate(Hq.reps_ambient):
                    b = SmallCochain(alg, q, AElem(alg, bv), check=False)
                    cls = Hpq.class_coords(cup_small(a, b).value.coords)
                    out.append(
                        {
                            "deg_a": p,
                            "deg_b": q,
                            "basis_index_a": ia,
                            "basis_index_b": ib,
                            "result_class_coords": [C.field.encode(c) for c in cls],
                        }
                    )
    return out


def bracket_class_table(C: SmallComplex, max_total: int, bound: int = 5) -> list[dict]:
    """Generic-oracle brackets of class representatives, as class coordinates."""
    alg = C.alg
    out = []
    for p in range(max_total + 1):
        for q in range(max_total + 1 - p):
            deg = p + q - 1
            if deg < 0 or deg > bound or deg + 1 > C.max_degree:
                continue
            Hp, Hq = cohomology_group(C, p), cohomology_group(C, q)
            Hd = cohomology_group(C, deg)
            for ia, av in enumerate(Hp.reps_ambient):
                a = SmallCochain(alg, p, AElem(alg, av), check=False)
                for ib, bv in enumerate(Hq.reps_ambient):
                    b = SmallCochain(alg, q, AElem(alg, bv), check=False)
                    val = bracket_small_generic(a, b, bound)
                    cls = Hd.class_coords(val.value.coords)
                    out.append(
                        {
                            "deg_a": p,
                            "deg_b": q,
                            "basis_index_a": ia,
                            "basis_index_b": ib,
                            "result_class_coords": [C.field.encode(c) for c in cls],
                        }
                    )
    return out
