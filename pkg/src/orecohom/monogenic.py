"""Skew polynomials over K, the quotient algebra A = K[x, alpha]/<f>, and the
two-periodic bimodule resolution of A with its contracting homotopy.

Conventions, fixed once here and relied on everywhere downstream:

* Ore polynomials carry left coefficients: P = sum c_d x^d with c_d in K and
  x lambda = alpha(lambda) x.
* f = x^n + lambda_1 x^{n-1} + ... + lambda_n is monic of degree n >= 2 and its
  coefficients must be alpha-fixed and satisfy lambda_i mu = alpha^i(mu) lambda_i;
  `validate_f` checks exactly that.
* A has k-basis {lambda_b x^a : b < dim K, 0 <= a < n}, flat index a*dimK + b.
* The twisted tensor square carries k-basis {lambda_b x^a (x) x^c} with all
  middle K-coefficients pushed into the left factor through the twist:
  u (x) mu x^c = u . alpha^{r+c}(mu) (x) x^c.  Flat index (c*n + a)*dimK + b.
"""

from __future__ import annotations

import functools
import itertools

from .fields import Field, Scalar
from .kalgebra import AlgebraK, Endo, KElem, ValidationReport
from .linalg import vadd, vscale


class MonogenicError(ValueError):
    pass


class OrePoly:
    """Skew polynomial with left K-coefficient vectors, constant term first."""

    __slots__ = ("K", "alpha", "coeffs")

    def __init__(self, K: AlgebraK, alpha: Endo, coeffs):
        coeffs = [tuple(K.field.scalar(c) for c in vec) for vec in coeffs]
        while coeffs and all(c.is_zero() for c in coeffs[-1]):
            coeffs.pop()
        self.K = K
        self.alpha = alpha
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @classmethod
    def monomial(cls, K: AlgebraK, alpha: Endo, coeff, d: int) -> "OrePoly":
        zero = tuple(K.field.zero for _ in range(K.dim))
        coeff = K.elem(coeff).coords if not isinstance(coeff, tuple) else coeff
        return cls(K, alpha, [zero] * d + [coeff])

    def __add__(self, other: "OrePoly") -> "OrePoly":
        zero = tuple(self.K.field.zero for _ in range(self.K.dim))
        n = max(len(self.coeffs), len(other.coeffs))
        out = [
            vadd(
                self.coeffs[i] if i < len(self.coeffs) else zero,
                other.coeffs[i] if i < len(other.coeffs) else zero,
            )
            for i in range(n)
        ]
        return OrePoly(self.K, self.alpha, out)

    def __neg__(self) -> "OrePoly":
        return OrePoly(self.K, self.alpha, [tuple(-c for c in v) for v in self.coeffs])

    def __sub__(self, other: "OrePoly") -> "OrePoly":
        return self + (-other)

    def __eq__(self, other):
        return (
            isinstance(other, OrePoly)
            and self.K is other.K
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.K), self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for d, v in enumerate(self.coeffs):
            if all(c.is_zero() for c in v):
                continue
            terms.append(f"({KElem(self.K, v)})*x^{d}")
        return " + ".join(terms)


def ore_mul(P: OrePoly, Q: OrePoly) -> OrePoly:
    """Product in K[x, alpha]: (c x^d)(e x^h) = c alpha^d(e) x^{d+h}."""
    K, alpha = P.K, P.alpha
    if P.is_zero() or Q.is_zero():
        return OrePoly(K, alpha, [])
    zero = tuple(K.field.zero for _ in range(K.dim))
    out = [zero] * (P.degree + Q.degree + 1)
    for d, c in enumerate(P.coeffs):
        if all(s.is_zero() for s in c):
            continue
        for h, e in enumerate(Q.coeffs):
            if all(s.is_zero() for s in e):
                continue
            out[d + h] = vadd(out[d + h], K.kmul(c, alpha.apply_power(d, e)))
    return OrePoly(K, alpha, out)


def ore_divmod(P: OrePoly, f: OrePoly) -> tuple[OrePoly, OrePoly]:
    """Unique (Pbar, Pddot) with P = Pbar * f + Pddot and deg Pddot < deg f.

    Requires f monic; monicity makes the division run without inverting
    coefficients, so K may be noncommutative."""
    K, alpha = P.K, P.alpha
    n = f.degree
    if n < 0 or f.coeffs[-1] != K.unit:
        raise MonogenicError("division requires a monic divisor")
    quot = OrePoly(K, alpha, [])
    rem = P
    while not rem.is_zero() and rem.degree >= n:
        d = rem.degree
        lead = OrePoly.monomial(K, alpha, rem.coeffs[-1], d - n)
        quot = quot + lead
        rem = rem - ore_mul(lead, f)
        if not rem.is_zero() and rem.degree >= d:
            raise MonogenicError("division failed to reduce the degree")
    return quot, rem


def validate_f(K: AlgebraK, alpha: Endo, f_coeffs: list) -> ValidationReport:
    """Check the admissibility of f = x^n + lambda_1 x^{n-1} + ... + lambda_n:
    each lambda_i is alpha-fixed and lambda_i mu = alpha^i(mu) lambda_i on a
    K-basis.  f_coeffs lists lambda_1 .. lambda_n (constant term last)."""
    failures = []
    n = len(f_coeffs)
    if n < 2:
        return ValidationReport(False, ("degree must be at least 2",))
    lam = [K.elem(c).coords for c in f_coeffs]
    for i, li in enumerate(lam, start=1):
        if alpha.apply(li) != li:
            failures.append(f"coefficient {i} is not alpha-fixed")
    for i, li in enumerate(lam, start=1):
        if all(c.is_zero() for c in li):
            continue
        for b in range(K.dim):
            mu = K.basis_elem(b).coords
            if K.kmul(li, mu) != K.kmul(alpha.apply_power(i, mu), li):
                failures.append(
                    f"coefficient {i} fails the commutation rule at basis {b}"
                )
                return ValidationReport(False, tuple(failures))
    return ValidationReport(not failures, tuple(failures))


class AElem:
    """Element of A in normal form: coordinates over {lambda_b x^a}."""

    __slots__ = ("alg", "coords")

    def __init__(self, alg: "MonogenicAlgebra", coords):
        coords = tuple(alg.field.scalar(c) for c in coords)
        if len(coords) != alg.adim:
            raise MonogenicError("coordinate length mismatch")
        self.alg = alg
        self.coords = coords

    def __add__(self, other):
        return AElem(self.alg, vadd(self.coords, other.coords))

    def __sub__(self, other):
        return AElem(self.alg, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AElem(self.alg, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AElem):
            return self.alg.a_mul(self, other)
        return AElem(self.alg, vscale(self.alg.field.scalar(other), self.coords))

    def __rmul__(self, other):
        return AElem(self.alg, vscale(self.alg.field.scalar(other), self.coords))

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def k_coeff(self, a: int) -> KElem:
        """The K-coefficient of x^a."""
        d = self.alg.K.dim
        return KElem(self.alg.K, self.coords[a * d : (a + 1) * d])

    def x_degrees(self):
        """Indices a with nonzero x^a coefficient."""
        return [a for a in range(self.alg.n) if not self.k_coeff(a).is_zero()]

    def __eq__(self, other):
        return isinstance(other, AElem) and self.alg is other.alg and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.alg), self.coords))

    def __repr__(self):
        terms = []
        for a in range(self.alg.n):
            k = self.k_coeff(a)
            if not k.is_zero():
                terms.append(f"({k})*x^{a}" if a else f"({k})")
        return " + ".join(terms) if terms else "0"


class MonogenicAlgebra:
    """A = K[x, alpha]/<f> with compiled normal-form multiplication."""

    def __init__(self, K: AlgebraK, alpha: Endo, f_coeffs: list, check: bool = True):
        self.K = K
        self.alpha = alpha
        self.field: Field = K.field
        lam = [K.elem(c).coords for c in f_coeffs]
        self.n = len(lam)
        self.f_coeffs = lam  # lambda_1 .. lambda_n
        if check:
            rep = validate_f(K, alpha, f_coeffs)
            if not rep.ok:
                raise MonogenicError("; ".join(rep.failures))
        self.adim = K.dim * self.n
        self._compile()
        if check:
            self._check_compiled()

    # -- basis bookkeeping ---------------------------------------------------

    def idx(self, b: int, a: int) -> int:
        return a * self.K.dim + b

    def basis_labels(self) -> list[str]:
        out = []
        for a in range(self.n):
            for b in range(self.K.dim):
                kb = self.K.basis_names[b]
                out.append(f"{kb}*x^{a}" if a else kb)
        return out

    @functools.cached_property
    def one(self) -> AElem:
        return self.k_embed(KElem(self.K, self.K.unit))

    def zero_elem(self) -> AElem:
        return AElem(self, (self.field.zero,) * self.adim)

    def k_embed(self, u) -> AElem:
        u = self.K.elem(u)
        coords = [self.field.zero] * self.adim
        for b, c in enumerate(u.coords):
            coords[self.idx(b, 0)] = c
        return AElem(self, coords)

    def monomial(self, u, a: int) -> AElem:
        """The element u x^a for u in K and 0 <= a < n."""
        u = self.K.elem(u)
        coords = [self.field.zero] * self.adim
        for b, c in enumerate(u.coords):
            coords[self.idx(b, a)] = c
        return AElem(self, coords)

    @functools.cached_property
    def x(self) -> AElem:
        return self.monomial(self.K.unit, 1)

    def f_ore(self) -> OrePoly:
        zero = tuple(self.field.zero for _ in range(self.K.dim))
        coeffs = [zero] * (self.n + 1)
        coeffs[self.n] = self.K.unit
        for i, li in enumerate(self.f_coeffs, start=1):
            coeffs[self.n - i] = li
        return OrePoly(self.K, self.alpha, coeffs)

    # -- compilation ---------------------------------------------------------

    def _compile(self) -> None:
        K, n = self.K, self.n
        # normal form of x^m for 0 <= m <= 2n: list over j < n of K-coordinate vectors
        zero = tuple(self.field.zero for _ in range(K.dim))
        nf: list[list[tuple]] = []
        for m in range(n):
            row = [zero] * n
            row[m] = K.unit
            nf.append(row)
        for m in range(n, 2 * n + 1):
            row = [zero] * n
            for i, li in enumerate(self.f_coeffs, start=1):
                if all(c.is_zero() for c in li):
                    continue
                c = self.alpha.apply_power(m - n, li)
                for j, prev in enumerate(nf[m - i]):
                    row[j] = vadd(row[j], tuple(-s for s in K.kmul(c, prev)))
            nf.append(row)
        self.xpow_nf = nf
        # sparse multiplication table on the flat basis
        table: dict[tuple[int, int], list[tuple[int, Scalar]]] = {}
        for b, a in itertools.product(range(K.dim), range(n)):
            eb = K.basis_elem(b).coords
            for b2, a2 in itertools.product(range(K.dim), range(n)):
                u = K.kmul(eb, self.alpha.apply_power(a, K.basis_elem(b2).coords))
                if all(c.is_zero() for c in u):
                    continue
                terms: list[tuple[int, Scalar]] = []
                for j, cj in enumerate(self.xpow_nf[a + a2]):
                    w = K.kmul(u, cj)
                    for b3, s in enumerate(w):
                        if not s.is_zero():
                            terms.append((self.idx(b3, j), s))
                if terms:
                    table[(self.idx(b, a), self.idx(b2, a2))] = terms
        self.mul_table = table

    def _check_compiled(self) -> None:
        # x lambda = alpha(lambda) x for all basis lambda, on the compiled table
        for b in range(self.K.dim):
            lam = self.k_embed(self.K.basis_elem(b))
            lhs = self.a_mul(self.x, lam)
            rhs = self.a_mul(self.k_embed(KElem(self.K, self.alpha.apply(self.K.basis_elem(b).coords))), self.x)
            if lhs != rhs:
                raise MonogenicError(f"compiled table breaks the commutation rule at basis {b}")
        # f is normal in B: f x = x f and f lambda = alpha^n(lambda) f
        f = self.f_ore()
        xp = OrePoly.monomial(self.K, self.alpha, self.K.unit, 1)
        if ore_mul(f, xp) != ore_mul(xp, f):
            raise MonogenicError("f does not commute with x")
        for b in range(self.K.dim):
            lam = OrePoly.monomial(self.K, self.alpha, self.K.basis_elem(b).coords, 0)
            tw = OrePoly.monomial(
                self.K, self.alpha, self.alpha.apply_power(self.n, self.K.basis_elem(b).coords), 0
            )
            if ore_mul(f, lam) != ore_mul(tw, f):
                raise MonogenicError(f"f lambda = alpha^n(lambda) f fails at basis {b}")

    # -- arithmetic ----------------------------------------------------------

    def a_mul(self, a: AElem, b: AElem) -> AElem:
        out = [self.field.zero] * self.adim
        for i, ca in enumerate(a.coords):
            if ca.is_zero():
                continue
            for j, cb in enumerate(b.coords):
                if cb.is_zero():
                    continue
                cab = ca * cb
                for k, s in self.mul_table.get((i, j), ()):
                    out[k] = out[k] + cab * s
        return AElem(self, out)

    def from_ore(self, P: OrePoly) -> AElem:
        """Image of an Ore polynomial in A (reduces by f first)."""
        _, rem = ore_divmod(P, self.f_ore())
        out = [self.field.zero] * self.adim
        for d, vec in enumerate(rem.coeffs):
            for b, c in enumerate(vec):
                out[self.idx(b, d)] = out[self.idx(b, d)] + c
        return AElem(self, out)

    def to_ore(self, a: AElem) -> OrePoly:
        zero = tuple(self.field.zero for _ in range(self.K.dim))
        coeffs = [list(zero) for _ in range(self.n)]
        for b, d in itertools.product(range(self.K.dim), range(self.n)):
            coeffs[d][b] = a.coords[self.idx(b, d)]
        return OrePoly(self.K, self.alpha, [tuple(v) for v in coeffs])

    def xpow(self, m: int) -> AElem:
        """Normal form of x^m in A, any m >= 0."""
        out = [self.field.zero] * self.adim
        if m <= 2 * self.n:
            for j, cj in enumerate(self.xpow_nf[m]):
                for b, c in enumerate(cj):
                    out[self.idx(b, j)] = c
            return AElem(self, out)
        half = self.xpow(m // 2)
        rest = self.xpow(m - m // 2)
        return self.a_mul(half, rest)

    def xpow_bar(self, e: int) -> AElem:
        """Image in A of the division quotient of x^e by f (zero for e < n)."""
        P = OrePoly.monomial(self.K, self.alpha, self.K.unit, e)
        q, _ = ore_divmod(P, self.f_ore())
        if q.degree >= self.n:
            return self.from_ore(q)
        out = [self.field.zero] * self.adim
        for d, vec in enumerate(q.coeffs):
            for b, c in enumerate(vec):
                out[self.idx(b, d)] = c
        return AElem(self, out)

    def alpha_elem(self, a: AElem, r: int = 1) -> AElem:
        """Apply alpha^r coefficientwise: lambda x^d -> alpha^r(lambda) x^d."""
        out = [self.field.zero] * self.adim
        for d in range(self.n):
            k = a.k_coeff(d)
            img = self.alpha.apply_power(r, k.coords)
            for b, c in enumerate(img):
                out[self.idx(b, d)] = c
        return AElem(self, out)


# ---------------------------------------------------------------------------
# twisted tensor square and the resolution
# ---------------------------------------------------------------------------


class TensorElem:
    """Element of the twisted tensor square on basis {lambda_b x^a (x) x^c},
    held sparsely as flat index -> nonzero Scalar."""

    __slots__ = ("alg", "twist", "coords")

    def __init__(self, alg: MonogenicAlgebra, twist: int, coords: dict):
        self.alg = alg
        self.twist = twist
        self.coords = {i: s for i, s in coords.items() if not s.is_zero()}

    @classmethod
    def zero(cls, alg: MonogenicAlgebra, twist: int) -> "TensorElem":
        return cls(alg, twist, {})

    @classmethod
    def from_aelem(cls, left: AElem, c: int, twist: int) -> "TensorElem":
        alg = left.alg
        base = c * alg.adim
        return cls(
            alg, twist, {base + i: s for i, s in enumerate(left.coords) if not s.is_zero()}
        )

    def dense(self) -> tuple:
        out = [self.alg.field.zero] * (self.alg.adim * self.alg.n)
        for i, s in self.coords.items():
            out[i] = s
        return tuple(out)

    def left_factor(self, c: int) -> AElem:
        base = c * self.alg.adim
        out = [self.alg.field.zero] * self.alg.adim
        for i, s in self.coords.items():
            if base <= i < base + self.alg.adim:
                out[i - base] = s
        return AElem(self.alg, out)

    def __add__(self, other: "TensorElem") -> "TensorElem":
        if self.twist != other.twist:
            raise MonogenicError("twist mismatch in tensor sum")
        out = dict(self.coords)
        for i, s in other.coords.items():
            cur = out.get(i)
            out[i] = s if cur is None else cur + s
        return TensorElem(self.alg, self.twist, out)

    def __sub__(self, other: "TensorElem") -> "TensorElem":
        if self.twist != other.twist:
            raise MonogenicError("twist mismatch in tensor sum")
        out = dict(self.coords)
        for i, s in other.coords.items():
            cur = out.get(i)
            out[i] = -s if cur is None else cur - s
        return TensorElem(self.alg, self.twist, out)

    def __neg__(self) -> "TensorElem":
        return TensorElem(self.alg, self.twist, {i: -s for i, s in self.coords.items()})

    def scale(self, s: Scalar) -> "TensorElem":
        if s.is_zero():
            return TensorElem.zero(self.alg, self.twist)
        return TensorElem(self.alg, self.twist, {i: s * v for i, v in self.coords.items()})

    def add_scaled(self, other: "TensorElem", s: Scalar) -> "TensorElem":
        if s.is_zero():
            return self
        out = dict(self.coords)
        for i, v in other.coords.items():
            cur = out.get(i)
            sv = s * v
            out[i] = sv if cur is None else cur + sv
        return TensorElem(self.alg, self.twist, out)

    def is_zero(self) -> bool:
        return not self.coords

    def __eq__(self, other):
        return (
            isinstance(other, TensorElem)
            and self.alg is other.alg
            and self.twist == other.twist
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((id(self.alg), self.twist, frozenset(self.coords)))

    def _split(self, flat: int) -> tuple[int, int, int]:
        dimk = self.alg.K.dim
        return flat % dimk, (flat // dimk) % self.alg.n, flat // (dimk * self.alg.n)

    def leftmul(self, a: AElem) -> "TensorElem":
        alg = self.alg
        out: dict[int, Scalar] = {}
        prods: dict[int, AElem] = {}
        for flat, s in self.coords.items():
            base = (flat // alg.adim) * alg.adim
            pos = flat - base
            prod = prods.get(pos)
            if prod is None:
                unit = [alg.field.zero] * alg.adim
                unit[pos] = alg.field.one
                prod = alg.a_mul(a, AElem(alg, unit))
                prods[pos] = prod
            for i, v in enumerate(prod.coords):
                if v.is_zero():
                    continue
                key = base + i
                sv = s * v
                cur = out.get(key)
                out[key] = sv if cur is None else cur + sv
        return TensorElem(alg, self.twist, out)

    def rightmul_k(self, mu) -> "TensorElem":
        """Right action of mu in K: migrates through the twist alpha^{r+c}."""
        alg = self.alg
        mu = alg.K.elem(mu)
        out = TensorElem.zero(alg, self.twist)
        for flat, s in self.coords.items():
            b, a, c = self._split(flat)
            mig = alg.k_embed(
                KElem(alg.K, alg.alpha.apply_power(self.twist + c, mu.coords))
            )
            prod = alg.a_mul(alg.monomial(alg.K.basis_elem(b), a), mig)
            out = out.add_scaled(TensorElem.from_aelem(prod, c, self.twist), s)
        return out

    def rightmul_x(self) -> "TensorElem":
        alg = self.alg
        n = alg.n
        out = TensorElem.zero(alg, self.twist)
        shifted: dict[int, Scalar] = {}
        for flat, s in self.coords.items():
            b, a, c = self._split(flat)
            if c + 1 < n:
                shifted[flat + alg.adim] = s
            else:
                left = alg.monomial(alg.K.basis_elem(b), a)
                for j, cj in enumerate(alg.xpow_nf[n]):
                    if all(v.is_zero() for v in cj):
                        continue
                    mig = alg.k_embed(
                        KElem(alg.K, alg.alpha.apply_power(self.twist, cj))
                    )
                    out = out.add_scaled(
                        TensorElem.from_aelem(alg.a_mul(left, mig), j, self.twist), s
                    )
        return out + TensorElem(alg, self.twist, shifted)

    def rightmul_xpow(self, d: int) -> "TensorElem":
        out = self
        for _ in range(d):
            out = out.rightmul_x()
        return out

    def rightmul_a(self, a: AElem) -> "TensorElem":
        alg = self.alg
        out = TensorElem.zero(alg, self.twist)
        for d in range(alg.n):
            mu = a.k_coeff(d)
            if mu.is_zero():
                continue
            out = out + self.rightmul_k(mu).rightmul_xpow(d)
        return out

    def __repr__(self):
        terms = []
        for c in range(self.alg.n):
            lf = self.left_factor(c)
            if not lf.is_zero():
                terms.append(f"({lf}) (x) x^{c}")
        return " + ".join(terms) if terms else "0"


def derivation_tensor(alg: MonogenicAlgebra, i: int) -> TensorElem:
    """The divided-difference tensor of x^i: sum_l x^l (x) x^{i-l-1}, twist 1.

    Defined for any i >= 0; exponents at or above n are reduced to normal form."""
    out = TensorElem.zero(alg, 1)
    for l in range(i):
        term = TensorElem.from_aelem(alg.xpow(l), 0, 1).rightmul_xpow(i - l - 1)
        out = out + term
    return out


def derivation_of_ore(alg: MonogenicAlgebra, P: OrePoly) -> TensorElem:
    """Image under the K-derivation sending x to 1 (x) 1 (coefficients pass left)."""
    out = TensorElem.zero(alg, 1)
    for d, vec in enumerate(P.coeffs):
        if all(c.is_zero() for c in vec):
            continue
        out = out + derivation_tensor(alg, d).leftmul(alg.k_embed(KElem(alg.K, vec)))
    return out


def normality_check(alg: MonogenicAlgebra) -> ValidationReport:
    """On the twist-1 tensor square: the derivation of f x^i equals both
    x^i . (derivation of f) and (derivation of f) . x^i, for 0 <= i < n."""
    failures = []
    f = alg.f_ore()
    df = derivation_of_ore(alg, f)
    for i in range(alg.n):
        xi = OrePoly.monomial(alg.K, alg.alpha, alg.K.unit, i)
        lhs = derivation_of_ore(alg, ore_mul(f, xi))
        mid = df.leftmul(alg.xpow(i))
        rhs = df.rightmul_xpow(i)
        if lhs != mid:
            failures.append(f"derivation of f x^{i} differs from x^{i} action")
        if lhs != rhs:
            failures.append(f"derivation of f x^{i} differs from right x^{i} action")
        if failures:
            break
    return ValidationReport(not failures, tuple(failures))


def twist_exponent(r: int, n: int) -> int:
    """Twist of the degree-r term of the resolution/complex: mn for r = 2m,
    mn + 1 for r = 2m + 1."""
    return (r // 2) * n + (r % 2)


class Resolution:
    """The two-periodic resolution of A by twisted tensor squares, through a
    fixed top degree, with maps stored columnwise on the flat tensor basis."""

    def __init__(self, alg: MonogenicAlgebra, max_degree: int):
        self.alg = alg
        self.max_degree = max_degree
        self.tdim = alg.adim * alg.n
        self._d_cols: dict[int, list[TensorElem]] = {}
        self._s_cols: dict[int, list[TensorElem]] = {}

    def twist(self, r: int) -> int:
        return twist_exponent(r, self.alg.n)

    def basis_tensor(self, r: int, flat: int) -> TensorElem:
        return TensorElem(self.alg, self.twist(r), {flat: self.alg.field.one})

    @functools.cache
    def d_generator(self, r: int) -> TensorElem:
        """Image of the generator 1 (x) 1 under d'_r, in the degree r-1 module."""
        alg = self.alg
        tw = self.twist(r - 1)
        if r % 2 == 1:
            x1 = TensorElem.from_aelem(alg.x, 0, tw)
            onex = TensorElem.from_aelem(alg.one, 0, tw).rightmul_x()
            return x1 - onex
        out = TensorElem.zero(alg, tw)
        lam = {i: KElem(alg.K, v) for i, v in enumerate(alg.f_coeffs, start=1)}
        lam[0] = KElem(alg.K, alg.K.unit)
        for i in range(1, alg.n + 1):
            coeff = lam[alg.n - i]
            if coeff.is_zero():
                continue
            left = alg.k_embed(coeff)
            for l in range(i):
                term = TensorElem.from_aelem(
                    alg.a_mul(left, alg.xpow(l)), i - l - 1, tw
                )
                out = out + term
        return out

    def d_column(self, r: int, flat: int) -> TensorElem:
        """d'_r applied to the flat basis vector of the degree-r module."""
        if r not in self._d_cols:
            self._d_cols[r] = [None] * self.tdim  # type: ignore[list-item]
        cache = self._d_cols[r]
        if cache[flat] is None:
            dimk = self.alg.K.dim
            b = flat % dimk
            a = (flat // dimk) % self.alg.n
            c = flat // (dimk * self.alg.n)
            img = self.d_generator(r).leftmul(
                self.alg.monomial(self.alg.K.basis_elem(b), a)
            )
            cache[flat] = img.rightmul_xpow(c)
        return cache[flat]

    def apply_d(self, r: int, t: TensorElem) -> TensorElem:
        out = TensorElem.zero(self.alg, self.twist(r - 1))
        for flat, s in t.coords.items():
            out = out.add_scaled(self.d_column(r, flat), s)
        return out

    def s_column(self, r: int, flat: int) -> TensorElem:
        """sigma_r applied to the flat basis vector of the degree r-1 module."""
        if r not in self._s_cols:
            self._s_cols[r] = [None] * self.tdim  # type: ignore[list-item]
        cache = self._s_cols[r]
        if cache[flat] is None:
            alg = self.alg
            dimk = alg.K.dim
            b = flat % dimk
            a = (flat // dimk) % alg.n
            c = flat // (dimk * alg.n)
            left = alg.monomial(alg.K.basis_elem(b), a)
            tw = self.twist(r)
            if r % 2 == 1:
                out = TensorElem.zero(alg, tw)
                for l in range(c):
                    out = out + TensorElem.from_aelem(
                        alg.a_mul(left, alg.xpow(l)), c - l - 1, tw
                    )
                cache[flat] = -out
            else:
                if c == alg.n - 1:
                    cache[flat] = TensorElem.from_aelem(left, 0, tw)
                else:
                    cache[flat] = TensorElem.zero(alg, tw)
        return cache[flat]

    def apply_s(self, r: int, t: TensorElem) -> TensorElem:
        out = TensorElem.zero(self.alg, self.twist(r))
        for flat, s in t.coords.items():
            out = out.add_scaled(self.s_column(r, flat), s)
        return out

    def augmentation(self, t: TensorElem) -> AElem:
        """The multiplication map from degree 0 to A."""
        alg = self.alg
        out = alg.zero_elem()
        for c in range(alg.n):
            lf = t.left_factor(c)
            if not lf.is_zero():
                out = out + alg.a_mul(lf, alg.xpow(c))
        return out

    def sigma0(self, a: AElem) -> TensorElem:
        return TensorElem.from_aelem(a, 0, 0)

    def contraction_check(self) -> ValidationReport:
        """Exact verification that sigma contracts the complex onto A:
        augmentation . sigma0 = id, d'_1 sigma_1 + sigma_0 . augmentation = id,
        d'_{r+1} sigma_{r+1} + sigma_r d'_r = id, and d' . d' = 0."""
        alg = self.alg
        failures = []
        for flat in range(alg.adim):
            coords = [alg.field.zero] * alg.adim
            coords[flat] = alg.field.one
            a = AElem(alg, coords)
            if self.augmentation(self.sigma0(a)) != a:
                failures.append(f"augmentation section fails at basis {flat}")
                return ValidationReport(False, tuple(failures))
        for flat in range(self.tdim):
            t = self.basis_tensor(0, flat)
            lhs = self.apply_d(1, self.apply_s(1, t)) + self.sigma0(self.augmentation(t))
            if lhs != t:
                failures.append(f"degree-0 homotopy identity fails at basis {flat}")
                return ValidationReport(False, tuple(failures))
        for r in range(1, self.max_degree + 1):
            for flat in range(self.tdim):
                t = self.basis_tensor(r, flat)
                lhs = self.apply_d(r + 1, self.apply_s(r + 1, t)) + self.apply_s(
                    r, self.apply_d(r, t)
                )
                if lhs != t:
                    failures.append(
                        f"homotopy identity fails in degree {r} at basis {flat}"
                    )
                    return ValidationReport(False, tuple(failures))
        for r in range(2, self.max_degree + 2):
            for flat in range(self.tdim):
                if not self.apply_d(r - 1, self.d_column(r, flat)).is_zero():
                    failures.append(f"d.d is nonzero in degree {r} at basis {flat}")
                    return ValidationReport(False, tuple(failures))
        return ValidationReport(True, ())
