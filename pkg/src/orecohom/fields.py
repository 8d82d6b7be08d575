r"""Exact field arithmetic over the rationals, prime fields, and simple extensions.

Every scalar is a :class:`Scalar` holding a reference to its field context and a
normalized payload:

* rationals -- a ``fractions.Fraction`` in lowest terms,
* ``GF(p)`` -- an ``int`` in ``[0, p)``,
* a simple extension ``base[t]/<minpoly>`` -- a tuple of base payloads of
  length ``deg(minpoly)``, listed constant-first.

Field contexts are cached, so two requests for the same field return the
identical object and scalars can be compared by payload.  Towers are rejected:
an extension base must be the rationals or a prime field, which keeps equality
a coordinate comparison.
"""

from __future__ import annotations

import functools
import logging
from fractions import Fraction

logger = logging.getLogger(__name__)


class FieldError(ValueError):
    """Raised for invalid field constructions or cross-field operations."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Scalar:
    """An element of an exact field: a field context plus a normalized payload."""

    __slots__ = ("field", "v")

    def __init__(self, field: "Field", v):
        self.field = field
        self.v = v

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise FieldError(
                    f"cannot mix scalars of {self.field} and {other.field}"
                )
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Fraction):
            return self.field.scalar(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field._add(self.v, o.v))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field._add(self.v, self.field._neg(o.v)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field._add(o.v, self.field._neg(self.v)))

    def __neg__(self):
        return Scalar(self.field, self.field._neg(self.v))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field._mul(self.v, o.v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self.inv() if e < 0 else self
        out = self.field.one
        for _ in range(abs(e)):
            out = out * base
        return out

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError(f"division by zero in {self.field}")
        return Scalar(self.field, self.field._inv(self.v))

    def is_zero(self) -> bool:
        return self.field._is_zero(self.v)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.v == o.v

    def __hash__(self):
        return hash((id(self.field), self.v))

    def __repr__(self):
        return self.field._repr(self.v)


class Field:
    """Base class for field contexts.  Subclasses implement payload arithmetic."""

    char: int
    deg: int  # extension degree over the prime subfield (1 for QQ / GF(p))

    @functools.cached_property
    def zero(self) -> Scalar:
        return self.from_int(0)

    @functools.cached_property
    def one(self) -> Scalar:
        return self.from_int(1)

    def from_int(self, n: int) -> Scalar:
        return Scalar(self, self._from_int(n))

    def scalar(self, x) -> Scalar:
        """Coerce an int, Fraction, Scalar, or raw payload into this field."""
        if isinstance(x, Scalar):
            if x.field is not self:
                raise FieldError(f"cannot coerce scalar of {x.field} into {self}")
            return x
        if isinstance(x, bool):
            raise FieldError("booleans are not field elements")
        if isinstance(x, int):
            return self.from_int(x)
        return Scalar(self, self._coerce_payload(x))

    def describe(self) -> dict:
        raise NotImplementedError

    def encode(self, s: Scalar):
        """JSON encoding of one scalar."""
        raise NotImplementedError

    def decode(self, obj) -> Scalar:
        """Inverse of :meth:`encode`; also accepts plain ints."""
        raise NotImplementedError

    def random_element(self, rng, bound: int = 9) -> Scalar:
        raise NotImplementedError

    # payload-level hooks
    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        raise NotImplementedError

    def _from_int(self, n: int):
        raise NotImplementedError

    def _coerce_payload(self, x):
        raise NotImplementedError

    def _repr(self, a) -> str:
        raise NotImplementedError


class RationalField(Field):
    char = 0
    deg = 1

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def _from_int(self, n):
        return Fraction(n)

    def _coerce_payload(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, str):
            return Fraction(x)
        raise FieldError(f"cannot interpret {x!r} as a rational")

    def _repr(self, a):
        return str(a)

    def describe(self):
        return {"kind": "Q"}

    def encode(self, s):
        f = self.scalar(s).v
        return f"{f.numerator}/{f.denominator}"

    def decode(self, obj):
        if isinstance(obj, int):
            return self.from_int(obj)
        if isinstance(obj, str):
            return Scalar(self, Fraction(obj))
        raise FieldError(f"bad rational encoding: {obj!r}")

    def random_element(self, rng, bound: int = 9):
        num = rng.randint(-bound, bound)
        den = rng.randint(1, bound)
        return Scalar(self, Fraction(num, den))

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField(Field):
    deg = 1

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.char = p

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _inv(self, a):
        return pow(a, self.p - 2, self.p)

    def _is_zero(self, a):
        return a == 0

    def _from_int(self, n):
        return n % self.p

    def _coerce_payload(self, x):
        raise FieldError(f"cannot interpret {x!r} as an element of GF({self.p})")

    def _repr(self, a):
        return str(a)

    def describe(self):
        return {"kind": "Fp", "p": self.p}

    def encode(self, s):
        return self.scalar(s).v

    def decode(self, obj):
        if isinstance(obj, int):
            return self.from_int(obj)
        raise FieldError(f"bad GF({self.p}) encoding: {obj!r}")

    def random_element(self, rng, bound: int = 9):
        return self.from_int(rng.randrange(self.p))

    def elements(self):
        return (self.from_int(i) for i in range(self.p))

    def __repr__(self):
        return f"GF({self.p})"


@functools.cache
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


# ---------------------------------------------------------------------------
# polynomial helpers over a base field (coefficient lists, constant-first)
# ---------------------------------------------------------------------------


def poly_trim(c: list) -> list:
    while c and c[-1].is_zero():
        c = c[:-1]
    return c


def poly_add(a: list, b: list, field: Field) -> list:
    n = max(len(a), len(b))
    z = field.zero
    out = [(a[i] if i < len(a) else z) + (b[i] if i < len(b) else z) for i in range(n)]
    return poly_trim(out)


def poly_scale(a: list, s: Scalar) -> list:
    return poly_trim([c * s for c in a])


def poly_mul(a: list, b: list, field: Field) -> list:
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return poly_trim(out)


def poly_divmod(a: list, b: list, field: Field) -> tuple[list, list]:
    b = poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [field.zero] * max(0, len(a) - len(b) + 1)
    lead = b[-1].inv()
    while len(poly_trim(r)) >= len(b):
        r = poly_trim(r)
        shift = len(r) - len(b)
        c = r[-1] * lead
        q[shift] = c
        for i, bi in enumerate(b):
            r[shift + i] = r[shift + i] - c * bi
    return poly_trim(q), poly_trim(r)


def poly_gcd(a: list, b: list, field: Field) -> list:
    a, b = poly_trim(list(a)), poly_trim(list(b))
    while b:
        _, r = poly_divmod(a, b, field)
        a, b = b, r
    if a:
        a = poly_scale(a, a[-1].inv())
    return a


def poly_xgcd(a: list, b: list, field: Field) -> tuple[list, list, list]:
    """g, u, v with u*a + v*b = g and g monic (or empty when a = b = 0)."""
    r0, r1 = poly_trim(list(a)), poly_trim(list(b))
    s0, s1 = [field.one], []
    t0, t1 = [], [field.one]
    while r1:
        q, r = poly_divmod(r0, r1, field)
        r0, r1 = r1, r
        s0, s1 = s1, poly_add(s0, poly_scale(poly_mul(q, s1, field), -field.one), field)
        t0, t1 = t1, poly_add(t0, poly_scale(poly_mul(q, t1, field), -field.one), field)
    if r0:
        c = r0[-1].inv()
        r0, s0, t0 = poly_scale(r0, c), poly_scale(s0, c), poly_scale(t0, c)
    return r0, s0, t0


def poly_derivative(a: list, field: Field) -> list:
    return poly_trim([a[i] * i for i in range(1, len(a))])


def poly_eval(a: list, x: Scalar, field: Field) -> Scalar:
    out = field.zero
    for c in reversed(a):
        out = out * x + c
    return out


def _int_divisors(m: int) -> list[int]:
    m = abs(m)
    out = set()
    d = 1
    while d * d <= m:
        if m % d == 0:
            out.add(d)
            out.add(m // d)
        d += 1
    return sorted(out)


def polynomial_roots(a: list, field: Field) -> tuple[list[Scalar], bool]:
    """Roots of a nonzero polynomial in ``field``, with a completeness flag.

    Returns ``(roots, complete)``: ``complete`` is True when the roots listed,
    counted with multiplicity via linear-factor division, exhaust the degree.
    Search is exhaustive over finite fields and the rational-root test over ℚ;
    over an infinite extension only 0, ±1, and the power-basis generator are
    probed, so ``complete`` may be False there.
    """
    a = poly_trim(list(a))
    if not a:
        raise FieldError("zero polynomial has every root")
    roots: list[Scalar] = []
    rem = a

    def try_root(x: Scalar) -> None:
        nonlocal rem
        while len(rem) > 1 and poly_eval(rem, x, field).is_zero():
            q, r = poly_divmod(rem, [-x, field.one], field)
            assert not r
            roots.append(x)
            rem = q

    if isinstance(field, (PrimeField, ExtensionField)) and field.char > 0:
        for x in field.elements():
            try_root(x)
            if len(rem) == 1:
                break
    elif isinstance(field, RationalField):
        try_root(field.zero)
        if len(rem) > 1:
            from math import lcm

            den = lcm(*[c.v.denominator for c in rem])
            ints = [int(c.v * den) for c in rem]
            for p in _int_divisors(ints[0]):
                for q in _int_divisors(ints[-1]):
                    try_root(field.scalar(Fraction(p, q)))
                    try_root(field.scalar(Fraction(-p, q)))
    else:
        probes = [field.zero, field.one, -field.one]
        if isinstance(field, ExtensionField):
            probes.append(field.gen)
        for x in probes:
            try_root(x)
    return roots, len(rem) == 1


def _certify_irreducible(minpoly: list, base: Field) -> bool | None:
    """True/False when decidable here (deg ≤ 4 over ℚ, any degree over GF(p)),
    None when the check is out of scope."""
    d = len(minpoly) - 1
    if isinstance(base, PrimeField):
        # f irreducible over GF(p) iff f | t^{p^d} - t and
        # gcd(f, t^{p^{d/q}} - t) = 1 for every prime q | d
        p = base.p
        tp = poly_divmod([base.zero] * p + [base.one], minpoly, base)[1]

        def frob_iterate(e: int) -> list:
            # t^{p^e} mod f via cur(t) -> cur(t^p), Frobenius fixing GF(p)
            cur = [base.zero, base.one]
            for _ in range(e):
                out: list = []
                power = [base.one]
                for c in cur:
                    out = poly_add(out, poly_scale(power, c), base)
                    power = poly_divmod(poly_mul(power, tp, base), minpoly, base)[1]
                cur = poly_divmod(out, minpoly, base)[1]
            return cur

        full = poly_add(frob_iterate(d), [base.zero, -base.one], base)
        if poly_trim(full):
            return False
        dd = d
        primes = set()
        q = 2
        while q * q <= dd:
            if dd % q == 0:
                primes.add(q)
                while dd % q == 0:
                    dd //= q
            q += 1
        if dd > 1:
            primes.add(dd)
        for q in primes:
            part = poly_add(frob_iterate(d // q), [base.zero, -base.one], base)
            if len(poly_gcd(part, minpoly, base)) > 1:
                return False
        return True
    if isinstance(base, RationalField):
        if d == 1:
            return True
        roots, _ = polynomial_roots(minpoly, base)
        if roots:
            return False
        if d in (2, 3):
            return True
        if d == 4:
            # no rational root, so reducible iff a product of two rational
            # quadratics; depress t = y + sh to y^4 + Ay^2 + By + C first
            m = poly_scale(minpoly, minpoly[-1].inv())
            sh = -m[3] / 4
            comp: list = []
            power = [base.one]
            for c in m:
                comp = poly_add(comp, poly_scale(power, c), base)
                power = poly_mul(power, [sh, base.one], base)
            comp = comp + [base.zero] * (5 - len(comp))
            A, B, C = comp[2], comp[1], comp[0]
            if B.is_zero():
                # (y^2+u)(y^2+v): u+v = A, uv = C
                if _rational_sqrt(A * A - 4 * C) is not None:
                    return False
                # (y^2+sy+u)(y^2-sy+u): u^2 = C, s^2 = 2u - A, s != 0
                sc = _rational_sqrt(C)
                if sc is not None:
                    for u in (sc, -sc):
                        s2 = 2 * u - A
                        if not s2.is_zero() and _rational_sqrt(s2) is not None:
                            return False
                return True
            # B != 0: splitting (y^2+sy+u)(y^2-sy+v) forces s^2 to be a nonzero
            # rational-square root of z^3 + 2Az^2 + (A^2-4C)z - B^2
            res = [-(B * B), A * A - 4 * C, 2 * A, base.one]
            rts, _ = polynomial_roots(res, base)
            for z in rts:
                if not z.is_zero() and _rational_sqrt(z) is not None:
                    return False
            return True
        return None
    return None


def _rational_sqrt(s: Scalar):
    """Exact square root of a rational scalar, or None."""
    f = s.v
    if f < 0:
        return None
    from math import isqrt

    n, d = f.numerator, f.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Scalar(s.field, Fraction(rn, rd))
    return None


class ExtensionField(Field):
    """Simple extension base[t]/<minpoly>; payloads are coefficient tuples."""

    def __init__(self, base: Field, minpoly: tuple, symbol: str):
        if isinstance(base, ExtensionField):
            raise FieldError("towers are not supported; give one minpoly over QQ or GF(p)")
        if not isinstance(base, (RationalField, PrimeField)):
            raise FieldError(f"unsupported extension base {base}")
        coeffs = [base.scalar(c) if not isinstance(c, Scalar) else c for c in minpoly]
        if len(coeffs) < 2:
            raise FieldError("minpoly must have degree >= 1")
        if coeffs[-1] != base.one:
            raise FieldError("minpoly must be monic")
        self.base = base
        self.minpoly = tuple(c.v for c in coeffs)
        self.symbol = symbol
        self.deg = len(coeffs) - 1
        self.char = base.char
        cert = _certify_irreducible(coeffs, base)
        if cert is False:
            raise FieldError(f"minpoly {self._poly_str()} is reducible over {base}")
        if cert is None:
            logger.warning(
                "irreducibility of %s over %s not certified (degree > 4); trusting caller",
                self._poly_str(), base,
            )
        # precompute reductions of t^deg .. t^{2 deg - 2}
        self._tpow = self._reduction_table()

    def _poly_str(self) -> str:
        return " + ".join(
            f"{self.base._repr(c)}*t^{i}" for i, c in enumerate(self.minpoly)
        )

    def _reduction_table(self):
        b = self.base
        d = self.deg
        top = tuple(b._neg(c) for c in self.minpoly[:-1])  # t^d = -(lower part)
        table = [top]
        for _ in range(d - 2):
            prev = table[-1]
            shifted = (b._from_int(0),) + prev[:-1]
            carry = prev[-1]
            table.append(
                tuple(b._add(shifted[i], b._mul(carry, top[i])) for i in range(d))
            )
        return table

    @functools.cached_property
    def gen(self) -> Scalar:
        """The designated root t of the minimal polynomial."""
        b = self.base
        coords = [b._from_int(0)] * self.deg
        if self.deg == 1:
            coords[0] = self._tpow[0][0]
        else:
            coords[1] = b._from_int(1)
        return Scalar(self, tuple(coords))

    def _add(self, a, b):
        bb = self.base
        return tuple(bb._add(a[i], b[i]) for i in range(self.deg))

    def _neg(self, a):
        bb = self.base
        return tuple(bb._neg(c) for c in a)

    def _mul(self, a, b):
        bb = self.base
        d = self.deg
        raw = [bb._from_int(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if bb._is_zero(ai):
                continue
            for j, bj in enumerate(b):
                raw[i + j] = bb._add(raw[i + j], bb._mul(ai, bj))
        out = list(raw[:d])
        for k in range(d, 2 * d - 1):
            c = raw[k]
            if bb._is_zero(c):
                continue
            red = self._tpow[k - d]
            for i in range(d):
                out[i] = bb._add(out[i], bb._mul(c, red[i]))
        return tuple(out)

    def _inv(self, a):
        bb = self.base
        apoly = [Scalar(bb, c) for c in a]
        mpoly = [Scalar(bb, c) for c in self.minpoly]
        g, u, _ = poly_xgcd(apoly, mpoly, bb)
        if len(g) != 1:
            raise FieldError(
                f"non-invertible element; minpoly {self._poly_str()} is reducible"
            )
        u = poly_scale(u, g[0].inv())
        coords = [c.v for c in u] + [bb._from_int(0)] * (self.deg - len(u))
        return tuple(coords[: self.deg])

    def _is_zero(self, a):
        return all(self.base._is_zero(c) for c in a)

    def _from_int(self, n):
        bb = self.base
        return tuple([bb._from_int(n)] + [bb._from_int(0)] * (self.deg - 1))

    def _coerce_payload(self, x):
        bb = self.base
        if isinstance(x, Fraction) and self.char == 0:
            return tuple([x] + [bb._from_int(0)] * (self.deg - 1))
        if isinstance(x, (list, tuple)):
            if len(x) > self.deg:
                raise FieldError(f"coordinate vector longer than degree {self.deg}")
            coords = [bb.scalar(c).v for c in x]
            coords += [bb._from_int(0)] * (self.deg - len(coords))
            return tuple(coords)
        raise FieldError(f"cannot interpret {x!r} as an element of {self}")

    def _repr(self, a):
        terms = []
        for i, c in enumerate(a):
            if self.base._is_zero(c):
                continue
            cs = self.base._repr(c)
            if i == 0:
                terms.append(cs)
            elif i == 1:
                terms.append(f"{cs}*{self.symbol}" if cs != "1" else self.symbol)
            else:
                terms.append(
                    f"{cs}*{self.symbol}^{i}" if cs != "1" else f"{self.symbol}^{i}"
                )
        return " + ".join(terms) if terms else "0"

    def describe(self):
        d = {
            "kind": "ext",
            "minpoly": [self.base.encode(Scalar(self.base, c)) for c in self.minpoly],
            "symbol": self.symbol,
        }
        if isinstance(self.base, PrimeField):
            d["p"] = self.base.p
        return d

    def encode(self, s):
        v = self.scalar(s).v
        return [self.base.encode(Scalar(self.base, c)) for c in v]

    def decode(self, obj):
        if isinstance(obj, int):
            return self.from_int(obj)
        if isinstance(obj, str) and self.char == 0:
            return self.scalar(Fraction(obj))
        if isinstance(obj, list):
            return self.scalar([self.base.decode(c) for c in obj])
        raise FieldError(f"bad {self} encoding: {obj!r}")

    def random_element(self, rng, bound: int = 9):
        return self.scalar(
            [self.base.random_element(rng, bound) for _ in range(self.deg)]
        )

    def elements(self):
        if self.char == 0:
            raise FieldError("infinite field")
        import itertools

        base_payloads = [e.v for e in self.base.elements()]
        for combo in itertools.product(base_payloads, repeat=self.deg):
            yield Scalar(self, tuple(combo))

    def __repr__(self):
        return f"{self.base}[{self.symbol}]/<{self._poly_str()}>"


@functools.cache
def _extension_field_cached(base: Field, minpoly: tuple, symbol: str) -> ExtensionField:
    return ExtensionField(base, minpoly, symbol)


def extension_field(base: Field, minpoly, symbol: str = "t") -> ExtensionField:
    coeffs = tuple(
        base.scalar(c).v if not isinstance(c, Scalar) else base.scalar(c).v
        for c in minpoly
    )
    return _extension_field_cached(base, coeffs, symbol)


def cyclotomic_minpoly(n: int) -> list[int]:
    """Coefficients (constant-first, leading 1) of the n-th cyclotomic polynomial,
    computed by dividing t^n - 1 by the product of the proper-divisor polynomials."""
    if n < 1:
        raise FieldError("n must be positive")
    num = [QQ.from_int(0)] * n + [QQ.one]
    num[0] = -QQ.one
    den = [QQ.one]
    for d in range(1, n):
        if n % d == 0:
            phi_d = [QQ.from_int(c) for c in cyclotomic_minpoly(d)]
            den = poly_mul(den, phi_d, QQ)
    q, r = poly_divmod(num, den, QQ)
    assert not r
    out = [int(c.v) for c in q]
    assert all(Fraction(c) == q[i].v for i, c in enumerate(out))
    return out


def make_field(desc) -> Field:
    """Build a field context from its JSON descriptor (or pass one through)."""
    if isinstance(desc, Field):
        return desc
    if isinstance(desc, str):
        if desc in ("Q", "QQ"):
            return QQ
        raise FieldError(f"unknown field descriptor {desc!r}")
    if not isinstance(desc, dict) or "kind" not in desc:
        raise FieldError(f"bad field descriptor: {desc!r}")
    kind = desc["kind"]
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return prime_field(int(desc["p"]))
    if kind == "ext":
        base = prime_field(int(desc["p"])) if "p" in desc else QQ
        minpoly = [base.decode(c) for c in desc["minpoly"]]
        return extension_field(base, minpoly, desc.get("symbol", "t"))
    raise FieldError(f"unknown field kind {kind!r}")
