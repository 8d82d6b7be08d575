"""The small two-periodic cochain complex of a monogenic extension and its
cohomology, over any finite-dimensional A-bimodule.

Degree bookkeeping: d^r is the differential INTO C^r, so H^r is
ker d^{r+1} / im d^r and computing H^r requires the complex to be built
through degree r + 1.  The twist exponent of C^r is mn for r = 2m and
mn + 1 for r = 2m + 1; cochain spaces are the twisted invariants M^{alpha^t}.
"""

from __future__ import annotations

from .kalgebra import ValidationReport
from .linalg import (
    EchelonTracker,
    LinSolver,
    Mat,
    kernel_basis,
    quotient_basis,
    vadd,
)
from .monogenic import AElem, MonogenicAlgebra, twist_exponent


class CohomologyError(ValueError):
    pass


class Bimodule:
    """A-bimodule given by left/right action matrices for K-basis elements and x."""

    def __init__(self, alg: MonogenicAlgebra, L_k: list[Mat], Lx: Mat, R_k: list[Mat], Rx: Mat):
        self.alg = alg
        self.field = alg.field
        self.dim = Lx.rows
        self.L_k = L_k
        self.Lx = Lx
        self.R_k = R_k
        self.Rx = Rx
        self._Lx_pow: dict[int, Mat] = {0: Mat.identity(self.field, self.dim)}
        self._Rx_pow: dict[int, Mat] = {0: Mat.identity(self.field, self.dim)}

    @classmethod
    def regular(cls, alg: MonogenicAlgebra) -> "Bimodule":
        """M = A with multiplication actions."""
        dim = alg.adim

        def mat_of(op) -> Mat:
            cols = []
            for j in range(dim):
                coords = [alg.field.zero] * dim
                coords[j] = alg.field.one
                cols.append(op(AElem(alg, coords)).coords)
            return Mat.from_columns(alg.field, cols, dim)

        L_k = [
            mat_of(lambda v, b=b: alg.a_mul(alg.k_embed(alg.K.basis_elem(b)), v))
            for b in range(alg.K.dim)
        ]
        R_k = [
            mat_of(lambda v, b=b: alg.a_mul(v, alg.k_embed(alg.K.basis_elem(b))))
            for b in range(alg.K.dim)
        ]
        Lx = mat_of(lambda v: alg.a_mul(alg.x, v))
        Rx = mat_of(lambda v: alg.a_mul(v, alg.x))
        return cls(alg, L_k, Lx, R_k, Rx)

    @classmethod
    def from_actions(cls, alg: MonogenicAlgebra, L_k, Lx, R_k, Rx) -> "Bimodule":
        M = cls(alg, list(L_k), Lx, list(R_k), Rx)
        rep = M.validate()
        if not rep.ok:
            raise CohomologyError("; ".join(rep.failures))
        return M

    def L_elem(self, u) -> Mat:
        u = self.alg.K.elem(u)
        out = Mat.zero(self.field, self.dim, self.dim)
        for b, c in enumerate(u.coords):
            if not c.is_zero():
                out = out.add(self.L_k[b].scale(c))
        return out

    def R_elem(self, u) -> Mat:
        u = self.alg.K.elem(u)
        out = Mat.zero(self.field, self.dim, self.dim)
        for b, c in enumerate(u.coords):
            if not c.is_zero():
                out = out.add(self.R_k[b].scale(c))
        return out

    def Lx_pow(self, e: int) -> Mat:
        if e not in self._Lx_pow:
            self._Lx_pow[e] = self.Lx.matmul(self.Lx_pow(e - 1))
        return self._Lx_pow[e]

    def Rx_pow(self, e: int) -> Mat:
        if e not in self._Rx_pow:
            self._Rx_pow[e] = self.Rx.matmul(self.Rx_pow(e - 1))
        return self._Rx_pow[e]

    def validate(self) -> ValidationReport:
        failures = []
        alg = self.alg
        K = alg.K
        ident = Mat.identity(self.field, self.dim)
        if self.L_elem(K.unit) != ident:
            failures.append("left action of the unit is not the identity")
        if self.R_elem(K.unit) != ident:
            failures.append("right action of the unit is not the identity")
        for i in range(K.dim):
            for j in range(K.dim):
                ei, ej = K.basis_elem(i).coords, K.basis_elem(j).coords
                if self.L_k[i].matmul(self.L_k[j]) != self.L_elem(K.kmul(ei, ej)):
                    failures.append(f"left action not multiplicative at ({i},{j})")
                if self.R_k[j].matmul(self.R_k[i]) != self.R_elem(K.kmul(ei, ej)):
                    failures.append(f"right action not anti-multiplicative at ({i},{j})")
                if failures:
                    return ValidationReport(False, tuple(failures))
        for b in range(K.dim):
            lam = K.basis_elem(b).coords
            tw = alg.alpha.apply(lam)
            if self.Lx.matmul(self.L_k[b]) != self.L_elem(tw).matmul(self.Lx):
                failures.append(f"left x-relation fails at basis {b}")
            if self.R_k[b].matmul(self.Rx) != self.Rx.matmul(self.R_elem(tw)):
                failures.append(f"right x-relation fails at basis {b}")
            if failures:
                return ValidationReport(False, tuple(failures))
        for Lg in self.L_k + [self.Lx]:
            for Rh in self.R_k + [self.Rx]:
                if Lg.matmul(Rh) != Rh.matmul(Lg):
                    failures.append("left and right actions do not commute")
                    return ValidationReport(False, tuple(failures))
        Lf = self.Lx_pow(alg.n)
        Rf = self.Rx_pow(alg.n)
        for i, li in enumerate(alg.f_coeffs, start=1):
            Lf = Lf.add(self.L_elem(li).matmul(self.Lx_pow(alg.n - i)))
            Rf = Rf.add(self.Rx_pow(alg.n - i).matmul(self.R_elem(li)))
        if not Lf.is_zero():
            failures.append("f does not act as zero on the left")
        if not Rf.is_zero():
            failures.append("f does not act as zero on the right")
        return ValidationReport(not failures, tuple(failures))


def bimodule_regular(alg: MonogenicAlgebra) -> Bimodule:
    return Bimodule.regular(alg)


def twisted_invariants(M: Bimodule, r: int) -> Mat:
    """Basis (columns) of M^{alpha^r} = {m : m lambda = alpha^r(lambda) m},
    computed by iteratively restricting to the kernel of each basis constraint."""
    alg = M.alg
    field = M.field
    basis = Mat.identity(field, M.dim)
    for b in range(alg.K.dim):
        if basis.cols == 0:
            break
        lam = alg.K.basis_elem(b).coords
        con = M.R_k[b].add(M.L_elem(alg.alpha.apply_power(r, lam)).scale(-field.one))
        restricted = con.matmul(basis)
        ker = kernel_basis(restricted)
        basis = basis.matmul(ker)
    return basis


class SmallComplex:
    """The small complex C^r = M^{alpha^{t(r)}} with compiled differentials."""

    def __init__(self, alg: MonogenicAlgebra, M: Bimodule, max_degree: int):
        self.alg = alg
        self.M = M
        self.max_degree = max_degree
        self.field = M.field
        self._groups: dict[int, "CohomologyGroup"] = {}
        self.bases: list[Mat] = []
        self.solvers: list[LinSolver] = []
        for r in range(max_degree + 1):
            t = twist_exponent(r, alg.n)
            B = twisted_invariants(M, t)
            self.bases.append(B)
            self.solvers.append(LinSolver(B))
        self.dmats: list[Mat | None] = [None]
        for r in range(1, max_degree + 1):
            self.dmats.append(self._compile_d(r))
        for r in range(1, max_degree):
            prod = self.dmats[r + 1].matmul(self.dmats[r])
            if not prod.is_zero():
                raise CohomologyError(f"d.d is nonzero into degree {r + 1}")

    def twist(self, r: int) -> int:
        return twist_exponent(r, self.alg.n)

    def dim_cochain(self, r: int) -> int:
        return self.bases[r].cols

    def d_ambient(self, r: int, v: tuple) -> tuple:
        """The differential into degree r evaluated on an ambient M-vector."""
        M = self.M
        if r % 2 == 1:
            return tuple(
                a - b for a, b in zip(M.Lx.matvec(v), M.Rx.matvec(v))
            )
        alg = self.alg
        out = (self.field.zero,) * M.dim
        lam = {i: v2 for i, v2 in enumerate(alg.f_coeffs, start=1)}
        lam[0] = alg.K.unit
        for i in range(1, alg.n + 1):
            li = lam[alg.n - i]
            if all(c.is_zero() for c in li):
                continue
            Lc = M.L_elem(li)
            for l in range(i):
                w = M.Rx_pow(i - l - 1).matvec(v)
                w = M.Lx_pow(l).matvec(w)
                out = vadd(out, Lc.matvec(w))
        return out

    def _compile_d(self, r: int) -> Mat:
        cols = []
        for j in range(self.bases[r - 1].cols):
            v = self.bases[r - 1].column(j)
            w = self.d_ambient(r, v)
            sol = self.solvers[r].solve(w)
            if sol is None:
                raise CohomologyError(
                    f"differential image leaves the twisted invariants in degree {r}"
                )
            cols.append(sol)
        return Mat.from_columns(self.field, cols, self.bases[r].cols)

    def to_sub(self, r: int, v_ambient: tuple) -> tuple:
        sol = self.solvers[r].solve(v_ambient)
        if sol is None:
            raise CohomologyError(f"vector is not in the degree-{r} cochain space")
        return sol

    def to_ambient(self, r: int, v_sub: tuple) -> tuple:
        return self.bases[r].matvec(v_sub)


def build_small_complex(alg: MonogenicAlgebra, M: Bimodule, max_degree: int) -> SmallComplex:
    return SmallComplex(alg, M, max_degree)


class CohomologyGroup:
    """H^r of a small complex with explicit ambient representatives and
    deterministic class coordinates."""

    def __init__(self, complex_: SmallComplex, r: int):
        if r + 1 > complex_.max_degree:
            raise CohomologyError(
                f"degree {r} needs the complex built through degree {r + 1}"
            )
        self.complex = complex_
        self.degree = r
        field = complex_.field
        kernel = kernel_basis(complex_.dmats[r + 1])
        if r == 0:
            image = Mat.from_columns(field, [], complex_.dim_cochain(0))
        else:
            dmat = complex_.dmats[r]
            tracker = EchelonTracker(field, dmat.rows)
            cols = [c for c in dmat.columns_list() if tracker.add(c)]
            image = Mat.from_columns(field, cols, dmat.rows)
        reps_sub = quotient_basis(image, kernel)
        self.kernel = kernel
        self.image = image
        self.reps_sub = reps_sub
        self.dim = reps_sub.cols
        self.reps_ambient = [
            complex_.to_ambient(r, c) for c in reps_sub.columns_list()
        ]
        mixed = Mat.from_columns(
            field,
            reps_sub.columns_list() + image.columns_list(),
            complex_.dim_cochain(r),
        )
        self._class_solver = LinSolver(mixed)
        self._cocycle_test = complex_.dmats[r + 1]

    def is_cocycle_sub(self, v_sub: tuple) -> bool:
        return all(c.is_zero() for c in self._cocycle_test.matvec(v_sub))

    def class_coords(self, v_ambient: tuple) -> tuple:
        """Coordinates of a cocycle's class over the representative basis."""
        v_sub = self.complex.to_sub(self.degree, v_ambient)
        if not self.is_cocycle_sub(v_sub):
            raise CohomologyError("vector is not a cocycle")
        sol = self._class_solver.solve(v_sub)
        if sol is None:
            raise CohomologyError("cocycle outside kernel span (inconsistent state)")
        return sol[: self.dim]

    def is_coboundary(self, v_ambient: tuple) -> bool:
        return all(c.is_zero() for c in self.class_coords(v_ambient))


def cohomology_group(C: SmallComplex, r: int) -> CohomologyGroup:
    if r not in C._groups:
        C._groups[r] = CohomologyGroup(C, r)
    return C._groups[r]


def classes_equal(C: SmallComplex, r: int, a: tuple, b: tuple) -> bool:
    """Whether two ambient cocycles in degree r are cohomologous."""
    H = cohomology_group(C, r)
    diff = tuple(x - y for x, y in zip(a, b))
    return all(c.is_zero() for c in H.class_coords(diff))


def cohomology_dims(C: SmallComplex, up_to: int) -> list[int]:
    return [cohomology_group(C, r).dim for r in range(up_to + 1)]


def complex_report(C: SmallComplex) -> list[dict]:
    """Per-degree data for reports; covers 0 .. max_degree - 1."""
    out = []
    for r in range(C.max_degree):
        H = cohomology_group(C, r)
        rank_in = 0 if r == 0 else H.image.cols
        rank_out = C.dim_cochain(r) - H.kernel.cols
        entry = {
            "degree": r,
            "dim_cochain": C.dim_cochain(r),
            "twist_exponent": C.twist(r),
            "rank_in": rank_in,
            "rank_out": rank_out,
            "dim_H": H.dim,
            "representatives": [
                [C.field.encode(c) for c in rep] for rep in H.reps_ambient
            ],
        }
        out.append(entry)
    return out
