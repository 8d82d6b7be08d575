"""Command-line front end.

Verbs: validate (constructor and resolution checks), cohomology (dimension
table), products (cup and bracket class tables with oracle agreement),
theorems (closed-form checks against the generic complex), report (all of
the above).  Input is a JSON spec file; output is JSON (deterministic,
sorted keys), plain text, or CSV.  Exit codes: 0 all checks pass, 1 a
mathematical check failed, 2 the spec file is unusable.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .cohomology import (
    Bimodule,
    CohomologyError,
    build_small_complex,
    classes_equal,
    cohomology_dims,
    cohomology_group,
    complex_report,
)
from .closedforms import (
    ClosedFormError,
    _character_of,
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
)
from .fields import FieldError
from .kalgebra import AlgebraError, algebra_validate
from .monogenic import MonogenicError, Resolution, normality_check, validate_f
from .products import (
    ProductsError,
    SmallCochain,
    bracket_class_table,
    bracket_small_closed,
    bracket_small_generic,
    cup_class_table,
    cup_small,
    cup_small_oracle,
)
from .monogenic import AElem
from .specio import Instance, SpecError, load_instance

__all__ = ["main"]


# -- shared helpers -----------------------------------------------------------


def _decode_candidate(inst: Instance, raw):
    if isinstance(raw, str):
        return raw
    if isinstance(raw, list):
        try:
            return tuple(inst.field.decode(c) for c in raw)
        except (FieldError, ValueError, TypeError) as exc:
            raise SpecError(f"bad witness coordinates {raw!r}: {exc}") from exc
    raise SpecError(f"a witness candidate is a basis label or a coordinate list, got {raw!r}")


def _witness_candidates(inst: Instance, flag_value: str | None) -> list:
    out = []
    if flag_value is not None:
        try:
            parsed = json.loads(flag_value)
        except json.JSONDecodeError:
            parsed = flag_value
        out.append(_decode_candidate(inst, parsed))
    for raw in inst.options.get("witness_candidates", []):
        out.append(_decode_candidate(inst, raw))
    return out


def _encode_kelem(inst: Instance, coords) -> list:
    return [inst.field.encode(c) for c in coords]


def _build_complex(inst: Instance, D: int):
    alg = inst.algebra(check=True)
    C = build_small_complex(alg, Bimodule.regular(alg), D + 1)
    return alg, C


# -- verb: validate -----------------------------------------------------------


def run_validate(inst: Instance, args) -> tuple[dict, bool]:
    D = args.max_degree if args.max_degree is not None else inst.default_degree()
    checks = []

    def record(name, rep):
        checks.append({"name": name, "ok": rep.ok, "failures": list(rep.failures)})
        return rep.ok

    ok = record("coefficient-algebra", algebra_validate(inst.K))
    twist_rep = inst.alpha.validate()
    twist_ok = twist_rep.ok and inst.alpha.is_automorphism
    failures = list(twist_rep.failures)
    if twist_rep.ok and not inst.alpha.is_automorphism:
        failures.append("twist matrix is not invertible")
    checks.append({"name": "twist", "ok": twist_ok, "failures": failures})
    ok = ok and twist_ok
    f_ok = record("defining-polynomial", validate_f(inst.K, inst.alpha, inst.f_coeffs))
    ok = ok and f_ok
    if ok:
        alg = inst.algebra(check=False)
        ok = record("normality", normality_check(alg)) and ok
        ok = record("contraction", Resolution(alg, D).contraction_check()) and ok
    payload = {"instance": inst.raw, "max_degree": D, "checks": checks, "ok": ok}
    return payload, ok


# -- verb: cohomology ---------------------------------------------------------


def run_cohomology(inst: Instance, args) -> tuple[dict, bool]:
    D = args.max_degree if args.max_degree is not None else inst.default_degree()
    _, C = _build_complex(inst, D)
    rows = complex_report(C)
    payload = {
        "instance": inst.raw,
        "max_degree": D,
        "dims": [row["dim_H"] for row in rows],
        "table": rows,
    }
    return payload, True


# -- verb: products -----------------------------------------------------------


def _reps(C, r):
    return cohomology_group(C, r).reps_ambient


def _cup_agreement(C, cap: int) -> list[dict]:
    alg = C.alg
    out = []
    for p in range(cap + 1):
        for q in range(cap + 1 - p):
            if p + q + 1 > C.max_degree:
                continue
            pairs = 0
            agree = True
            for av in _reps(C, p):
                a = SmallCochain(alg, p, AElem(alg, av), check=False)
                for bv in _reps(C, q):
                    b = SmallCochain(alg, q, AElem(alg, bv), check=False)
                    pairs += 1
                    got = cup_small(a, b).value.coords
                    want = cup_small_oracle(a, b).value.coords
                    agree = agree and classes_equal(C, p + q, got, want)
            if pairs:
                out.append({"deg_a": p, "deg_b": q, "pairs": pairs, "agree": agree})
    return out


def _bracket_agreement(C, witness, cap: int) -> list[dict]:
    alg = C.alg
    out = []
    top = C.max_degree - 1
    for p in range(min(cap + 2, top + 1)):
        for q in range(min(cap + 2 - p, top + 1)):
            deg = max(p + q - 1, 0)
            if deg > cap or deg + 1 > C.max_degree:
                continue
            pairs = 0
            agree = True
            note = None
            for av in _reps(C, p):
                a = SmallCochain(alg, p, AElem(alg, av), check=False)
                for bv in _reps(C, q):
                    b = SmallCochain(alg, q, AElem(alg, bv), check=False)
                    try:
                        want = bracket_small_closed(a, b, witness).value.coords
                    except ProductsError as exc:
                        note = str(exc)
                        continue
                    pairs += 1
                    got = bracket_small_generic(a, b, max(cap, 1)).value.coords
                    agree = agree and classes_equal(C, deg, got, want)
            if pairs or note:
                row = {"deg_a": p, "deg_b": q, "pairs": pairs, "agree": agree if pairs else None}
                if note:
                    row["note"] = note
                out.append(row)
    return out


def run_products(inst: Instance, args) -> tuple[dict, bool]:
    D = args.max_degree if args.max_degree is not None else inst.default_degree()
    bound = args.oracle_bound if args.oracle_bound is not None else inst.options.get("oracle_bound", 5)
    alg, C = _build_complex(inst, D)
    cup_rows = cup_class_table(C, D)
    bracket_rows = bracket_class_table(C, D, bound)
    cup_checked = _cup_agreement(C, min(D, 3))
    witness = find_witness(alg, _witness_candidates(inst, getattr(args, "witness", None)))
    if witness:
        bracket_checked = _bracket_agreement(C, witness, min(bound, 3))
        witness_enc = _encode_kelem(inst, witness.value.coords)
    else:
        bracket_checked = []
        witness_enc = "none"
    payload = {
        "instance": inst.raw,
        "max_degree": D,
        "oracle_bound": bound,
        "cup_source": "small-complex formula",
        "cup": cup_rows,
        "cup_closed_vs_oracle": cup_checked,
        "bracket_source": "bar-complex oracle",
        "bracket": bracket_rows,
        "bracket_closed_vs_oracle": bracket_checked,
        "witness": witness_enc,
    }
    ok = all(row["agree"] for row in cup_checked) and all(
        row["agree"] in (True, None) for row in bracket_checked
    )
    return payload, ok


# -- verb: theorems -----------------------------------------------------------


def _with_char(C, chi):
    return chi if chi is not None else _character_of(C.alg.K, C.alg.alpha)


def _run_membership(C, inst, D, witness, chi):
    return class_membership_period(C.alg.K, _with_char(C, chi), C.alg.n)


def _run_rank_one(C, inst, D, witness, chi):
    opts = inst.options
    if inst.K.group is None or chi is None:
        raise ClosedFormError("rank-one analysis needs a character-twist group instance")
    if "g1" not in opts or "xi" not in opts:
        raise ClosedFormError("rank-one analysis needs options.g1 and options.xi")
    try:
        xi = inst.field.decode(opts["xi"])
    except (FieldError, ValueError, TypeError) as exc:
        raise ClosedFormError(f"bad options.xi: {exc}") from exc
    return rank_one_hopf_report(
        inst.field, inst.K.group, chi, opts["g1"], inst.n, xi, up_to=min(D, 5)
    )


def _run_quaternion(C, inst, D, witness, chi):
    kspec = inst.raw.get("K", {})
    if kspec.get("kind") != "quaternion":
        raise ClosedFormError("rotation analysis needs quaternion coefficients")
    vals = [inst.field.decode(kspec[k]) for k in ("cos", "sin", "cos_half", "sin_half")]
    return quaternion_rotation_report(inst.field, *vals, inst.f_coeffs, up_to=min(D, 4))


THEOREM_CHECKS = {
    "collapsed-spaces": lambda C, inst, D, w, chi: check_collapsed_cochain_spaces(C, w, D),
    "collapsed-differentials": lambda C, inst, D, w, chi: check_collapsed_differentials(C, w, D),
    "collapsed-cohomology": lambda C, inst, D, w, chi: collapsed_cohomology_table(C, w, D),
    "cyclic-comparison": lambda C, inst, D, w, chi: cyclic_group_cohomology(C, w, D),
    "diagonalizable": lambda C, inst, D, w, chi: diagonalizable_cohomology_table(C, w, D),
    "untwisted-model": lambda C, inst, D, w, chi: untwisted_model_check(C, D),
    "untwisted-annihilator": lambda C, inst, D, w, chi: untwisted_annihilator_table(C, D),
    "group-cohomology": lambda C, inst, D, w, chi: group_algebra_cohomology_table(C, chi, D),
    "membership-period": _run_membership,
    "periodicity": lambda C, inst, D, w, chi: cohomology_periodicity(C, chi, D),
    "presentation": lambda C, inst, D, w, chi: presentation_report(C, chi, D),
    "rank-one-hopf": _run_rank_one,
    "quaternion-rotation": _run_quaternion,
}


def run_theorems(inst: Instance, args) -> tuple[dict, bool]:
    D = args.max_degree if args.max_degree is not None else inst.default_degree()
    alg, C = _build_complex(inst, D)
    witness = find_witness(alg, _witness_candidates(inst, getattr(args, "witness", None)))
    chi = inst.chi
    which = getattr(args, "which", None)
    if which:
        tokens = [t.strip() for t in which.split(",") if t.strip()]
        unknown = [t for t in tokens if t not in THEOREM_CHECKS]
        if unknown:
            raise SpecError(
                f"unknown checks {unknown}; available: {', '.join(sorted(THEOREM_CHECKS))}"
            )
    else:
        tokens = list(THEOREM_CHECKS)
    entries = []
    ok = True
    for token in tokens:
        try:
            result = THEOREM_CHECKS[token](C, inst, D, witness, chi)
        except ClosedFormError as exc:
            entries.append({"which": token, "status": "skipped", "reason": str(exc)})
            continue
        match = result.get("match")
        status = "ok" if match in (True, None) else "mismatch"
        ok = ok and status == "ok"
        entries.append({"which": token, "status": status, "result": result})
    payload = {
        "instance": inst.raw,
        "max_degree": D,
        "witness": _encode_kelem(inst, witness.value.coords) if witness else "none",
        "generic_dims": cohomology_dims(C, D),
        "checks": entries,
    }
    return payload, ok


# -- verb: report -------------------------------------------------------------


def run_report(inst: Instance, args) -> tuple[dict, bool]:
    v_payload, v_ok = run_validate(inst, args)
    payload = {"instance": inst.raw, "validate": v_payload, "ok": v_ok}
    ok = v_ok
    if v_ok:
        c_payload, _ = run_cohomology(inst, args)
        p_payload, p_ok = run_products(inst, args)
        t_payload, t_ok = run_theorems(inst, args)
        for part in (c_payload, p_payload, t_payload):
            part.pop("instance", None)
        payload["cohomology"] = c_payload
        payload["products"] = p_payload
        payload["theorems"] = t_payload
        ok = v_ok and p_ok and t_ok
        payload["ok"] = ok
    v_payload.pop("instance", None)
    return payload, ok


# -- rendering ----------------------------------------------------------------


def _text_validate(d, lines):
    for c in d["checks"]:
        if c["ok"]:
            lines.append(f"  {c['name']}: ok")
        else:
            lines.append(f"  {c['name']}: FAIL ({'; '.join(c['failures'])})")
    lines.append(f"validate: {'ok' if d['ok'] else 'FAIL'}")


def _text_cohomology(d, lines):
    lines.append("  degree  dim_cochain  twist  dim_H")
    for row in d["table"]:
        lines.append(
            f"  {row['degree']:>6}  {row['dim_cochain']:>11}  "
            f"{row['twist_exponent']:>5}  {row['dim_H']:>5}"
        )
    lines.append(f"dims: {d['dims']}")


def _text_products(d, lines):
    lines.append(f"  cup entries: {len(d['cup'])} ({d['cup_source']})")
    for row in d["cup_closed_vs_oracle"]:
        verdict = "agree" if row["agree"] else "DISAGREE"
        lines.append(f"  cup ({row['deg_a']},{row['deg_b']}): {verdict} [{row['pairs']} pairs]")
    lines.append(f"  bracket entries: {len(d['bracket'])} ({d['bracket_source']})")
    lines.append(f"  witness: {d['witness']}")
    for row in d["bracket_closed_vs_oracle"]:
        if row["agree"] is None:
            verdict = f"skipped ({row.get('note', '')})"
        else:
            verdict = "agree" if row["agree"] else "DISAGREE"
        lines.append(f"  bracket ({row['deg_a']},{row['deg_b']}): {verdict}")


def _text_theorems(d, lines):
    lines.append(f"  witness: {d['witness']}")
    lines.append(f"  generic dims: {d['generic_dims']}")
    for e in d["checks"]:
        if e["status"] == "skipped":
            lines.append(f"  {e['which']}: skipped ({e['reason']})")
        elif e["status"] == "ok":
            lines.append(f"  {e['which']}: ok")
        else:
            mismatches = e["result"].get("mismatches", [])
            lines.append(f"  {e['which']}: MISMATCH ({'; '.join(map(str, mismatches))})")


def render_text(verb: str, payload: dict, elapsed_ms: float) -> str:
    lines = [f"orecohom {verb}"]
    if verb == "validate":
        _text_validate(payload, lines)
    elif verb == "cohomology":
        _text_cohomology(payload, lines)
    elif verb == "products":
        _text_products(payload, lines)
    elif verb == "theorems":
        _text_theorems(payload, lines)
    else:
        lines.append("[validate]")
        _text_validate(payload["validate"], lines)
        if "cohomology" in payload:
            lines.append("[cohomology]")
            _text_cohomology(payload["cohomology"], lines)
            lines.append("[products]")
            _text_products(payload["products"], lines)
            lines.append("[theorems]")
            _text_theorems(payload["theorems"], lines)
        lines.append(f"report: {'ok' if payload['ok'] else 'FAIL'}")
    lines.append(f"elapsed: {elapsed_ms:.1f} ms")
    return "\n".join(lines) + "\n"


def render_csv(verb: str, payload: dict) -> str:
    if verb == "validate":
        rows = ["check,ok"]
        rows += [f"{c['name']},{str(c['ok']).lower()}" for c in payload["checks"]]
        return "\n".join(rows) + "\n"
    if verb == "products":
        rows = ["kind,deg_a,deg_b,basis_index_a,basis_index_b,result_class_coords"]
        for kind in ("cup", "bracket"):
            for r in payload[kind]:
                coords = ";".join(str(c) for c in r["result_class_coords"])
                rows.append(
                    f"{kind},{r['deg_a']},{r['deg_b']},"
                    f"{r['basis_index_a']},{r['basis_index_b']},{coords}"
                )
        return "\n".join(rows) + "\n"
    if verb == "theorems":
        rows = ["check,status"]
        rows += [f"{e['which']},{e['status']}" for e in payload["checks"]]
        return "\n".join(rows) + "\n"
    source = payload["cohomology"] if verb == "report" else payload
    rows = ["degree,dim"]
    rows += [f"{i},{dim}" for i, dim in enumerate(source["dims"])]
    return "\n".join(rows) + "\n"


def render(verb: str, payload: dict, fmt: str, elapsed_ms: float) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        return render_csv(verb, payload)
    return render_text(verb, payload, elapsed_ms)


# -- argument parsing and dispatch --------------------------------------------


RUNNERS = {
    "validate": run_validate,
    "cohomology": run_cohomology,
    "products": run_products,
    "theorems": run_theorems,
    "report": run_report,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orecohom",
        description="Exact relative Hochschild cohomology of monogenic skew extensions.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(verb, help_text, *, oracle=False, which=False, witness=False):
        sp = sub.add_parser(verb, help=help_text)
        sp.add_argument("spec", help="path to a JSON instance description")
        sp.add_argument("--max-degree", type=int, default=None, metavar="D",
                        help="top cohomological degree (default: one twist period plus two, capped at 6)")
        sp.add_argument("--format", choices=["json", "text", "csv"], default="json")
        sp.add_argument("--out", default=None, metavar="PATH",
                        help="write the output to a file instead of stdout")
        if oracle:
            sp.add_argument("--oracle-bound", type=int, default=None, metavar="B",
                            help="top degree for bar-complex bracket evaluation (default 5)")
        if which:
            sp.add_argument("--which", default=None, metavar="NAMES",
                            help="comma-separated closed-form checks (default: all applicable)")
        if witness:
            sp.add_argument("--witness", default=None, metavar="ELEM",
                            help="witness candidate: a basis label or a JSON coordinate list")
        return sp

    add("validate", "check the coefficient algebra, twist, defining polynomial, and resolution")
    add("cohomology", "compute the cohomology dimension table")
    add("products", "tabulate cup products and brackets on classes", oracle=True, witness=True)
    add("theorems", "run closed-form checks against the generic complex", which=True, witness=True)
    add("report", "run everything", oracle=True, which=True, witness=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_degree is not None and args.max_degree < 1:
        print("error: --max-degree must be at least 1", file=sys.stderr)
        return 2
    t0 = time.perf_counter()
    try:
        inst = load_instance(args.spec)
        payload, ok = RUNNERS[args.verb](inst, args)
    except SpecError as exc:
        print(f"spec error: {exc}", file=sys.stderr)
        return 2
    except (
        MonogenicError,
        AlgebraError,
        CohomologyError,
        ProductsError,
        ClosedFormError,
        FieldError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    text = render(args.verb, payload, args.format, elapsed_ms)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
