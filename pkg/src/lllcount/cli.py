"""Command-line front end.

All numbers are natural logs (fields ending in ``_ln``) unless named
otherwise.  Exit status: 0 success, 1 invalid input or regime, 2 at least one
verification item failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import analysis, census, secint, specialfn
from .census import ReductionParams, RegimeError
from .logdomain import lr_from_log

COMMANDS = ("compute", "bounds", "approx", "verify", "sweep", "audit")
FORMATS = ("json", "csv", "plain")
LN_10 = math.log(10.0)


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ output


def fmt_float(x: float) -> str:
    return format(x, ".17g")


def _json_value(v, indent, level):
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return fmt_float(v) if math.isfinite(v) else "null"
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, dict):
        if not v:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_json_value(x, indent, level + 1)}" for k, x in v.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(v, (list, tuple)):
        if not v:
            return "[]"
        items = [pad + _json_value(x, indent, level + 1) for x in v]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(v).__name__}")


def to_json(doc: dict) -> str:
    """Deterministic JSON: insertion-ordered keys, floats at 17 significant digits."""
    return _json_value(doc, 2, 0) + "\n"


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return fmt_float(float(v)) if math.isfinite(v) else ""
    if isinstance(v, (list, tuple)):
        return "; ".join(str(x) for x in v)
    return str(v)


def to_csv(rows: list[dict]) -> str:
    header = []
    for r in rows:
        header.extend(k for k in r if k not in header)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_csv_cell(r.get(k)) for k in header])
    return buf.getvalue()


def to_plain(doc: dict) -> str:
    lines = [f"# {doc['command']}"]
    for w in doc["warnings"]:
        lines.append(f"# warning: {w}")
    for r in doc["results"]:
        lines.append("  ".join(f"{k}={_csv_cell(v)}" for k, v in r.items()))
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------- commands


def _log10_exp(ln):
    return math.floor(ln / LN_10)


def compute_point(n, eta, delta):
    p = ReductionParams(n, eta, delta)
    eq1 = census.exact_log_count_eq1(p)
    eq2 = census.exact_log_count_eq2(p)
    return {
        "n": n,
        "regime": p.regime.value,
        "eq1_ln": eq1,
        "eq2_ln": eq2,
        "normalized_ln": eq2 - n * math.log(2.0),
        "count_log10_exponent": _log10_exp(eq2),
    }


def _bounds_fields(prefix, r):
    out = {
        f"{prefix}_lower_ln": r.lower.ln_abs,
        f"{prefix}_exact_ln": r.exact.ln_abs,
        f"{prefix}_upper_ln": r.upper.ln_abs,
        f"{prefix}_ok": r.sandwich_ok,
    }
    if r.notes:
        out[f"{prefix}_notes"] = list(r.notes)
    return out


def bounds_point(n, eta, delta):
    p = ReductionParams(n, eta, delta)
    p.require(census.Regime.BOUND)
    row = {"n": n, "regime": p.regime.value}
    row.update(_bounds_fields("xi_prefactor", analysis.xi_prefactor_bounds_log(n, eta)))
    row.update(_bounds_fields("int_product", analysis.int_product_bounds_log(p)))
    row.update(_bounds_fields("int_simplified", analysis.int_product_bounds_simplified_log(p)))
    comb = analysis.combined_bounds_log(p)
    row.update(_bounds_fields("combined", comb))
    row["combined_secant_form_ok"] = comb.diagnostics["secant_form_ok"]
    if p.in_restricted_regime:
        rest = analysis.restricted_bounds_log(p)
        row.update(_bounds_fields("restricted", rest))
        row["restricted_secant_form_ok"] = rest.diagnostics["secant_form_ok"]
    return row


def approx_point(n, eta, delta, c, check_regime):
    p = ReductionParams(n, eta, delta)
    rough = analysis.rough_approx_log(p, check_regime=check_regime)
    tight = analysis.tight_approx_log(p, c, check_regime=check_regime)
    exact = census.exact_log_count_eq2(p)
    return {
        "n": n,
        "c": c,
        "exact_ln": exact,
        "rough_ln": rough,
        "tight_ln": tight,
        "ratio": rough / exact,
    }


def sweep_point(n, eta, delta, c):
    row = compute_point(n, eta, delta)
    p = ReductionParams(n, eta, delta)
    if p.in_bound_regime:
        comb = analysis.combined_bounds_log(p)
        row.update(_bounds_fields("combined", comb))
    if p.in_restricted_regime:
        rest = analysis.restricted_bounds_log(p)
        row.update(_bounds_fields("restricted", rest))
        row["rough_ln"] = analysis.rough_approx_log(p)
        row["tight_ln"] = analysis.tight_approx_log(p, c)
        row["ratio"] = row["rough_ln"] / row["eq2_ln"]
    return row


def _item(check, passed, value=None, n=None, detail=""):
    return {"check": check, "n": n, "value": value, "passed": bool(passed), "detail": detail}


def verify_items(n_min, n_max, eta, delta, tol, strict):
    """Run the property suite; returns (items, warnings)."""
    items, warnings = [], []
    for n in range(max(2, n_min), n_max + 1):
        r = census.consistency_check(ReductionParams(n, eta, delta), tol)
        items.append(_item("eq1_equals_eq2", r.passed, r.difference, n))

    phi = secint.derive_params(2, eta, delta).phi
    table = secint.sec_log_table(60, phi)
    worst = max(abs(table[m] - secint.quadrature_oracle_log(m, phi)) for m in range(61))
    items.append(_item("secant_recurrence_vs_quadrature", worst <= tol, worst, detail="m=0..60"))

    rng = np.random.default_rng(20240601)
    xs = rng.uniform(0.0, 0.999, 2000)
    ns = rng.integers(1, 501, 2000)
    bad = 0
    for x, k in zip(xs, ns):
        if x <= 0:
            continue
        lhs, rhs = analysis.product_one_minus_pow_lower(float(x), int(k))
        bad += lhs < rhs
    items.append(_item("prod_one_minus_pow", bad == 0, bad, detail="violations of 2000 samples"))

    bad = sum(
        not analysis.lemma_even_holds(i / 100.0, l) for l in range(19, 201) for i in range(1, 87)
    )
    items.append(_item("lemma_l_ge_19", bad == 0, bad, detail="violations, l=19..200 x 86 points"))

    bad = sum(
        not specialfn.zeta_bounds(s).contains(lr_from_log(specialfn.log_zeta(s)))
        for s in range(2, 201)
    )
    items.append(_item("zeta_sandwich", bad == 0, bad, detail="s=2..200"))
    bad = sum(
        not specialfn.gamma_bounds(s).contains(lr_from_log(specialfn.log_gamma(s / 2)))
        for s in range(6, 401)
    )
    items.append(_item("gamma_sandwich", bad == 0, bad, detail="s=6..400"))

    probe = ReductionParams(max(n_min, 22), eta, delta)
    if not probe.in_definition_regime:
        warnings.append("bound checks skipped: parameters outside the definition regime")
        return items, warnings
    for n in range(max(n_min, 22), n_max + 1):
        p = ReductionParams(n, eta, delta)
        for name, rep in (
            ("xi_prefactor_sandwich", analysis.xi_prefactor_bounds_log(n, eta)),
            ("int_product_sandwich", analysis.int_product_bounds_log(p)),
            ("int_simplified_sandwich", analysis.int_product_bounds_simplified_log(p)),
        ):
            items.append(_item(name, rep.sandwich_ok, min(rep.lower_gap, rep.upper_gap), n))
        reps = [analysis.combined_bounds_log(p)]
        if p.in_restricted_regime:
            reps.append(analysis.restricted_bounds_log(p))
        for rep in reps:
            items.append(
                _item(f"{rep.name}_secant_form_sandwich", rep.diagnostics["secant_form_ok"], None, n)
            )
            if strict:
                items.append(_item(f"{rep.name}_count_sandwich", rep.sandwich_ok, None, n,
                                   "; ".join(rep.notes)))
            elif not rep.sandwich_ok:
                warnings.append(f"n={n}: {rep.name} bounds do not bracket the count: "
                                + "; ".join(rep.notes))
    return items, warnings


def audit_rows():
    rows = []
    for e in analysis.constant_audit().entries:
        rows.append({
            "name": e.name,
            "printed": e.printed_value,
            "recomputed": e.recomputed_value,
            "deviation": e.deviation,
            "tolerance": e.tolerance,
            "within_tolerance": e.within_tolerance,
            "flagged": e.flagged,
            "expression": e.expression,
        })
    return rows


# --------------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="single dimension")
    common.add_argument("--n-min", type=int, help="first dimension of a range")
    common.add_argument("--n-max", type=int, help="last dimension of a range")
    common.add_argument("--eta", type=float, default=0.51)
    common.add_argument("--delta", type=float, default=0.99)
    common.add_argument("--c", type=float, default=analysis.DEFAULT_C,
                        help="linear coefficient of the tight approximation, in [0.5, 4]")
    common.add_argument("--tol", type=float, default=1e-6)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--allow-relaxed-domain", action="store_true",
                        help="accept 0 < eta < delta outside 1/2 < eta < delta < 1")
    common.add_argument("--strict", action="store_true",
                        help="verify: count-level bracketing by the combined/restricted "
                             "bounds fails the run instead of warning")

    parser = argparse.ArgumentParser(prog="lllcount", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in (
        ("compute", "exact ln-count in both forms"),
        ("bounds", "closed-form bounds with their exact targets (n >= 22)"),
        ("approx", "rough and tight approximations"),
        ("verify", "run the property suite"),
        ("sweep", "evaluate over a dimension range"),
        ("audit", "recompute printed constants"),
    ):
        sub.add_parser(name, parents=[common], help=text)
    return parser


def _dimensions(args, default_min=None):
    if args.n is not None:
        if args.n_min is not None or args.n_max is not None:
            raise UsageError("use either --n or --n-min/--n-max")
        return [args.n]
    lo = args.n_min if args.n_min is not None else default_min
    hi = args.n_max
    if lo is None or hi is None:
        raise UsageError("give --n or both --n-min and --n-max")
    if hi < lo:
        raise UsageError(f"empty range: --n-min {lo} > --n-max {hi}")
    return list(range(lo, hi + 1))


def _validate(args):
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    if not (args.eta > 0 and args.delta > 0 and args.eta < args.delta):
        raise UsageError(f"need 0 < eta < delta, got eta={args.eta}, delta={args.delta}")
    definition = 0.5 < args.delta < 1.0 and 0.5 < args.eta < args.delta
    if not definition and not args.allow_relaxed_domain:
        raise UsageError(
            f"(eta, delta) = ({args.eta}, {args.delta}) is outside 1/2 < eta < delta < 1; "
            "pass --allow-relaxed-domain to evaluate anyway"
        )


def _map(fn, args_list, jobs):
    if jobs == 1 or len(args_list) < 2:
        return [fn(*a) for a in args_list]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, *zip(*args_list)))


def run(args) -> tuple[int, dict]:
    _validate(args)
    cmd = args.command
    params = {
        "eta": args.eta,
        "delta": args.delta,
        "n": args.n,
        "n_min": args.n_min,
        "n_max": args.n_max,
    }
    warnings = []
    if not (0.5 < args.delta < 1.0 and 0.5 < args.eta < args.delta):
        warnings.append("parameters outside the definition regime (relaxed domain)")
    status = 0

    if cmd == "audit":
        results = audit_rows()
        params = {}
        flagged = [r["name"] for r in results if r["flagged"]]
        if flagged:
            warnings.append("deviation above 1e-2: " + ", ".join(flagged))
    elif cmd == "compute":
        ns = _dimensions(args)
        results = _map(compute_point, [(n, args.eta, args.delta) for n in ns], args.jobs)
    elif cmd == "bounds":
        ns = _dimensions(args)
        results = _map(bounds_point, [(n, args.eta, args.delta) for n in ns], args.jobs)
    elif cmd == "approx":
        params["c"] = args.c
        if not analysis.C_RANGE[0] <= args.c <= analysis.C_RANGE[1]:
            raise UsageError(f"--c must lie in [0.5, 4], got {args.c}")
        ns = _dimensions(args)
        check = not args.allow_relaxed_domain
        results = _map(approx_point, [(n, args.eta, args.delta, args.c, check) for n in ns],
                       args.jobs)
    elif cmd == "sweep":
        params["c"] = args.c
        ns = _dimensions(args)
        results = _map(sweep_point, [(n, args.eta, args.delta, args.c) for n in ns], args.jobs)
    elif cmd == "verify":
        params["tol"] = args.tol
        params["strict"] = args.strict
        ns = _dimensions(args, default_min=2)
        results, extra = verify_items(ns[0], ns[-1], args.eta, args.delta, args.tol, args.strict)
        warnings.extend(extra)
        if not all(r["passed"] for r in results):
            status = 2
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown command {cmd}")

    doc = {"command": cmd, "params": params, "results": results, "warnings": warnings}
    return status, doc


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return to_json(doc)
    if fmt == "csv":
        return to_csv(doc["results"])
    return to_plain(doc)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        status, doc = run(args)
    except (UsageError, RegimeError, ValueError) as exc:
        print(f"lllcount: error: {exc}", file=sys.stderr)
        return 1
    text = render(doc, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
