"""Command-line front end.

Exit codes: 0 success, 1 domain error (stable E_* codes), 2 usage error.
`--json` (or WPS_JSON=1) switches to a structured envelope validating
against docs/cli-schema.json.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .curves import (
    PlaneCurve,
    branch_census,
    branching_index,
    genus,
    integrality_sweep,
    sufficiently_general,
    vertex_membership,
)
from .errors import ParseError, Unsupported, WPSError
from .exactmath import QQ, PrimeField
from .geometry import WPoint, eq_geometric, eq_rational
from .hilbert import (
    EllSequence,
    HilbertSeries,
    ci_relation_degrees,
    embedding_report,
    numerator_from_sequence,
)
from .parser import parse_point_coords, parse_polynomial, parse_upolynomial
from .truncation import regraded_degrees, straighten_chain, veronese_generators
from .weights import parse_weight, well_form
from .wpoly import (
    monomial_string,
    power_substitute,
    variable_names,
    weighted_degree,
)
from math import gcd

_DEFAULT_TABLE_ROWS = [(1, (1, 2, 3)), (2, (1, 1, 2)), (3, (1, 1, 1)), (4, (1, 1, 1, 1))]


def _weight_arg(text: str):
    try:
        return parse_weight(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _override_arg(text: str) -> tuple[int, int]:
    try:
        n, v = text.split("=", 1)
        return int(n), int(v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n=value, got {text!r}")


def _row_arg(text: str):
    try:
        k, weights = text.split("=", 1)
        return int(k), parse_weight(weights, min_len=1)
    except (ValueError, ParseError):
        raise argparse.ArgumentTypeError(f"expected k=weights, got {text!r}")


def _fmt_weight(a) -> str:
    return "(" + ",".join(str(x) for x in a) + ")"


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


# === handlers: each returns (ok, text lines, json data) ===


def cmd_wellform(args, parser):
    result, trace = well_form(args.weights, prime_steps=args.prime_steps)
    lines = [_fmt_weight(result)]
    for n, step in enumerate(trace, start=1):
        spared = "" if step.spared is None else f" spared={step.spared}"
        lines.append(
            f"step {n}: case {step.case} d={step.d}{spared} "
            f"{_fmt_weight(step.before)} -> {_fmt_weight(step.after)}"
        )
    if trace.is_empty():
        lines.append("already well-formed")
    data = {
        "input": list(args.weights),
        "result": list(result),
        "already_well_formed": trace.is_empty(),
        "steps": trace.as_dict(),
    }
    return True, lines, data


def cmd_genus(args, parser):
    if args.sweep:
        if args.weights or args.degree is not None:
            parser.error("--sweep does not take --weights/--degree")
        report = integrality_sweep(args.max_entry, args.max_degree)
        lines = [f"checked={report['checked']} failures={len(report['failures'])}"]
        for row in report["failures"]:
            lines.append(
                f"d={row['d']} weights={_fmt_weight(row['weights'])}: {row['problem']}"
            )
        return not report["failures"], lines, report
    if args.weights is None or args.degree is None:
        parser.error("genus needs --weights and --degree (or --sweep)")
    g = genus(args.degree, args.weights)
    b = branching_index(args.degree, args.weights)
    data = {"weights": list(args.weights), "d": args.degree, "genus": g, "b": b}
    return True, [f"genus={g} b={b}"], data


def cmd_check(args, parser):
    f = parse_polynomial(args.poly, args.weights)
    curve = PlaneCurve(f)
    general, violations = sufficiently_general(curve)
    lines = [
        f"degree: {curve.degree}",
        f"weights: {_fmt_weight(curve.weight)}",
        f"sufficiently general: {_yn(general)}",
    ]
    lines.extend(f"  {v}" for v in violations)
    data = {
        "poly": f.to_string(),
        "weights": list(curve.weight),
        "degree": curve.degree,
        "sufficiently_general": general,
        "violations": violations,
        "vertices": None,
    }
    if general:
        verts = vertex_membership(curve)
        lines.append(
            "vertices on curve: "
            + " ".join(f"p{i}={_yn(v)}" for i, v in enumerate(verts))
        )
        data["vertices"] = list(verts)
        if args.census:
            census = branch_census(curve)
            data["census"] = census
            lines.append("census:")
            for row in census["edges"]:
                lines.append(
                    f"  edge {row['i']}: count={row['count']} "
                    f"predicted={row['predicted']} agree={_yn(row['agree'])} "
                    f"squarefree={_yn(row['squarefree'])}"
                )
    elif args.census:
        lines.append("census: skipped (not sufficiently general)")
    return True, lines, data


def cmd_cover(args, parser):
    f = parse_polynomial(args.poly, args.weights)
    cover = power_substitute(f)
    d = weighted_degree(cover)
    lines = [cover.to_string(), f"degree: {d}"]
    data = {
        "poly": f.to_string(),
        "weights": list(args.weights),
        "cover": cover.to_string(),
        "degree": d,
    }
    return True, lines, data


def cmd_truncate(args, parser):
    a, d = args.weights, args.d
    gens = veronese_generators(a, d, args.bound)
    names = variable_names(len(a))
    gen_strs = [monomial_string(g, names) for g in gens]
    regraded = regraded_degrees(gens, a, d)
    lines = [
        f"generators: {', '.join(gen_strs)}",
        f"regraded weights: {_fmt_weight(regraded)}",
    ]
    data = {
        "weights": list(a),
        "d": d,
        "generators": gen_strs,
        "regraded_weights": regraded,
    }
    if args.poly is not None:
        f = parse_polynomial(args.poly, a)
        deg = weighted_degree(f)
        k = d // gcd(deg, d)
        data["poly_degree"] = deg
        data["min_power"] = k
        data["power_degree"] = deg * k
        data["power_regraded_degree"] = deg * k // d
        if k == 1:
            lines.append(f"poly degree {deg}: in the truncation (regraded degree {deg // d})")
        else:
            lines.append(
                f"poly degree {deg}: f^{k} lands in the truncation "
                f"(degree {deg * k}, regraded {deg * k // d})"
            )
    return True, lines, data


def cmd_straighten(args, parser):
    f = parse_polynomial(args.poly, args.weights)
    pres, trace = straighten_chain(f, args.weights, prime_steps=args.prime_steps)
    lines = []
    for n, step in enumerate(trace, start=1):
        spared = "" if step.spared is None else f" spared={step.spared}"
        lines.append(
            f"step {n}: case {step.case} d={step.d}{spared} "
            f"{_fmt_weight(step.before)} -> {_fmt_weight(step.after)} [{step.ideal_note}]"
        )
    new_names = variable_names(len(pres.weight))
    lines.append(f"final weight: {_fmt_weight(pres.weight)}")
    lines.append(
        "generators: "
        + ", ".join(f"{n} -> {g}" for n, g in zip(new_names, pres.generator_names))
    )
    for rel, deg in zip(pres.relations, pres.relation_degrees):
        lines.append(f"relation: {rel.to_string()} (degree {deg})")
    data = {
        "input": f.to_string(),
        "weights": list(args.weights),
        "steps": trace.as_dict(),
        "presentation": pres.as_dict(),
    }
    return True, lines, data


def cmd_hilbert_expand(args, parser):
    num = parse_upolynomial(args.numerator)
    series = HilbertSeries(num, args.weights)
    coeffs = series.expand(args.n)
    data = {
        "series": series.to_string(),
        "n": args.n,
        "coefficients": coeffs,
    }
    return True, [" ".join(str(c) for c in coeffs)], data


def cmd_hilbert_numerator(args, parser):
    e = EllSequence(args.genus, args.deg, dict(args.override or []))
    bound = args.n if args.n is not None else 2 * sum(args.weights)
    num = numerator_from_sequence(e, args.weights, bound)
    lines = [num.to_string("t")]
    degrees = ci_relation_degrees(num)
    if degrees is not None:
        lines.append(f"relation degrees: {','.join(str(d) for d in degrees)}")
    data = {
        "weights": list(args.weights),
        "genus": args.genus,
        "deg": args.deg,
        "numerator": num.to_string("t"),
        "relation_degrees": degrees,
    }
    return True, lines, data


def cmd_hilbert_table(args, parser):
    e = EllSequence(args.genus, args.deg, dict(args.override or []))
    rows = args.row or _DEFAULT_TABLE_ROWS
    report = embedding_report(e, rows, max_degree=args.n)
    lines = []
    out_rows = []
    for row in report:
        degrees = row["relation_degrees"]
        shown = "-" if degrees is None else ",".join(str(d) for d in degrees)
        lines.append(
            f"k={row['k']} weights={_fmt_weight(row['weights'])} "
            f"numerator={row['numerator'].to_string('t')} relations={shown}"
        )
        out_rows.append(
            {
                "k": row["k"],
                "weights": list(row["weights"]),
                "numerator": row["numerator"].to_string("t"),
                "relation_degrees": degrees,
            }
        )
    data = {"genus": args.genus, "deg": args.deg, "rows": out_rows}
    return True, lines, data


def cmd_eq(args, parser):
    field = QQ if args.field.lower() == "q" else PrimeField(int(args.field))
    a = args.weights
    p1 = WPoint(a, parse_point_coords(args.pt1, field, len(a)), field)
    p2 = WPoint(a, parse_point_coords(args.pt2, field, len(a)), field)
    geo = eq_geometric(p1, p2)
    try:
        scaling = eq_rational(p1, p2)
        scaling_text = _yn(scaling)
    except Unsupported:
        scaling = None
        scaling_text = "undecided (no weight-1 anchor)"
    lines = [
        f"equal: {_yn(geo)}",
        f"geometric: {_yn(geo)}",
        f"scaling: {scaling_text}",
    ]
    data = {
        "weights": list(a),
        "field": repr(field),
        "pt1": repr(p1),
        "pt2": repr(p2),
        "equal": geo,
        "geometric": geo,
        "scaling": scaling,
    }
    return True, lines, data


def cmd_oracle_run(args, parser):
    from .oracle import run_manifest

    with open(args.manifest, encoding="utf-8") as fh:
        text = fh.read()
    report = run_manifest(text)
    lines = []
    for row in report["jobs"]:
        status = "ok" if row["ok"] else "FAIL"
        lines.append(
            f"{status:4} {row['verify']} weights={_fmt_weight(row['weights'])} "
            f"p={row['p']}: {row['summary']}"
        )
    passed = sum(1 for row in report["jobs"] if row["ok"])
    lines.append(f"{passed}/{len(report['jobs'])} checks passed")
    return report["ok"], lines, report


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")

    parser = argparse.ArgumentParser(
        prog="wps", description="weighted projective space toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wellform", parents=[common], help="reduce a weight to well-formed")
    p.add_argument("weights", type=_weight_arg)
    p.add_argument("--prime-steps", action="store_true", help="one prime divisor per step")
    p.set_defaults(func=cmd_wellform, cmdname="wellform")

    p = sub.add_parser("genus", parents=[common], help="degree-genus formula")
    p.add_argument("--weights", type=_weight_arg)
    p.add_argument("--degree", type=int)
    p.add_argument("--sweep", action="store_true", help="integrality sweep")
    p.add_argument("--max-entry", type=int, default=9)
    p.add_argument("--max-degree", type=int, default=60)
    p.set_defaults(func=cmd_genus, cmdname="genus")

    p = sub.add_parser("check", parents=[common], help="curve genericity diagnostics")
    p.add_argument("--weights", type=_weight_arg, required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--census", action="store_true", help="edge root-count census")
    p.set_defaults(func=cmd_check, cmdname="check")

    p = sub.add_parser("cover", parents=[common], help="straight cover via x_i -> y_i^{a_i}")
    p.add_argument("--weights", type=_weight_arg, required=True)
    p.add_argument("--poly", required=True)
    p.set_defaults(func=cmd_cover, cmdname="cover")

    p = sub.add_parser("truncate", parents=[common], help="Veronese truncation generators")
    p.add_argument("--weights", type=_weight_arg, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--poly")
    p.add_argument("--bound", type=int, help="generator search degree bound")
    p.set_defaults(func=cmd_truncate, cmdname="truncate")

    p = sub.add_parser("straighten", parents=[common], help="carry an ideal through well-forming")
    p.add_argument("--weights", type=_weight_arg, required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--prime-steps", action="store_true")
    p.set_defaults(func=cmd_straighten, cmdname="straighten")

    p = sub.add_parser("hilbert", help="Hilbert series tools")
    hsub = p.add_subparsers(dest="hilbert_command", required=True)

    q = hsub.add_parser("expand", parents=[common], help="series coefficients")
    q.add_argument("--weights", type=_weight_arg, required=True)
    q.add_argument("--numerator", default="1")
    q.add_argument("-N", dest="n", type=int, required=True, help="last degree")
    q.set_defaults(func=cmd_hilbert_expand, cmdname="hilbert expand")

    q = hsub.add_parser("numerator", parents=[common], help="recover N(t) from ell values")
    q.add_argument("--weights", type=_weight_arg, required=True)
    q.add_argument("--genus", type=int, required=True)
    q.add_argument("--deg", type=int, required=True, help="divisor degree")
    q.add_argument("--override", type=_override_arg, action="append", metavar="n=v")
    q.add_argument("-N", dest="n", type=int, help="max numerator degree")
    q.set_defaults(func=cmd_hilbert_numerator, cmdname="hilbert numerator")

    q = hsub.add_parser("table", parents=[common], help="per-embedding numerators")
    q.add_argument("--genus", type=int, default=1)
    q.add_argument("--deg", type=int, default=1)
    q.add_argument("--override", type=_override_arg, action="append", metavar="n=v")
    q.add_argument("--row", type=_row_arg, action="append", metavar="k=weights")
    q.add_argument("-N", dest="n", type=int, help="max numerator degree")
    q.set_defaults(func=cmd_hilbert_table, cmdname="hilbert table")

    p = sub.add_parser("eq", parents=[common], help="point equality tests")
    p.add_argument("--weights", type=_weight_arg, required=True)
    p.add_argument("--field", required=True, help="q for rationals, or a prime")
    p.add_argument("pt1")
    p.add_argument("pt2")
    p.set_defaults(func=cmd_eq, cmdname="eq")

    p = sub.add_parser("oracle", help="finite-field verification")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("run", parents=[common], help="run a manifest of checks")
    q.add_argument("--manifest", required=True)
    q.set_defaults(func=cmd_oracle_run, cmdname="oracle run")

    return parser


def _emit(json_mode: bool, command: str, ok: bool, lines: list[str], data: dict) -> None:
    if json_mode:
        print(json.dumps({"command": command, "ok": ok, "data": data}))
    else:
        for line in lines:
            print(line)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    json_mode = args.json or os.environ.get("WPS_JSON") == "1"
    command = getattr(args, "cmdname", getattr(args, "command", "?"))
    try:
        ok, lines, data = args.func(args, parser)
    except WPSError as exc:
        payload = {"command": command, "ok": False, "error": {"code": exc.code, "message": str(exc)}}
        if json_mode:
            print(json.dumps(payload))
        else:
            print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        payload = {"command": command, "ok": False, "error": {"code": "E_VALUE", "message": str(exc)}}
        if json_mode:
            print(json.dumps(payload))
        else:
            print(f"error[E_VALUE]: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        payload = {"command": command, "ok": False, "error": {"code": "E_IO", "message": str(exc)}}
        if json_mode:
            print(json.dumps(payload))
        else:
            print(f"error[E_IO]: {exc}", file=sys.stderr)
        return 1
    _emit(json_mode, command, ok, lines, data)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
