"""Command-line front end.

Subcommands: closure, cclosure, check, compat, extend, oracle.  Relations
load from JSON ({"universe": [...], "tnorm": ..., "matrix": [[...]]}) or
CSV (label row, then matrix rows); the suffix picks the parser.  Exit
codes: 0 success or verdict true, 1 verdict false or counterexample
found, 2 usage or input error.

The t-norm is resolved per invocation: an explicit --tnorm wins, then a
"tnorm" field embedded in the input file(s), then godel.  Two input files
carrying different embedded t-norms without a flag is an error.
"""

import argparse
import json
import random
import sys
from pathlib import Path

from .closure import ClosureVariant, consistent_closure, transitive_closure
from .extension import (
    RelationClass,
    is_compatible_extension_asym,
    is_star_compatible_extension,
    is_star_consistent,
    star_compatibility_violations,
    totalize,
)
from .oracle import (
    GridSpec,
    verify_adjunction_grid,
    verify_consistency_equivalence,
    verify_crisp_duggan_intersection,
    verify_least_consistent_closure,
)
from .relation import from_csv_text, from_json_dict
from .tnorms import TNorm

__all__ = ["main", "entrypoint"]


class CliError(Exception):
    """Input or configuration problem; maps to exit code 2."""


def _load_relation(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from None
    if str(path).lower().endswith(".csv"):
        return from_csv_text(text), None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path} is not valid JSON: {exc}") from None
    return from_json_dict(doc)


def _resolve_tnorm(flag, *embedded):
    if flag is not None:
        return TNorm.coerce(flag)
    seen = {t for t in embedded if t is not None}
    if len(seen) > 1:
        raise CliError("input files disagree on the t-norm; pass --tnorm explicitly")
    if seen:
        return seen.pop()
    return TNorm.GODEL


def _fmt_degree(value):
    text = repr(float(value))
    return text[:-2] if text.endswith(".0") else text


def _relation_table(rel):
    labels = list(rel.universe.labels)
    cells = [[_fmt_degree(v) for v in row] for row in rel.matrix]
    # column widths: label vs every cell in that column
    widths = [
        max(len(labels[j]), max(len(cells[i][j]) for i in range(len(labels))))
        for j in range(len(labels))
    ]
    stub = max(len(x) for x in labels)
    lines = [
        " ".join([" " * stub] + [labels[j].rjust(widths[j]) for j in range(len(labels))])
    ]
    for i, row_label in enumerate(labels):
        lines.append(
            " ".join(
                [row_label.ljust(stub)]
                + [cells[i][j].rjust(widths[j]) for j in range(len(labels))]
            )
        )
    return "\n".join(lines)


def _emit_relation(rel, tnorm, fmt):
    if fmt == "json":
        print(json.dumps(rel.to_json_dict(tnorm=tnorm)))
    else:
        print(_relation_table(rel))


def _emit_verdict(payload, fmt):
    if fmt == "json":
        print(json.dumps(payload))
    else:
        for key, value in payload.items():
            if isinstance(value, bool):
                value = "true" if value else "false"
            print(f"{key}: {value}")
    return 0 if payload["verdict"] else 1


def _cmd_closure(args):
    rel, embedded = _load_relation(args.relation)
    t = _resolve_tnorm(args.tnorm, embedded)
    _emit_relation(transitive_closure(rel, t), t, args.format)
    return 0


def _cmd_cclosure(args):
    rel, embedded = _load_relation(args.relation)
    t = _resolve_tnorm(args.tnorm, embedded)
    variant = ClosureVariant.coerce(args.variant)
    _emit_relation(consistent_closure(rel, t, variant), t, args.format)
    return 0


_CHECKS = {
    "reflexive": lambda rel, t: rel.is_reflexive(),
    "irreflexive": lambda rel, t: rel.is_irreflexive(),
    "transitive": lambda rel, t: rel.is_transitive(t),
    "total": lambda rel, t: rel.is_total(),
    "strongly-total": lambda rel, t: rel.is_strongly_total(),
    "consistent": is_star_consistent,
}


def _cmd_check(args):
    rel, embedded = _load_relation(args.relation)
    t = _resolve_tnorm(args.tnorm, embedded)
    verdict = bool(_CHECKS[args.property](rel, t))
    return _emit_verdict(
        {"property": args.property, "tnorm": str(t), "verdict": verdict}, args.format
    )


def _cmd_compat(args):
    rel, embedded_r = _load_relation(args.relation)
    ext, embedded_q = _load_relation(args.extension)
    t = _resolve_tnorm(args.tnorm, embedded_r, embedded_q)
    payload = {"sense": args.sense, "tnorm": str(t)}
    violations = []
    if args.sense == "star":
        payload["verdict"] = is_star_compatible_extension(rel, ext, t)
        payload["extension"] = rel.issubset(ext)
        violations = star_compatibility_violations(rel, ext, t)
        payload["violations"] = [
            {"y": y, "x": x, "value": value, "bound": bound}
            for y, x, value, bound in violations
        ]
    else:
        payload["verdict"] = is_compatible_extension_asym(rel, ext, t)
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(f"sense: {payload['sense']}")
        print(f"tnorm: {payload['tnorm']}")
        print(f"verdict: {'true' if payload['verdict'] else 'false'}")
        if args.sense == "star" and not payload["extension"]:
            print("not an extension: some degree of the first relation drops")
        for y, x, value, bound in violations:
            print(
                f"Q({y},{x}) = {_fmt_degree(value)} > {_fmt_degree(bound)}"
                f" = R({x},{y}) -> R({y},{x})"
            )
    return 0 if payload["verdict"] else 1


def _cmd_extend(args):
    rel, embedded = _load_relation(args.relation)
    t = _resolve_tnorm(args.tnorm, embedded)
    rng = random.Random(args.seed) if args.seed is not None else None
    report = totalize(rel, t, RelationClass.coerce(args.relation_class), rng=rng)
    if args.format == "json":
        print(json.dumps(report.to_json_dict(tnorm=t)))
    else:
        print(_relation_table(report.result))
        arcs = ", ".join(f"({x},{y})" for x, y in report.inserted_arcs) or "none"
        print(f"inserted arcs: {arcs}")
        print(f"iterations: {report.iterations}")
        for name in (
            "verified_total",
            "verified_transitive",
            "verified_star_compatible",
            "verified_class_member",
            "converged",
        ):
            print(f"{name}: {'true' if getattr(report, name) else 'false'}")
    return 0 if report.all_verified else 1


def _parse_values(text):
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise CliError(f"--values must be a comma-separated list of degrees, got {text!r}") from None


def _cmd_oracle(args):
    t = _resolve_tnorm(args.tnorm)
    if args.property == "least-closure":
        report = verify_least_consistent_closure(
            GridSpec(universe_size=args.size, values=_parse_values(args.values))
        )
    elif args.property == "duggan-crisp":
        report = verify_crisp_duggan_intersection(
            RelationClass.coerce(args.relation_class)
        )
    elif args.property == "consistency-equiv":
        report = verify_consistency_equivalence(
            GridSpec(universe_size=args.size, values=_parse_values(args.values)), t
        )
    else:
        report = verify_adjunction_grid(t, step=args.step)
    if args.format == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        print(f"property: {report.property}")
        print(f"tnorm: {report.tnorm}")
        print(f"grid: {report.grid}")
        print(f"instances checked: {report.instances_checked}")
        print(f"violations: {report.violations}")
        if report.first_counterexample is not None:
            print(f"first counterexample: {json.dumps(report.first_counterexample)}")
    return 0 if report.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fuzzrel",
        description="Compute with fuzzy preference relations: closures,"
        " compatibility, totalization, and brute-force verification sweeps.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--tnorm",
        choices=[t.value for t in TNorm],
        default=None,
        help="t-norm (default: the input file's tnorm field, else godel)",
    )
    common.add_argument(
        "--format", choices=["table", "json"], default="table", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("closure", parents=[common], help="*-transitive closure")
    p.add_argument("relation", help="relation file (.json or .csv)")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("cclosure", parents=[common], help="consistent closure")
    p.add_argument("--variant", choices=[v.value for v in ClosureVariant], default="delta")
    p.add_argument("relation")
    p.set_defaults(func=_cmd_cclosure)

    p = sub.add_parser("check", parents=[common], help="test a structural property")
    p.add_argument("--property", choices=sorted(_CHECKS), required=True)
    p.add_argument("relation")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("compat", parents=[common], help="compatible-extension test")
    p.add_argument("--sense", choices=["star", "asym"], default="star")
    p.add_argument("relation")
    p.add_argument("extension")
    p.set_defaults(func=_cmd_compat)

    p = sub.add_parser("extend", parents=[common], help="totalize a transitive relation")
    p.add_argument(
        "--class",
        dest="relation_class",
        choices=[c.value for c in RelationClass],
        default="any",
    )
    p.add_argument("--seed", type=int, default=None, help="randomize the arc pick order")
    p.add_argument("relation")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("oracle", parents=[common], help="run a brute-force sweep")
    p.add_argument(
        "--property",
        choices=["least-closure", "duggan-crisp", "consistency-equiv", "adjunction"],
        required=True,
    )
    p.add_argument("--size", type=int, default=2, help="universe size for grid sweeps")
    p.add_argument("--values", default="0,0.5,1", help="comma-separated grid degrees")
    p.add_argument("--step", type=float, default=0.25, help="grid step for adjunction")
    p.add_argument(
        "--class",
        dest="relation_class",
        choices=[c.value for c in RelationClass],
        default="r3",
        help="relation class for duggan-crisp",
    )
    p.set_defaults(func=_cmd_oracle)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint():
    raise SystemExit(main())
