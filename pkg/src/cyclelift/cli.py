"""Command-line interface: scenario-file ingestion and deterministic
verification reports.

Scenario files are line oriented `key: value` text with keys vars, p, f,
fnext, order, deform_g, a and optional b_decomp; '#' starts a comment
and list values are separated by '|'.  Exit codes: 0 all checks pass,
1 a mathematical check failed, 2 input error.
"""

import argparse
import json
import re
import sys
from pathlib import Path

from .cycles import (
    OBSTRUCTED,
    UNOBSTRUCTED,
    UNSUPPORTED,
    CheckRecord,
    PipelineReport,
    Scenario,
    auxiliary_cycle,
    classify_obstruction,
    combined_cycle,
    eliminate_obstruction,
    higher_corrections,
    is_milnor_cycle,
    lift_report,
    lift_target_cycle,
    target_cycle,
    undeformed_target,
    verify_unobstructed,
)
from .errors import (
    CycleLiftError,
    MissingKeyError,
    ScenarioParseError,
)
from .groebner import IdealBasis, groebner_basis, ideal_member
from .poly import parse_fraction, parse_polynomial, _tokenize

SCENARIO_KEYS = ("vars", "p", "f", "fnext", "order", "deform_g", "a", "b_decomp")
REQUIRED_KEYS = ("vars", "p", "f", "fnext", "order", "deform_g", "a")
CLASS_NAMES = ("muY", "muZ", "C", "C-minus-muZ")


def _read_pairs(path):
    pairs = {}
    lines = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioParseError(f"cannot read scenario file: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ScenarioParseError("expected 'key: value'", line=lineno)
        key, value = line.split(":", 1)
        key = key.strip()
        if key not in SCENARIO_KEYS:
            raise ScenarioParseError(f"unknown key '{key}'", line=lineno, key=key)
        if key in pairs:
            raise ScenarioParseError(f"duplicate key '{key}'", line=lineno, key=key)
        pairs[key] = value.strip()
        lines[key] = lineno
    return pairs, lines


def _split_list(value: str):
    if value == "":
        return []
    return [piece.strip() for piece in value.split("|")]


def parse_scenario(path) -> Scenario:
    """Parse and validate a scenario file; diagnostics name line and key."""
    pairs, lines = _read_pairs(path)
    for key in REQUIRED_KEYS:
        if key not in pairs:
            raise MissingKeyError(f"missing key: {key}", key=key)

    def fail(key, message):
        raise ScenarioParseError(message, line=lines.get(key), key=key)

    variables = tuple(pairs["vars"].split())
    if not variables:
        fail("vars", "no variables declared")
    for name in variables:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            fail("vars", f"bad variable name '{name}'")
    if len(set(variables)) != len(variables):
        fail("vars", "duplicate variable name")
    try:
        p = int(pairs["p"])
        order = int(pairs["order"])
    except ValueError:
        key = "p" if not pairs["p"].lstrip("-").isdigit() else "order"
        fail(key, "expected an integer")

    def parse_poly(key, text):
        try:
            return parse_polynomial(text, variables)
        except CycleLiftError as exc:
            fail(key, f"cannot parse '{text}': {exc}")

    f = [parse_poly("f", piece) for piece in _split_list(pairs["f"])]
    if len(f) != p:
        fail("f", f"expected {p} polynomials, got {len(f)}")
    fnext = parse_poly("fnext", pairs["fnext"])
    try:
        g_num, g_den = parse_fraction(pairs["deform_g"], variables)
    except CycleLiftError as exc:
        fail("deform_g", f"cannot parse '{pairs['deform_g']}': {exc}")
    a = [parse_poly("a", piece) for piece in _split_list(pairs["a"])]
    b_decomp = None
    if "b_decomp" in pairs:
        b_decomp = [parse_poly("b_decomp", piece) for piece in _split_list(pairs["b_decomp"])]
    return Scenario(
        variables,
        f,
        fnext,
        order,
        deform_g=(g_num, g_den),
        a=a,
        b_decomp=b_decomp,
    )


def _scenario_echo(s: Scenario, path) -> dict:
    return {
        "path": str(path),
        "vars": list(s.variables),
        "p": s.p,
        "f": [str(poly) for poly in s.f],
        "fnext": str(s.fnext),
        "order": s.order,
        "deform_g": str(s.deform_g) if s.deform_g is not None else None,
        "a": [str(poly) for poly in s.a],
        "b_decomp": [str(poly) for poly in s.b_decomp] if s.b_decomp is not None else None,
    }


def _echo_lines(echo: dict):
    out = [f"scenario: {echo['path']}"]
    out.append("vars: " + " ".join(echo["vars"]))
    out.append(f"p: {echo['p']}")
    out.append("f: " + " | ".join(echo["f"]))
    out.append(f"fnext: {echo['fnext']}")
    out.append(f"order: {echo['order']}")
    out.append(f"deform_g: {echo['deform_g']}")
    out.append("a: " + (" | ".join(echo["a"]) if echo["a"] else "(none)"))
    if echo["b_decomp"] is not None:
        out.append("b_decomp: " + " | ".join(echo["b_decomp"]))
    return out


def _report_payload(report: PipelineReport, echo: dict) -> dict:
    return {
        "scenario": echo,
        "branch": report.branch,
        "detail": report.detail,
        "checks": [
            {"name": c.name, "passed": c.passed, "witness": c.witness}
            for c in report.checks
        ],
        "overall": report.passed,
    }


def _report_text(report: PipelineReport, echo: dict) -> str:
    out = _echo_lines(echo)
    out.append(f"branch: {report.branch}")
    out.append(f"detail: {report.detail}")
    for check in report.checks:
        out.append(f"check {check.name}: {'PASS' if check.passed else 'FAIL'}")
        out.append(f"  {check.witness}")
    out.append(f"overall: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(out)


def _run_pipeline(s: Scenario) -> PipelineReport:
    classification = classify_obstruction(s)
    if classification.status == UNOBSTRUCTED:
        return verify_unobstructed(s)
    if classification.status == OBSTRUCTED:
        return eliminate_obstruction(s)
    return PipelineReport(
        UNSUPPORTED,
        classification.detail,
        [CheckRecord("decomposition-available", False, classification.detail)],
    )


def _named_class(s: Scenario, name: str, order: int):
    if name == "muY":
        if order <= 0:
            return undeformed_target(s)
        if order == 1:
            element = target_cycle(s)
            return element.at_order(1) if element.order == 0 else element
        return lift_target_cycle(s, higher_corrections(s, order))
    if name == "muZ":
        return auxiliary_cycle(s).at_order(order)
    if name == "C":
        return combined_cycle(s, order)
    if name == "C-minus-muZ":
        return combined_cycle(s, order).sub(auxiliary_cycle(s).at_order(order))
    raise ValueError(f"unknown class {name}")


def _emit(payload: dict, text: str, as_json: bool):
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_verify(args) -> int:
    paths = []
    if args.all:
        directory = Path(args.scenario)
        if not directory.is_dir():
            print(f"error: {directory} is not a directory", file=sys.stderr)
            return 2
        paths = sorted(directory.glob("*.scn"))
        if not paths:
            print(f"error: no .scn files in {directory}", file=sys.stderr)
            return 2
    else:
        paths = [Path(args.scenario)]
    payloads = []
    texts = []
    worst = 0
    for path in paths:
        scenario = parse_scenario(path)
        report = _run_pipeline(scenario)
        echo = _scenario_echo(scenario, path)
        payloads.append(_report_payload(report, echo))
        texts.append(_report_text(report, echo))
        if not report.passed:
            worst = max(worst, 1)
    if args.json:
        print(json.dumps(payloads if args.all else payloads[0], indent=2))
    else:
        print("\n\n".join(texts))
    return worst


def _cmd_check_cycle(args) -> int:
    path = Path(args.scenario)
    scenario = parse_scenario(path)
    element = _named_class(scenario, args.cls, args.order)
    verdict = is_milnor_cycle(element, scenario)
    echo = _scenario_echo(scenario, path)
    payload = {
        "scenario": echo,
        "class": args.cls,
        "order": args.order,
        "is_cycle": verdict.is_cycle,
        "boundary": verdict.boundary_class.describe(),
        "witness": verdict.verdict.describe(),
    }
    text_lines = _echo_lines(echo) + [
        f"class: {args.cls}",
        f"class-order: {args.order}",
        f"is-cycle: {'yes' if verdict.is_cycle else 'no'}",
        f"boundary: {verdict.boundary_class.describe()}",
        f"witness: {verdict.verdict.describe()}",
    ]
    _emit(payload, "\n".join(text_lines), args.json)
    return 0 if verdict.is_cycle else 1


def _cmd_boundary(args) -> int:
    path = Path(args.scenario)
    scenario = parse_scenario(path)
    element = _named_class(scenario, args.cls, args.order)
    verdict = is_milnor_cycle(element, scenario)
    echo = _scenario_echo(scenario, path)
    payload = {
        "scenario": echo,
        "class": args.cls,
        "order": args.order,
        "boundary": verdict.boundary_class.describe(),
        "trivial": verdict.is_cycle,
        "witness": verdict.verdict.describe(),
    }
    text_lines = _echo_lines(echo) + [
        f"class: {args.cls}",
        f"class-order: {args.order}",
        f"boundary: {verdict.boundary_class.describe()}",
        f"trivial: {'yes' if verdict.is_cycle else 'no'}",
        f"witness: {verdict.verdict.describe()}",
    ]
    _emit(payload, "\n".join(text_lines), args.json)
    return 0


def _cmd_lift(args) -> int:
    path = Path(args.scenario)
    scenario = parse_scenario(path)
    report = lift_report(scenario, args.to)
    echo = _scenario_echo(scenario, path)
    _emit(_report_payload(report, echo), _report_text(report, echo), args.json)
    return 0 if report.passed else 1


def _infer_variables(texts):
    names = set()
    for text in texts:
        for kind, value, _ in _tokenize(text):
            if kind == "name":
                names.add(value)
    return tuple(sorted(names))


def _parse_ideal(args):
    texts = [piece.strip() for piece in args.ideal.split(",") if piece.strip()]
    if not texts:
        raise ScenarioParseError("empty ideal")
    if args.vars:
        variables = tuple(v for v in re.split(r"[,\s]+", args.vars) if v)
    else:
        variables = _infer_variables(texts)
    generators = [parse_polynomial(t, variables) for t in texts]
    return variables, IdealBasis(generators)


def _cmd_member(args) -> int:
    variables, ideal = _parse_ideal(args)
    u = parse_polynomial(args.polynomial, variables)
    member = ideal_member(u, ideal)
    payload = {
        "polynomial": str(u),
        "ideal": [str(g) for g in ideal.generators],
        "vars": list(variables),
        "member": member,
    }
    _emit(payload, f"member: {'true' if member else 'false'}", args.json)
    return 0 if member else 1


def _cmd_groebner(args) -> int:
    variables, ideal = _parse_ideal(args)
    basis = groebner_basis(ideal)
    payload = {
        "ideal": [str(g) for g in ideal.generators],
        "vars": list(variables),
        "basis": [str(g) for g in basis.groebner],
    }
    text = "groebner basis:\n" + "\n".join(f"  {g}" for g in basis.groebner)
    _emit(payload, text, args.json)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclelift",
        description="Verify deformations of algebraic cycles given by scenario files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the obstruction pipeline on a scenario")
    verify.add_argument("scenario", help="scenario file, or a directory with --all")
    verify.add_argument("--all", action="store_true", help="verify every .scn file in a directory")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=_cmd_verify)

    check = sub.add_parser("check-cycle", help="test a named class for cycle membership")
    check.add_argument("scenario")
    check.add_argument("--class", dest="cls", choices=CLASS_NAMES, required=True)
    check.add_argument("--order", type=int, default=1)
    check.add_argument("--json", action="store_true")
    check.set_defaults(func=_cmd_check_cycle)

    bound = sub.add_parser("boundary", help="print the boundary class of a named class")
    bound.add_argument("scenario")
    bound.add_argument("--class", dest="cls", choices=CLASS_NAMES, default="C")
    bound.add_argument("--order", type=int, default=1)
    bound.add_argument("--json", action="store_true")
    bound.set_defaults(func=_cmd_boundary)

    lift = sub.add_parser("lift", help="successive-lifting checks for the combined family")
    lift.add_argument("scenario")
    lift.add_argument("--to", type=int, required=True)
    lift.add_argument("--json", action="store_true")
    lift.set_defaults(func=_cmd_lift)

    member = sub.add_parser("member", help="ideal membership test")
    member.add_argument("polynomial")
    member.add_argument("--ideal", required=True, help="comma-separated generators")
    member.add_argument("--vars", help="comma- or space-separated variable names")
    member.add_argument("--json", action="store_true")
    member.set_defaults(func=_cmd_member)

    groeb = sub.add_parser("groebner", help="print a reduced basis")
    groeb.add_argument("--ideal", required=True, help="comma-separated generators")
    groeb.add_argument("--vars", help="comma- or space-separated variable names")
    groeb.add_argument("--json", action="store_true")
    groeb.set_defaults(func=_cmd_groebner)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except CycleLiftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
