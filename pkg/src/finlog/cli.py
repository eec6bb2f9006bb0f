"""Command-line front end.

Every invocation prints a machine-readable ``verdict:`` line (or, with
--json, a single JSON object with keys verdict/detail/witnesses). Exit
codes: 0 for positive verdicts, 1 for negative ones (not a tautology,
proof rejected, counterexample found), 2 for I/O or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import zfc
from .hfset import hf_from_index, parse_hf, print_hf
from .proof import (
    Axiom,
    InSigma,
    ModusPonens,
    check_proof,
    parse_proof_file,
    soundness_check,
)
from .semantics import (
    CapacityError,
    eval_formula,
    falsifying_assignment,
    format_assignment,
    parse_assignment,
    search_counterexample,
)
from .syntax import ParseError, parse_sugar, print_strict


class _Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.body: list[str] = []
        self.witnesses: list[str] = []

    def say(self, line: str) -> None:
        self.body.append(line)

    def witness(self, line: str) -> None:
        self.witnesses.append(line)

    def finish(self, verdict: str, detail: str = "") -> None:
        if self.as_json:
            print(json.dumps({"verdict": verdict, "detail": detail, "witnesses": self.witnesses}))
        else:
            for line in self.body:
                print(line)
            for line in self.witnesses:
                print(line)
            print(f"verdict: {verdict}")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="finlog", description="finitistic first-order logic kernel")
    top.add_argument("--json", action="store_true", help="emit one JSON object instead of text")
    top.add_argument("--sugar", action="store_true", help="fold naturals and pairs when printing sets")
    # the same flags are accepted after the subcommand; SUPPRESS keeps a
    # flag given before the subcommand from being reset to the default
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--sugar", action="store_true", default=argparse.SUPPRESS)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="echo formulas in canonical strict form")
    p.add_argument("file", help="formula file, one per line, or - for stdin")

    p = sub.add_parser("eval", parents=[common], help="evaluate a formula in a finite model")
    p.add_argument("--model", required=True, help="HF literal, e.g. '{{},{{}}}'")
    p.add_argument("--assign", default="", help="assignment literal, e.g. 'x1:={}; x2:={{}}'")
    p.add_argument("formula")

    p = sub.add_parser("taut", parents=[common], help="truth-table tautology test")
    p.add_argument("formula")

    p = sub.add_parser("axiom", parents=[common], help="logical axiom schema test")
    p.add_argument("formula")

    p = sub.add_parser("check", parents=[common], help="check a proof file")
    p.add_argument("file")

    p = sub.add_parser(
        "sound", parents=[common], help="check a proof, then verify it over enumerated models"
    )
    p.add_argument("file")
    p.add_argument("--max-index", type=int, default=64)

    p = sub.add_parser(
        "refute", parents=[common], help="search enumerated models for a counterexample"
    )
    p.add_argument("formula")
    p.add_argument("--max-index", type=int, default=64)

    p = sub.add_parser("models", parents=[common], help="list the enumerated models")
    p.add_argument("--max-index", type=int, default=64)

    sub.add_parser("corpus", parents=[common], help="list the shipped set-theory sentences")
    return top


def _describe(justification) -> str:
    if isinstance(justification, InSigma):
        return "in sigma"
    if isinstance(justification, Axiom):
        return f"axiom {justification.schema}"
    if isinstance(justification, ModusPonens):
        return f"MP({justification.minor},{justification.major})"
    return "unjustified"


def _cmd_parse(args, out: _Output) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            phi = parse_sugar(stripped)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}", exc.pos, exc.expected) from None
        out.say(print_strict(phi))
        n += 1
    out.finish(f"parsed {n}")
    return 0


def _cmd_eval(args, out: _Output) -> int:
    model = parse_hf(args.model)
    sigma = parse_assignment(args.assign)
    phi = parse_sugar(args.formula)
    value = eval_formula(model, phi, sigma)
    out.say(f"model: {print_hf(model, args.sugar)}")
    out.say(f"formula: {print_strict(phi)}")
    out.finish(f"value {value}")
    return 0 if value == 1 else 1


def _cmd_taut(args, out: _Output) -> int:
    phi = parse_sugar(args.formula)
    v = falsifying_assignment(phi)
    if v is None:
        out.finish("tautology")
        return 0
    for basic, bit in sorted(v.items(), key=lambda kv: print_strict(kv[0])):
        out.witness(f"{print_strict(basic)} := {bit}")
    out.finish("not-a-tautology", detail="a falsifying truth assignment is listed")
    return 1


def _cmd_axiom(args, out: _Output) -> int:
    from .proof import is_logical_axiom

    phi = parse_sugar(args.formula)
    schema = is_logical_axiom(phi)
    if schema is None:
        out.finish("not-an-axiom")
        return 1
    out.finish(f"axiom {schema}")
    return 0


def _cmd_check(args, out: _Output) -> int:
    ps = parse_proof_file(args.file)
    report = check_proof(ps)
    if report.reason:
        out.say(report.reason)
    for line in report.lines:
        tag = _describe(line.justification) if line.justification else f"FAIL: {line.reason}"
        out.say(f"line {line.number}: {print_strict(line.formula)}  [{tag}]")
    if report.accepted:
        out.finish("accepted", detail=f"proves {print_strict(report.conclusion)}")
        return 0
    bad = next((l.number for l in report.lines if l.justification is None), 0)
    out.finish(f"rejected {bad}", detail=report.reason or f"line {bad} is unjustified")
    return 1


def _cmd_sound(args, out: _Output) -> int:
    ps = parse_proof_file(args.file)
    report = check_proof(ps)
    if not report.accepted:
        bad = next((l.number for l in report.lines if l.justification is None), 0)
        out.finish(f"rejected {bad}", detail=report.reason or f"line {bad} is unjustified")
        return 1
    sound = soundness_check(ps, args.max_index)
    out.say(f"conclusion: {print_strict(sound.conclusion)}")
    out.say(f"models examined: {sound.models_examined}")
    out.say(f"models of the theory: {len(sound.sigma_models)}")
    if sound.violations:
        for i in sound.violations:
            out.witness(f"{i} {print_hf(hf_from_index(i), args.sugar)}")
        out.finish(
            f"soundness-violation {len(sound.violations)}",
            detail="conclusion failed in a model of the theory; this is a kernel bug",
        )
        return 1
    out.finish(f"sound-up-to {args.max_index}")
    return 0


def _cmd_refute(args, out: _Output) -> int:
    phi = parse_sugar(args.formula)
    found = search_counterexample(phi, args.max_index)
    if found is None:
        out.finish(f"no-counterexample-up-to {args.max_index}")
        return 0
    out.witness(print_hf(found.model, args.sugar))
    out.witness(format_assignment(found.assignment, args.sugar))
    out.finish("counterexample", detail="model literal then assignment literal")
    return 1


def _cmd_models(args, out: _Output) -> int:
    for i in range(1, args.max_index + 1):
        out.say(f"{i} {print_hf(hf_from_index(i), args.sugar)}")
    out.finish(f"models {args.max_index}")
    return 0


def _cmd_corpus(args, out: _Output) -> int:
    sentences = zfc.corpus()
    for ns in sentences:
        out.say(f"{ns.name}: {print_strict(ns.sentence)}")
    out.finish(f"corpus {len(sentences)}")
    return 0


_COMMANDS = {
    "parse": _cmd_parse,
    "eval": _cmd_eval,
    "taut": _cmd_taut,
    "axiom": _cmd_axiom,
    "check": _cmd_check,
    "sound": _cmd_sound,
    "refute": _cmd_refute,
    "models": _cmd_models,
    "corpus": _cmd_corpus,
}


def run(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Output(args.json)
    try:
        return _COMMANDS[args.command](args, out)
    except (ParseError, CapacityError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        _Output(args.json).finish("error", detail=str(exc))
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
