"""
Командная строка: схемы, арифметика элементов, генераторы, корневые
последовательности и запуск проверочных наборов.

Коды возврата: 0 успех, 1 проверка не пройдена, 2 ошибка ввода.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, List, Optional, Sequence

from pydantic import ValidationError

from src.algebra.borel import get_quotient
from src.algebra.calculus import D, VARIANTS as DERIVATIVES, derive
from src.algebra.freealg import NEGATIVE, POSITIVE, Element, antipode, bracket, coproduct, format_element, multiply
from src.algebra.generators import MU, SIGMA, coefficient_table, phi, u_bracket
from src.algebra.params import ParamSpec, make_spec
from src.cli.shorthand import parse_element
from src.combinatorics.roots import count_root_sequences, count_subalgebra_pairs, enumerate_root_sequences
from src.combinatorics.schemes import (
    BLACK,
    FLAT,
    STYLES,
    VARIANTS,
    WHITE,
    Scheme,
    SchemePair,
    bale_check,
    complement_dual,
    regular_sets,
    render,
    sigma_generators,
    star,
)
from src.config.app_config import settings
from src.config.logging_config import setup_logging
from src.exceptions import BaseError
from src.exceptions.cli_exceptions import InputFormatError
from src.schemas.algebra_schemas import ParamSpecModel, element_to_json, tensor_to_json
from src.schemas.scheme_schemas import PairVerdictModel, SchemeModel
from src.utils.string_utils import format_fraction, parse_fraction, parse_int_list
from src.verify.runner import ALL, RunOptions, report_summary, run_suites

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

ANY = "any"


@dataclass
class CommandResult:
    """Результат команды: данные для --json, текст для консоли и код возврата."""

    data: Any
    text: str
    code: int = EXIT_PASS


#region Разбор аргументов
def _load_json_argument(text: str) -> Any:
    """JSON из строки или из файла '@path'."""
    if text.startswith('@'):
        path = Path(text[1:])
        if not path.is_file():
            raise InputFormatError(f"file {path} not found")
        text = path.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON: {exc}") from exc


def build_spec(args: argparse.Namespace) -> ParamSpec:
    if args.params:
        try:
            return ParamSpecModel.model_validate(_load_json_argument(args.params)).to_spec()
        except ValidationError as exc:
            raise InputFormatError(f"malformed parameters: {exc}") from exc
    try:
        q = parse_fraction(args.q)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc
    return make_spec(args.n, q, seed=args.seed)


def _int_list(text: str) -> List[int]:
    try:
        return parse_int_list(text)
    except ValueError as exc:
        raise InputFormatError(f"expected a comma separated list of integers, got {text!r}") from exc


def parse_scheme_triple(text: str, n: int, sign: str = POSITIVE) -> Scheme:
    """'k,m,S' -> схема; '1,2,' и '1,2' задают пустое S."""
    parts = text.split(",", 2)
    if len(parts) < 2:
        raise InputFormatError(f"expected k,m[,S], got {text!r}")
    k, m = _int_list(",".join(parts[:2]))
    return Scheme(n, k, m, frozenset(_int_list(parts[2] if len(parts) > 2 else "")), sign)


def _scheme_from_flags(args: argparse.Namespace, n: int, sign: str = POSITIVE) -> Scheme:
    return Scheme(n, args.k, args.m, frozenset(_int_list(args.set)), sign)


def _set_text(s) -> str:
    return "{" + ",".join(str(t) for t in sorted(s)) + "}"
#endregion


#region schemes
def cmd_schemes_regular(args: argparse.Namespace) -> CommandResult:
    n = build_spec(args).n
    base = Scheme(n, args.k, args.m)
    colors = (WHITE, BLACK) if args.color == ANY else (args.color,)
    found = {color: [sorted(s) for s in regular_sets(n, base.k, base.m, color)] for color in colors}
    lines = [f"{color} {_set_text(s)}" for color in colors for s in found[color]]
    return CommandResult({"n": n, "k": base.k, "m": base.m, **found}, "\n".join(lines) or "no regular sets")


def cmd_schemes_render(args: argparse.Namespace) -> CommandResult:
    sch = _scheme_from_flags(args, build_spec(args).n)
    diagram = render(sch, args.style)
    return CommandResult({"scheme": SchemeModel.from_scheme(sch).model_dump(), "style": args.style,
                          "diagram": diagram}, diagram)


def cmd_schemes_pair_check(args: argparse.Namespace) -> CommandResult:
    n = build_spec(args).n
    pair = SchemePair(parse_scheme_triple(args.pos, n, POSITIVE), parse_scheme_triple(args.neg, n, NEGATIVE))
    verdict = bale_check(pair)
    lines = [f"pair {pair.pos} / {pair.neg}: {'passes' if verdict.passes else 'fails'}"]
    if verdict.gra3_witness:
        lines.append(f"opposite-color overlay: {verdict.gra3_witness}")
    for variant in VARIANTS:
        cells = " ".join(f"{label}:{top or '-'}/{bottom or '-'}" for label, top, bottom in verdict.overlays[variant])
        state = "balanced" if verdict.balanced[variant] else "unbalanced"
        lines.append(f"{variant:5} {state:10} {cells}")
    code = EXIT_PASS if verdict.passes else EXIT_FAIL
    return CommandResult(PairVerdictModel.from_verdict(verdict).model_dump(), "\n".join(lines), code)


def cmd_schemes_transform(args: argparse.Namespace) -> CommandResult:
    sch = _scheme_from_flags(args, build_spec(args).n)
    image = complement_dual(sch) if args.transform == "dual" else star(sch)
    return CommandResult(SchemeModel.from_scheme(image).model_dump(), f"{image}\n{render(image, FLAT)}")
#endregion


#region alg
def _element_result(a: Element) -> CommandResult:
    return CommandResult(element_to_json(a), format_element(a))


def cmd_alg(args: argparse.Namespace) -> CommandResult:
    spec = build_spec(args)
    a = parse_element(args.a, spec)
    op = args.op
    if op in ("bracket", "mul"):
        b = parse_element(args.b, spec)
        return _element_result(bracket(spec, a, b) if op == "bracket" else multiply(spec, a, b))
    if op == "nf":
        return _element_result(get_quotient(spec, args.max_degree).reduce(a))
    if op == "coproduct":
        t = coproduct(spec, a)
        return CommandResult(tensor_to_json(t), repr(t))
    if op == "antipode":
        return _element_result(antipode(spec, a))
    return _element_result(derive(spec, a, args.i, args.variant))
#endregion


#region gen
def cmd_gen_u(args: argparse.Namespace) -> CommandResult:
    spec = build_spec(args)
    return _element_result(u_bracket(spec, args.k, args.m, NEGATIVE if args.neg else POSITIVE))


def cmd_gen_phi(args: argparse.Namespace) -> CommandResult:
    spec = build_spec(args)
    return _element_result(phi(spec, args.k, args.m, _int_list(args.set), NEGATIVE if args.neg else POSITIVE))


def cmd_gen_tables(args: argparse.Namespace) -> CommandResult:
    spec = build_spec(args)
    rows = []
    lines = []
    for row in coefficient_table(spec, args.kind):
        closed, direct = row["closed"], row["direct"]
        index = f"{row['k']},{row['m']}" + (f",{row['i']}" if "i" in row else "")
        rows.append({
            "k": row["k"], "m": row["m"], "i": row.get("i"),
            "closed": format_fraction(closed), "direct": format_fraction(direct), "agree": closed == direct,
        })
        lines.append(f"{args.kind}({index}) = {closed}" + ("" if closed == direct else f"  [direct {direct}]"))
    code = EXIT_PASS if all(r["agree"] for r in rows) else EXIT_FAIL
    return CommandResult({"kind": args.kind, "spec": spec.fingerprint(), "rows": rows}, "\n".join(lines), code)
#endregion


#region roots
def cmd_roots_count(args: argparse.Namespace) -> CommandResult:
    n = build_spec(args).n
    data = {"n": n, "root_sequences": count_root_sequences(n), "pairs": count_subalgebra_pairs(n)}
    return CommandResult(data, str(data["root_sequences"]))


def cmd_roots_list(args: argparse.Namespace) -> CommandResult:
    n = build_spec(args).n
    sequences = [list(theta) for theta in enumerate_root_sequences(n)]
    return CommandResult({"n": n, "sequences": sequences},
                         "\n".join(" ".join(str(t) for t in theta) for theta in sequences))


def cmd_roots_sigma(args: argparse.Namespace) -> CommandResult:
    sch = _scheme_from_flags(args, build_spec(args).n)
    monoid = sigma_generators(sch)
    generators = sorted(monoid.generators)
    data = {"scheme": SchemeModel.from_scheme(sch).model_dump(), "generators": [list(g) for g in generators]}
    lines = [f"Σ{sch} generated by " + (", ".join(str(list(g)) for g in generators) or "nothing")]
    if args.member is not None:
        gamma = tuple(_int_list(args.member))
        if len(gamma) != sch.n:
            raise InputFormatError(f"degree {list(gamma)} must have {sch.n} components")
        member = {"gamma": list(gamma), "contains": monoid.contains(gamma),
                  "indecomposable": monoid.is_indecomposable(gamma)}
        data["member"] = member
        lines.append(f"{list(gamma)} in Σ: {member['contains']}, indecomposable: {member['indecomposable']}")
    return CommandResult(data, "\n".join(lines))
#endregion


#region verify
def cmd_verify(args: argparse.Namespace) -> CommandResult:
    names = [name.strip() for name in args.suite.split(",") if name.strip()] or [ALL]
    options = RunOptions(max_degree=args.max_degree)
    for flag in ("jobs", "trials", "specializations"):
        value = getattr(args, flag)
        if value is not None:
            setattr(options, flag, value)
    if args.verbose:
        options.show_progress = True
    spec = build_spec(args) if args.params else None
    run = run_suites(names, spec.n if spec else args.n, args.q, args.seed, options, spec=spec)

    summary = report_summary(run)
    logger.info(f"Verification summary: {summary}")
    lines = []
    for report in run.reports:
        status = "ok" if report.passed else f"{len(report.failures)} FAILED"
        lines.append(f"{report.suite:24} q={report.spec['q']:6} {report.passed_cases}/{report.cases_run} "
                     f"[{report.sampling}] {status}")
        for failure in report.failures[:3]:
            lines.append(f"    {failure.label} {failure.key}: {failure.message}")
    lines.extend(f"note: {note}" for note in run.notes)
    lines.append(f"{'PASS' if run.passed else 'FAIL'}: {summary['reports']} reports, {summary['failures']} failures")
    return CommandResult(run.model_dump(by_alias=True), "\n".join(lines), EXIT_PASS if run.passed else EXIT_FAIL)
#endregion


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="rank")
    common.add_argument("--q", default=settings.DEFAULT_Q, help="q as 'a' or 'a/b'")
    common.add_argument("--seed", type=int, default=settings.DEFAULT_SEED, help="seed for free p_ij")
    common.add_argument("--params", help="ParamSpec JSON or @file; overrides --n/--q/--seed")
    common.add_argument("--max-degree", type=int, default=settings.MAX_DEGREE, help="total degree budget")
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    common.add_argument("--out", help="write the output to a file")
    common.add_argument("--verbose", action="store_true", help="log INFO to the console")
    return common


def _scheme_flags(parser: argparse.ArgumentParser, with_set: bool = True) -> None:
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--m", type=int, required=True)
    if with_set:
        parser.add_argument("--set", default="", help="comma separated S, e.g. 1,3")


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="quantum-borel",
        description="Exact computations and identity checks in multiparameter U_q(so_{2n+1}).",
    )
    parser.add_argument("--version", action="version", version=f"{settings.PROJECT_NAME} {settings.VERSION}")
    groups = parser.add_subparsers(dest="group", required=True)

    schemes = groups.add_parser("schemes", help="black and white schemes").add_subparsers(dest="command", required=True)
    p = schemes.add_parser("regular", parents=[common], help="regular sets of an interval")
    _scheme_flags(p, with_set=False)
    p.add_argument("--color", choices=(WHITE, BLACK, ANY), default=ANY)
    p.set_defaults(handler=cmd_schemes_regular)
    p = schemes.add_parser("render", parents=[common], help="ASCII diagram of a scheme")
    _scheme_flags(p)
    p.add_argument("--style", choices=STYLES, default=FLAT)
    p.set_defaults(handler=cmd_schemes_render)
    p = schemes.add_parser("pair-check", parents=[common], help="necessary condition for a pair of schemes")
    p.add_argument("--pos", required=True, help="k,m,S")
    p.add_argument("--neg", required=True, help="i,j,T")
    p.set_defaults(handler=cmd_schemes_pair_check)
    for transform in ("dual", "star"):
        p = schemes.add_parser(transform, parents=[common], help=f"{transform} scheme")
        _scheme_flags(p)
        p.set_defaults(handler=cmd_schemes_transform, transform=transform)

    alg = groups.add_parser("alg", help="element arithmetic").add_subparsers(dest="command", required=True)
    for op in ("bracket", "mul"):
        p = alg.add_parser(op, parents=[common])
        p.add_argument("a", help="element: shorthand, JSON or @file")
        p.add_argument("b", help="element: shorthand, JSON or @file")
        p.set_defaults(handler=cmd_alg, op=op)
    for op in ("nf", "coproduct", "antipode", "derive"):
        p = alg.add_parser(op, parents=[common])
        p.add_argument("a", help="element: shorthand, JSON or @file")
        if op == "derive":
            p.add_argument("--i", type=int, required=True, help="letter index 1..n")
            p.add_argument("--variant", choices=DERIVATIVES, default=D)
        p.set_defaults(handler=cmd_alg, op=op)

    gen = groups.add_parser("gen", help="generators and coefficient tables").add_subparsers(dest="command",
                                                                                          required=True)
    p = gen.add_parser("u", parents=[common], help="u[k,m]")
    _scheme_flags(p, with_set=False)
    p.add_argument("--neg", action="store_true")
    p.set_defaults(handler=cmd_gen_u)
    p = gen.add_parser("phi", parents=[common], help="Φ^S(k,m)")
    _scheme_flags(p)
    p.add_argument("--neg", action="store_true")
    p.set_defaults(handler=cmd_gen_phi)
    p = gen.add_parser("tables", parents=[common], help="σ or μ table")
    p.add_argument("--kind", choices=(SIGMA, MU), default=SIGMA)
    p.set_defaults(handler=cmd_gen_tables)

    roots = groups.add_parser("roots", help="root sequences and Σ-monoids").add_subparsers(dest="command",
                                                                                         required=True)
    p = roots.add_parser("count", parents=[common])
    p.set_defaults(handler=cmd_roots_count)
    p = roots.add_parser("list", parents=[common])
    p.set_defaults(handler=cmd_roots_list)
    p = roots.add_parser("sigma", parents=[common], help="Σ-monoid of a scheme")
    _scheme_flags(p)
    p.add_argument("--member", help="degree to test, e.g. 1,1")
    p.set_defaults(handler=cmd_roots_sigma)

    p = groups.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", default=ALL, help="suite name, comma list or 'all'")
    p.add_argument("--trials", type=int)
    p.add_argument("--jobs", type=int)
    p.add_argument("--specializations", type=int)
    p.set_defaults(handler=cmd_verify)
    return parser


def emit(args: argparse.Namespace, result: CommandResult) -> None:
    output = json.dumps(result.data, ensure_ascii=False, indent=2) if args.json else result.text
    if args.out:
        Path(args.out).write_text(output + "\n", encoding="utf-8")
        logger.info(f"Output written to {args.out}")
    else:
        print(output)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Точка входа; возвращает код возврата."""
    args = build_parser().parse_args(argv)
    setup_logging(settings.LOG_LEVEL, settings.LOG_DIR, console_level="INFO" if args.verbose else "WARNING")
    try:
        result = args.handler(args)
    except (BaseError, ValueError) as exc:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    emit(args, result)
    return result.code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
