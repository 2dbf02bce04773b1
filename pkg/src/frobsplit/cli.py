"""Command-line interface and corpus runner.

Every check the library performs is exposed as a subcommand; ``corpus
run`` executes a JSON file of cases with expected verdicts and exits
nonzero when any expectation fails.  Reports are printed as stable text
(one line per check) or JSON.

Exit codes: 0 all checks passed, 1 some verdict differed from its
expectation, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Sequence

from .expr import ParseError, parse_expr
from .fparith import ring
from .idealtheory import (
    IdealPresentation,
    buchberger,
    exists_compatible_splitting,
    fedder_module,
    is_compatible,
    nilpotent_witness,
)
from .rescert import (
    ResidueChain,
    certify_chain,
    matrix_context,
    matrix_factors,
    matrix_section_coefficient,
    origin_coefficient,
    render_truncated,
    search_chain,
)
from .splitcore import (
    NumericalSemigroup,
    TwistedEndo,
    check_splitting,
    is_divisor_splitting,
    p1_extension_check,
    semigroup_split_check,
)

SCHEMA_VERSION = 1


@dataclass
class CheckResult:
    kind: str
    verdict: Any
    expected: Any = None
    passed: bool = True
    certificate: Any = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {
            "kind": self.kind,
            "verdict": self.verdict,
            "expected": self.expected,
            "pass": self.passed,
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


@dataclass
class Report:
    case: str
    prime: int | None
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "case": self.case,
            "prime": self.prime,
            "checks": [c.to_json() for c in self.checks],
        }

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"[{status}] {self.case}.{c.kind}: verdict={c.verdict}"
            if c.expected is not None:
                line += f" expected={c.expected}"
            if c.certificate is not None:
                line += f" certificate={json.dumps(c.certificate, sort_keys=True)}"
            lines.append(line)
        return "\n".join(lines)


def chain_certificate(chain: ResidueChain) -> dict:
    names = chain.initial.context.variables
    return {
        "initial": render_truncated(chain.initial),
        "steps": [
            {"var": names[var], "result": render_truncated(poly)}
            for var, poly in chain.steps
        ],
        "terminal": str(chain.terminal),
    }


@dataclass(frozen=True)
class CorpusCase:
    """One corpus entry: a ring, an optional section, and expected checks."""

    name: str
    prime: int
    variables: tuple[str, ...]
    sigma: str | None
    checks: tuple[dict, ...]

    @classmethod
    def from_json(cls, obj: dict) -> "CorpusCase":
        return cls(
            name=obj["name"],
            prime=obj["prime"],
            variables=tuple(obj.get("variables", ())),
            sigma=obj.get("sigma"),
            checks=tuple(obj["checks"]),
        )


def _run_check(case: CorpusCase, check: dict) -> CheckResult:
    kind = check["kind"]
    expected = check.get("expected")
    ctx = ring(case.prime, case.variables) if case.variables else None

    def sigma() -> TwistedEndo:
        if ctx is None or case.sigma is None:
            raise ValueError(f"case {case.name!r} has no sigma expression")
        return TwistedEndo(parse_expr(case.sigma, ctx))

    def parse_ideal(key: str = "ideal") -> IdealPresentation:
        assert ctx is not None
        return IdealPresentation(ctx, [parse_expr(s, ctx) for s in check[key]])

    certificate: Any = None
    if kind == "splitting":
        v = check_splitting(sigma())
        verdict: Any = v.kind.value
        if v.witness is not None:
            certificate = {"witness": render_truncated(v.witness)}
        elif v.constant is not None:
            certificate = {"constant": str(v.constant)}
    elif kind == "spans":
        verdict = check_splitting(sigma()).spans
    elif kind == "compatible":
        verdict = is_compatible(sigma(), parse_ideal(), check.get("method", "both"))
    elif kind == "exists-split":
        res = exists_compatible_splitting(parse_ideal())
        verdict = res.exists
        certificate = {"obstruction": [str(g) for g in res.obstruction.basis]}
    elif kind == "d-split":
        assert ctx is not None
        verdict = is_divisor_splitting(sigma(), parse_expr(check["divisor"], ctx))
    elif kind == "chain":
        assert ctx is not None
        order = [ctx.index(name) for name in check["order"]]
        try:
            chain = certify_chain(sigma().coeff, order)
            verdict = True
            certificate = chain_certificate(chain)
        except ArithmeticError as exc:
            verdict = False
            certificate = {"error": str(exc)}
    elif kind == "semigroup":
        res = semigroup_split_check(NumericalSemigroup(check["generators"]), case.prime)
        verdict = res.split
        certificate = {"witness": res.witness}
    elif kind == "nilpotent":
        assert ctx is not None
        g = parse_expr(check["element"], ctx)
        verdict = nilpotent_witness(g, parse_ideal(), check.get("bound", 4))
    elif kind == "p1":
        res = p1_extension_check(sigma())
        verdict = {
            "extends": res.extends,
            "compatible_zero": res.compatible_zero,
            "compatible_infinity": res.compatible_infinity,
        }
        if res.other_chart is not None:
            certificate = {"other_chart": render_truncated(res.other_chart)}
    else:
        raise ValueError(f"unknown check kind {kind!r}")

    passed = expected is None or verdict == expected
    return CheckResult(kind, verdict, expected, passed, certificate)


def run_case(case: CorpusCase) -> Report:
    """Execute every check of a case; per-check errors are captured."""
    report = Report(case.name, case.prime)
    for check in case.checks:
        try:
            report.checks.append(_run_check(case, check))
        except Exception as exc:
            report.checks.append(
                CheckResult(check.get("kind", "?"), f"error: {exc}", check.get("expected"), False)
            )
    return report


def shipped_corpus_path() -> str:
    """Filesystem path of the corpus of worked examples shipped with the package."""
    return str(resources.files("frobsplit").joinpath("corpus/worked_examples.json"))


def _emit(report: Report, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        print(report.to_text())


def _context_from_args(args: argparse.Namespace):
    names = args.vars.replace(",", " ").split() if args.vars else []
    if not names:
        raise ParseError("no variables given (use --vars)", 0)
    return ring(args.prime, names)


def _sigma_from_args(args: argparse.Namespace) -> TwistedEndo:
    ctx = _context_from_args(args)
    return TwistedEndo(parse_expr(args.expr, ctx))


def _cmd_split_check(args) -> Report:
    sigma = _sigma_from_args(args)
    v = check_splitting(sigma)
    cert: Any = None
    if v.witness is not None:
        cert = {"witness": render_truncated(v.witness)}
    elif v.constant is not None:
        cert = {"constant": str(v.constant)}
    report = Report("split-check", args.prime)
    report.checks.append(CheckResult("splitting", v.kind.value, certificate=cert))
    return report


def _cmd_compat(args) -> Report:
    sigma = _sigma_from_args(args)
    I = IdealPresentation(sigma.context, [parse_expr(s, sigma.context) for s in args.ideal])
    verdict = is_compatible(sigma, I, args.method)
    report = Report("compat", args.prime)
    report.checks.append(CheckResult("compatible", verdict))
    return report


def _cmd_fedder(args) -> Report:
    ctx = _context_from_args(args)
    I = IdealPresentation(ctx, [parse_expr(s, ctx) for s in args.ideal])
    C = fedder_module(I)
    report = Report("fedder", args.prime)
    report.checks.append(
        CheckResult(
            "fedder",
            [str(g) for g in C.generators],
            certificate={"groebner": [str(g) for g in buchberger(C).basis]},
        )
    )
    return report


def _cmd_exists_split(args) -> Report:
    ctx = _context_from_args(args)
    I = IdealPresentation(ctx, [parse_expr(s, ctx) for s in args.ideal])
    res = exists_compatible_splitting(I)
    report = Report("exists-split", args.prime)
    report.checks.append(
        CheckResult(
            "exists-split",
            res.exists,
            certificate={"obstruction": [str(g) for g in res.obstruction.basis]},
        )
    )
    return report


def _cmd_d_split(args) -> Report:
    sigma = _sigma_from_args(args)
    h = parse_expr(args.divisor, sigma.context)
    report = Report("d-split", args.prime)
    report.checks.append(CheckResult("d-split", is_divisor_splitting(sigma, h)))
    return report


def _cmd_certify(args) -> Report:
    sigma = _sigma_from_args(args)
    ctx = sigma.context
    order = [ctx.index(name) for name in args.order.replace(",", " ").split()]
    report = Report("certify", args.prime)
    try:
        chain = certify_chain(sigma.coeff, order)
        report.checks.append(CheckResult("chain", True, certificate=chain_certificate(chain)))
    except ArithmeticError as exc:
        report.checks.append(CheckResult("chain", False, certificate={"error": str(exc)}))
    return report


def _cmd_search_chain(args) -> Report:
    sigma = _sigma_from_args(args)
    chain = search_chain(sigma.coeff)
    report = Report("search-chain", args.prime)
    if chain is None:
        report.checks.append(CheckResult("chain", False))
    else:
        report.checks.append(CheckResult("chain", True, certificate=chain_certificate(chain)))
    return report


def _cmd_matrix_demo(args) -> Report:
    n = args.size
    ctx = matrix_context(n, args.prime)
    coeff = matrix_section_coefficient(ctx, n)
    report = Report(f"matrix-demo-{n}", args.prime)
    report.checks.append(
        CheckResult(
            "factors",
            [str(f) for f in matrix_factors(ctx, n)],
        )
    )
    v = check_splitting(TwistedEndo(coeff))
    report.checks.append(
        CheckResult("splitting", v.kind.value, certificate={"origin": str(origin_coefficient(coeff))})
    )
    chain = search_chain(coeff)
    if chain is None:
        report.checks.append(CheckResult("chain", False, passed=False))
    else:
        report.checks.append(CheckResult("chain", True, certificate=chain_certificate(chain)))
    return report


def _cmd_semigroup(args) -> Report:
    gens = [int(g) for g in args.gens.replace(",", " ").split()]
    res = semigroup_split_check(NumericalSemigroup(gens), args.prime)
    report = Report("semigroup", args.prime)
    report.checks.append(
        CheckResult("semigroup", res.split, certificate={"witness": res.witness})
    )
    return report


def _cmd_p1(args) -> Report:
    sigma = _sigma_from_args(args)
    res = p1_extension_check(sigma)
    report = Report("p1", args.prime)
    cert = None
    if res.other_chart is not None:
        cert = {"other_chart": render_truncated(res.other_chart)}
    report.checks.append(
        CheckResult(
            "p1",
            {
                "extends": res.extends,
                "compatible_zero": res.compatible_zero,
                "compatible_infinity": res.compatible_infinity,
            },
            certificate=cert,
        )
    )
    return report


def _cmd_corpus(args) -> tuple[list[Report], bool]:
    path = args.file or shipped_corpus_path()
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    if data.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported corpus schema {data.get('schema')!r}")
    reports = [run_case(CorpusCase.from_json(obj)) for obj in data["cases"]]
    return reports, all(r.passed for r in reports)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", "-p", type=int, default=2, help="characteristic (a prime)")
    common.add_argument("--vars", default="", help="variable names, e.g. 'x,y'")
    common.add_argument(
        "--method",
        choices=["fedder", "finite", "both"],
        default="both",
        help="compatibility method",
    )
    common.add_argument("--format", choices=["text", "json"], default="text")

    parser = argparse.ArgumentParser(
        prog="frobsplit",
        description="Frobenius splitting checks for polynomial rings over F_p",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cmd = sub.add_parser("split-check", parents=[common], help="is the section a splitting?")
    cmd.add_argument("expr")
    cmd.set_defaults(fn=_cmd_split_check)

    cmd = sub.add_parser("compat", parents=[common], help="is the section compatible with an ideal?")
    cmd.add_argument("expr")
    cmd.add_argument("--ideal", nargs="+", required=True)
    cmd.set_defaults(fn=_cmd_compat)

    cmd = sub.add_parser("fedder", parents=[common], help="coefficients compatible with an ideal")
    cmd.add_argument("--ideal", nargs="+", required=True)
    cmd.set_defaults(fn=_cmd_fedder)

    cmd = sub.add_parser("exists-split", parents=[common], help="does a compatible splitting exist?")
    cmd.add_argument("--ideal", nargs="+", required=True)
    cmd.set_defaults(fn=_cmd_exists_split)

    cmd = sub.add_parser("d-split", parents=[common], help="is the splitting divisor-compatible?")
    cmd.add_argument("expr")
    cmd.add_argument("--divisor", required=True)
    cmd.set_defaults(fn=_cmd_d_split)

    cmd = sub.add_parser("certify", parents=[common], help="run a residue chain in a given order")
    cmd.add_argument("expr")
    cmd.add_argument("--order", required=True, help="variable names, e.g. 'x,y'")
    cmd.set_defaults(fn=_cmd_certify)

    cmd = sub.add_parser("search-chain", parents=[common], help="search for a residue chain")
    cmd.add_argument("expr")
    cmd.set_defaults(fn=_cmd_search_chain)

    cmd = sub.add_parser("matrix-demo", parents=[common], help="nested-minor section of a generic matrix")
    cmd.add_argument("--size", type=int, default=3)
    cmd.set_defaults(fn=_cmd_matrix_demo)

    cmd = sub.add_parser("semigroup", parents=[common], help="splitness of a numerical semigroup ring")
    cmd.add_argument("--gens", required=True, help="generators, e.g. '2,3'")
    cmd.set_defaults(fn=_cmd_semigroup)

    cmd = sub.add_parser("p1", parents=[common], help="extension to the projective line")
    cmd.add_argument("expr")
    cmd.set_defaults(fn=_cmd_p1)

    cmd = sub.add_parser("corpus", parents=[common], help="run a corpus of cases")
    cmd.add_argument("action", choices=["run"])
    cmd.add_argument("file", nargs="?", help="corpus JSON (defaults to the shipped one)")
    cmd.set_defaults(fn=None)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "corpus":
            reports, ok = _cmd_corpus(args)
            for report in reports:
                _emit(report, args.format)
            return 0 if ok else 1
        report = args.fn(args)
        _emit(report, args.format)
        return 0 if report.passed else 1
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
