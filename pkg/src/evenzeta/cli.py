"""Command-line front end: ``evenzeta {bernoulli,zeta,fourier,parseval,verify}``.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .bernoulli import bernoulli_table, perturbed
from .checks import IdentityCheckResult
from .exact_arith import PiSeries, format_rational, pi_series_eval
from .fourier import a_zero, fourier_closed_form, fourier_recurrence, quadrature_oracle
from .identities import run_all
from .parseval import ParsevalReport, parseval_report
from .zeta import zeta_closed_form, zeta_decimal, zeta_inductive

FORMATS = ("text", "json", "csv")
VERIFY_GROUPS = ("identities", "zeta", "fourier", "parseval")
QUADRATURE_TOL = 1e-8


@dataclass(frozen=True)
class ToleranceCheck:
    """A floating-point comparison; passes when |lhs - rhs| <= tol."""

    name: str
    params: tuple
    lhs: float
    rhs: float
    tol: float

    @property
    def passed(self) -> bool:
        return abs(self.lhs - self.rhs) <= self.tol


def _render(v: Any) -> Any:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (int, str)) or v is None:
        return v
    return str(v)


def result_record(r) -> Dict[str, Any]:
    """Structured form of any check result."""
    if isinstance(r, ParsevalReport):
        return {
            "name": "parseval",
            "params": {"k": r.k, "N": r.N},
            "lhs": repr(r.gap),
            "rhs": repr(r.tail_bound),
            "pass": r.passed,
        }
    return {
        "name": r.name,
        "params": {key: _render(val) for key, val in r.params},
        "lhs": _render(r.lhs),
        "rhs": _render(r.rhs),
        "pass": r.passed,
    }


@dataclass
class RunReport:
    command: str
    results: List[Dict[str, Any]] = field(default_factory=list)
    values: List[Dict[str, Any]] = field(default_factory=list)
    duration_ms: int = 0
    version: str = __version__

    def add_check(self, r) -> None:
        self.results.append(result_record(r))

    def add_value(self, name: str, value: Any, **params) -> None:
        self.values.append(
            {"name": name, "params": {k: _render(v) for k, v in params.items()}, "value": _render(value)}
        )

    @property
    def summary(self) -> Dict[str, int]:
        passed = sum(1 for r in self.results if r["pass"])
        return {"passed": passed, "failed": len(self.results) - passed}

    def to_dict(self) -> Dict[str, Any]:
        d = {
            "version": self.version,
            "command": self.command,
            "results": self.results,
            "summary": self.summary,
            "duration_ms": self.duration_ms,
        }
        if self.values:
            d["values"] = self.values
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        d = json.loads(text)
        report = cls(
            command=d["command"],
            results=d["results"],
            values=d.get("values", []),
            duration_ms=d["duration_ms"],
            version=d["version"],
        )
        if report.summary != d["summary"]:
            raise ValueError("summary counts disagree with listed results")
        return report

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if self.values:
            writer.writerow(["name", "params", "value"])
            for v in self.values:
                writer.writerow([v["name"], _params_text(v["params"]), v["value"]])
        if self.results:
            writer.writerow(["name", "params", "lhs", "rhs", "pass"])
            for r in self.results:
                writer.writerow(
                    [r["name"], _params_text(r["params"]), r["lhs"], r["rhs"], "PASS" if r["pass"] else "FAIL"]
                )
        return buf.getvalue()

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0


def _params_text(params: Dict[str, Any]) -> str:
    return ";".join(f"{k}={v}" for k, v in params.items())


def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


# -- commands ----------------------------------------------------------------


def cmd_bernoulli(args, report: RunReport) -> List[str]:
    lines = []
    for m, b in enumerate(bernoulli_table(args.max)):
        report.add_value("B", b, m=m)
        lines.append(f"B_{m} = {format_rational(b)}")
    return lines


def cmd_zeta(args, report: RunReport) -> List[str]:
    k = args.k
    closed = zeta_closed_form(k)
    lines = []
    if args.mode in ("exact", "both"):
        report.add_value("zeta_q", closed.q, k=k)
        lines.append(f"zeta({2 * k}) = {format_rational(closed.q)} * pi^{2 * k}")
    if args.mode in ("decimal", "both"):
        dec = zeta_decimal(k, args.digits)
        report.add_value("zeta_decimal", f"{dec.value:f}", k=k, digits=args.digits)
        lines.append(f"zeta({2 * k}) ~ {dec}")
    if args.mode == "both":
        check = IdentityCheckResult.make("zeta_cross_check", zeta_inductive(k).q, closed.q, k=k)
        report.add_check(check)
        lines.append(f"inductive == closed-form: {_verdict(check.passed)}")
    return lines


def _fourier_terms(terms) -> str:
    if not terms:
        return "0"
    return " + ".join(f"{format_rational(c)}*pi^{2 * ell}/n^{e}" for ell, c, e in terms)


def _fourier_agreement(k: int, n: int) -> IdentityCheckResult:
    rec = fourier_recurrence(k, n)
    closed = fourier_closed_form(k).evaluate(n)
    return IdentityCheckResult.make(
        "fourier_recurrence_vs_closed",
        f"a: {_fourier_terms(rec.a)}; b: {_fourier_terms(rec.b)}",
        f"a: {_fourier_terms(closed.a)}; b: {_fourier_terms(closed.b)}",
        k=k,
        n=n,
    )


def cmd_fourier(args, report: RunReport) -> List[str]:
    k, n = args.k, args.n
    pair = fourier_recurrence(k, n)
    a, b = pair.a_value(), pair.b_value()
    a_dec, b_dec = pi_series_eval(a, args.digits), pi_series_eval(b, args.digits)
    report.add_value("a", str(a), k=k, n=n)
    report.add_value("b", str(b), k=k, n=n)
    report.add_value("a_decimal", f"{a_dec.value:f}", k=k, n=n)
    report.add_value("b_decimal", f"{b_dec.value:f}", k=k, n=n)
    if k == 1:
        path = "base case b_n(1) = 2(-1)^(n+1)/n"
    elif k % 2 == 0:
        path = "even k: a_n(k) = -(k/n) b_n(k-1), b_n(k) = 0"
    else:
        path = "odd k: b_n(k) = 2(-1)^(n+1) pi^(k-1)/n + (k/n) a_n(k-1), a_n(k) = 0"
    check = _fourier_agreement(k, n)
    report.add_check(check)
    return [
        f"a = {a}, b = {b}",
        f"a ~ {a_dec}",
        f"b ~ {b_dec}",
        f"a_0 = {a_zero(k).value}",
        f"path: recurrence, {path}",
        f"closed form agrees: {_verdict(check.passed)}",
    ]


def _parseval_lines(r: ParsevalReport) -> List[str]:
    return [
        f"k={r.k} N={r.N}",
        f"partial sum = {r.partial_sum!r}",
        f"target      = {r.target!r}",
        f"gap         = {r.gap!r}",
        f"tail bound  = {r.tail_bound!r}",
        _verdict(r.passed),
    ]


def cmd_parseval(args, report: RunReport) -> List[str]:
    r = parseval_report(args.k, args.terms)
    report.add_check(r)
    report.add_value("partial_sum", r.partial_sum, k=r.k, N=r.N)
    report.add_value("target", r.target, k=r.k)
    return _parseval_lines(r)


def _verify_groups(which: Sequence[str]) -> List[str]:
    if "all" in which:
        return list(VERIFY_GROUPS)
    return [g for g in VERIFY_GROUPS if g in which]


def cmd_verify(args, report: RunReport) -> List[str]:
    k_max = args.kmax
    checks: List[Any] = []
    for group in _verify_groups(args.which):
        if group == "identities":
            checks.extend(run_all(k_max))
        elif group == "zeta":
            checks.extend(
                IdentityCheckResult.make(
                    "zeta_cross_check", zeta_inductive(k).q, zeta_closed_form(k).q, k=k
                )
                for k in range(1, k_max + 1)
            )
        elif group == "fourier":
            checks.extend(_fourier_agreement(k, n) for k in range(1, k_max + 1) for n in (1, 2))
            for k in range(1, min(k_max, 8) + 1):
                closed = fourier_closed_form(k)
                for n in range(1, 5):
                    pair = closed.evaluate(n)
                    for which, exact in (("cos", pair.a_value()), ("sin", pair.b_value())):
                        checks.append(
                            ToleranceCheck(
                                "quadrature",
                                (("k", k), ("n", n), ("which", which)),
                                quadrature_oracle(k, n, which),
                                float(pi_series_eval(exact, 20)),
                                QUADRATURE_TOL,
                            )
                        )
        elif group == "parseval":
            checks.extend(parseval_report(k, args.terms) for k in range(1, min(k_max, 6) + 1))
    lines = []
    for c in checks:
        report.add_check(c)
        rec = report.results[-1]
        lines.append(f"{_verdict(rec['pass'])} {rec['name']} {_params_text(rec['params'])}")
    s = report.summary
    lines.append(f"{s['passed']} passed, {s['failed']} failed")
    return lines


# -- argument parsing --------------------------------------------------------


def _int_at_least(lo: int):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v

    parse.__name__ = f"int>={lo}"
    return parse


def _which(text: str) -> List[str]:
    groups = [g.strip() for g in text.split(",") if g.strip()]
    bad = [g for g in groups if g not in VERIFY_GROUPS + ("all",)]
    if bad or not groups:
        raise argparse.ArgumentTypeError(
            f"--which takes a comma list from {', '.join(VERIFY_GROUPS + ('all',))}"
        )
    return groups


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--digits", type=_int_at_least(1), default=30, help="decimal digits")
    # test hook: shifts B_M by 1 to show that failures are detected
    common.add_argument("--inject-fault", type=_int_at_least(0), metavar="M", help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="evenzeta",
        description="Exact zeta(2k), Bernoulli identities and Parseval checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bernoulli", parents=[common], help="list B_0..B_max")
    p.add_argument("--max", type=_int_at_least(0), required=True)
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("zeta", parents=[common], help="zeta(2k) exactly and/or as a decimal")
    p.add_argument("--k", type=_int_at_least(1), required=True)
    p.add_argument("--mode", choices=("exact", "decimal", "both"), default="exact")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("fourier", parents=[common], help="a_n(k) and b_n(k) of x^k")
    p.add_argument("--k", type=_int_at_least(1), required=True)
    p.add_argument("--n", type=_int_at_least(1), required=True)
    p.set_defaults(func=cmd_fourier)

    p = sub.add_parser("parseval", parents=[common], help="Parseval partial sum vs target")
    p.add_argument("--k", type=_int_at_least(1), required=True)
    p.add_argument("--terms", type=_int_at_least(1), default=100000)
    p.set_defaults(func=cmd_parseval)

    p = sub.add_parser("verify", parents=[common], help="run verification sweeps")
    p.add_argument("--kmax", type=_int_at_least(1), default=10)
    p.add_argument("--which", type=_which, default=["all"])
    p.add_argument("--terms", type=_int_at_least(1), default=10000, help="Parseval terms")
    p.set_defaults(func=cmd_verify)
    return parser


def _echo(argv: Sequence[str]) -> str:
    return " ".join(["evenzeta", *argv])


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    report = RunReport(command=_echo(argv))
    fault = (
        perturbed(args.inject_fault) if args.inject_fault is not None else contextlib.nullcontext()
    )
    start = time.perf_counter()
    with fault:
        lines = args.func(args, report)
    report.duration_ms = int(round((time.perf_counter() - start) * 1000))

    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        sys.stdout.write(report.to_csv())
    else:
        print("\n".join(lines))
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
