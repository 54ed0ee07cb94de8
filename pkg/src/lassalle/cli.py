"""Command-line front end.

Exit status: 0 when every check passes, 1 when a mathematical check fails,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactmath import format_rational, parse_rational
from .karlin import KarlinParams, predict_positive
from .partitions import enumerate_skew_shapes, parse_index_list, parse_shape
from .rootedness import (all_roots_real_nonpositive, check_bessel_series_identity,
                         check_jensen_laguerre_identity, jensen_poly)
from .sequences import LassalleTable, zeilberger_check
from .specialization import make_context, phi_skew_schur
from .toeplitz import INFINITY, phi_sequence, staircase, tp_scan

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass
class Report:
    command: str
    parameters: dict[str, str]
    records: list[dict] = field(default_factory=list)
    passed: bool = True
    summary: dict[str, str] = field(default_factory=dict)
    # rows printed in text mode; None means all records
    text_rows: Optional[list[dict]] = None
    # preformatted text-mode body (e.g. CSV), printed instead of the row table
    body: str = ""

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> str:
        doc = {"command": self.command, "parameters": self.parameters,
               "summary": self.summary, "records": self.records, "verdict": self.verdict}
        return json.dumps(doc, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        lines += [f"  {k} = {v}" for k, v in self.parameters.items()]
        rows = self.records if self.text_rows is None else self.text_rows
        if self.body:
            lines.append(self.body.rstrip("\n"))
        elif rows:
            cols = list(rows[0])
            cells = [[_cell(r[c]) for c in cols] for r in rows]
            widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
            lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
            lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
        lines += [f"{k}: {v}" for k, v in self.summary.items()]
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


def _cell(value) -> str:
    if isinstance(value, list):
        return "[" + ",".join(map(str, value)) + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _positive_rational(text: str) -> Fraction:
    try:
        t = parse_rational(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if t <= 0:
        raise UsageError(f"t must be positive, got {text}")
    return t


def _t_list(text: str) -> list[Fraction]:
    return [_positive_rational(part) for part in text.split(",")]


def _count(text: str) -> int | float:
    if text.lower() in ("inf", "infinity", "oo"):
        return INFINITY
    if not text.isdigit():
        raise UsageError(f"expected a nonnegative integer or 'inf', got {text!r}")
    return int(text)


def _parse(parser, text):
    try:
        return parser(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_specialize(shape: str, t: str) -> Report:
    s = _parse(parse_shape, shape)
    tv = _positive_rational(t)
    value = phi_skew_schur(make_context(tv), s)
    rec = {"shape": str(s), "t": format_rational(tv), "value": format_rational(value),
           "positive": value > 0}
    return Report("specialize", {"shape": shape, "t": t}, [rec], passed=value > 0)


def cmd_scan(max_weight: int, t_list: str) -> Report:
    if max_weight < 0:
        raise UsageError("max-weight must be nonnegative")
    ts = _t_list(t_list)
    records = []
    for tv in ts:
        ctx = make_context(tv)
        for s in enumerate_skew_shapes(max_weight):
            value = phi_skew_schur(ctx, s)
            records.append({"t": format_rational(tv), "shape": str(s),
                            "value": format_rational(value), "positive": value > 0})
    failures = [r for r in records if not r["positive"]]
    return Report("scan", {"max_weight": str(max_weight), "t": t_list}, records,
                  passed=not failures,
                  summary={"shapes_evaluated": str(len(records)), "nonpositive": str(len(failures))},
                  text_rows=failures)


def cmd_tpscan(t: str, order: int, window: int) -> Report:
    tv = _positive_rational(t)
    if order < 1 or window < 1 or order > window:
        raise UsageError("need 1 <= order <= window")
    report = tp_scan(phi_sequence(make_context(tv)), order, window)
    records = []
    bad = []
    for r in report.records:
        d = r.as_dict()
        # nonnegative everywhere; positive exactly on the staircase pairs
        conforms = r.value > 0 if staircase(r.I, r.J) else r.value == 0
        records.append(d)
        if not conforms:
            bad.append(d)
    counts = report.counts()
    summary = {k: str(v) for k, v in counts.items()}
    summary["nonconforming"] = str(len(bad))
    return Report("tpscan", {"t": t, "order": str(order), "window": str(window)}, records,
                  passed=not bad, summary=summary, text_rows=bad)


def cmd_jensen(t: str, nmax: int) -> Report:
    tv = _positive_rational(t)
    records = []
    for n in range(nmax + 1):
        p = jensen_poly(tv, n)
        records.append({"n": n, "coefficients": p.to_strings(),
                        "real_nonpositive": all_roots_real_nonpositive(p)})
    return Report("jensen", {"t": t, "nmax": str(nmax)}, records,
                  passed=all(r["real_nonpositive"] for r in records))


def cmd_laguerre_check(t: str, nmax: int) -> Report:
    tv = _positive_rational(t)
    records = [{"n": n, "identity_holds": check_jensen_laguerre_identity(tv, n)}
               for n in range(nmax + 1)]
    return Report("laguerre-check", {"t": t, "nmax": str(nmax)}, records,
                  passed=all(r["identity_holds"] for r in records))


def cmd_bessel_check(t: str, count: int) -> Report:
    tv = _positive_rational(t)
    if count < 1:
        raise UsageError("count must be positive")
    ok = check_bessel_series_identity(tv, count)
    return Report("bessel-check", {"t": t, "count": str(count)},
                  [{"terms": count, "identity_holds": ok}], passed=ok)


def cmd_lassalle(N: int) -> Report:
    if N < 2:
        raise UsageError("N must be at least 2")
    table = LassalleTable.build(N)
    checks = {row.n: row for row in zeilberger_check(N)}
    records = []
    for n in range(1, N + 1):
        rec = {"n": n, "C_n": str(table.catalan[n]), "A_n": str(table.A(n)),
               "2A_n/C_n": format_rational(table.ratio(n))}
        row = checks.get(n)
        rec["checks"] = "n/a" if row is None else ("pass" if row.passed else "fail")
        records.append(rec)
    return Report("lassalle", {"N": str(N)}, records,
                  passed=all(row.passed for row in checks.values()), body=table.to_csv())


def cmd_karlin(theta_positive: bool, K: str, L: str, I: str, J: str) -> Report:
    """Evaluate the predicate only; a ``false`` prediction is a result, not a failure."""
    params = KarlinParams(theta_positive, _count(K), _count(L))
    Iv = _parse(parse_index_list, I)
    Jv = _parse(parse_index_list, J)
    if len(Iv) != len(Jv):
        raise UsageError("I and J must have the same length")
    result = predict_positive(params, Iv, Jv)
    return Report("karlin",
                  {"theta_positive": _cell(theta_positive), "K": K, "L": L, "I": I, "J": J},
                  [{"I": list(Iv), "J": list(Jv), "predicted_positive": result}])


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a single JSON document")
    common.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="lassalle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("specialize", parents=[common], help="phi(s_{lam/mu}) for one shape")
    p.add_argument("--shape", required=True, help='e.g. "[4,2,1]" or "[4,2,1]/[2,1]"')
    p.add_argument("--t", required=True)

    p = sub.add_parser("scan", parents=[common], help="positivity over all skew shapes")
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--t", default="1/2,1,2,7/3", help="comma-separated list of t values")

    p = sub.add_parser("tpscan", parents=[common], help="bounded total-positivity scan")
    p.add_argument("--t", required=True)
    p.add_argument("--order", type=int, default=4)
    p.add_argument("--window", type=int, default=10)

    p = sub.add_parser("jensen", parents=[common], help="Jensen polynomial real-rootedness")
    p.add_argument("--t", required=True)
    p.add_argument("--nmax", type=int, default=15)

    p = sub.add_parser("laguerre-check", parents=[common], help="Jensen-Laguerre identity")
    p.add_argument("--t", required=True)
    p.add_argument("--nmax", type=int, default=15)

    p = sub.add_parser("bessel-check", parents=[common], help="Bessel series coefficient identity")
    p.add_argument("--t", required=True)
    p.add_argument("--count", type=int, default=20)

    p = sub.add_parser("lassalle", parents=[common], help="A_n table and Zeilberger checks")
    p.add_argument("--N", type=int, default=20)

    p = sub.add_parser("karlin", parents=[common], help="Karlin strict-positivity predicate")
    p.add_argument("--theta-positive", action="store_true")
    p.add_argument("--K", default="0")
    p.add_argument("--L", default="0")
    p.add_argument("--I", required=True, help='e.g. "1,2"')
    p.add_argument("--J", required=True)
    return parser


def run(args: argparse.Namespace) -> Report:
    c = args.command
    if c == "specialize":
        return cmd_specialize(args.shape, args.t)
    if c == "scan":
        return cmd_scan(args.max_weight, args.t)
    if c == "tpscan":
        return cmd_tpscan(args.t, args.order, args.window)
    if c == "jensen":
        return cmd_jensen(args.t, args.nmax)
    if c == "laguerre-check":
        return cmd_laguerre_check(args.t, args.nmax)
    if c == "bessel-check":
        return cmd_bessel_check(args.t, args.count)
    if c == "lassalle":
        return cmd_lassalle(args.N)
    if c == "karlin":
        return cmd_karlin(args.theta_positive, args.K, args.L, args.I, args.J)
    raise UsageError(f"unknown command {c}")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run(args)
    except UsageError as exc:
        print(f"lassalle {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = report.to_json() if args.json else report.to_text()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
