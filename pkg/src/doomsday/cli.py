"""Command-line interface: compute, explain, verify, and profile.

Exit codes: 0 on success and agreement, 1 when a verification or
equivalence scan finds a mismatch, 2 on usage or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from time import perf_counter

from . import oracle, trace
from .dates import YEAR_MAX, YEAR_MIN, CivilDate, days_in_month, is_leap
from .doomsyear import METHODS, doomsyear, simplified_doomsyear
from .rule import day_of_week, doomsdate
from .stats import cost_report
from .z7 import Weekday


@dataclass(frozen=True)
class VerifyMismatch:
    date: str
    expected: str
    got: str

    def as_dict(self) -> dict:
        return {"date": self.date, "expected": self.expected, "got": self.got}


@dataclass(frozen=True)
class VerifyReport:
    """Result of scanning a year range against the oracle."""

    from_year: int
    to_year: int
    method: str
    dates_checked: int
    mismatches: list[VerifyMismatch]
    elapsed_seconds: float

    def as_dict(self) -> dict:
        return {
            "from_year": self.from_year,
            "to_year": self.to_year,
            "method": self.method,
            "dates_checked": self.dates_checked,
            "mismatches": [m.as_dict() for m in self.mismatches],
            "elapsed_seconds": self.elapsed_seconds,
        }


def run_verify(from_year: int, to_year: int, method: str = "odd11") -> VerifyReport:
    """Compare the pipeline against the oracle for every date in the range.

    Mismatches come back in calendar order.
    """
    if not (YEAR_MIN <= from_year <= to_year <= YEAR_MAX):
        raise ValueError(
            f"bad range: need {YEAR_MIN} <= from <= to <= {YEAR_MAX}, "
            f"got {from_year}..{to_year}"
        )
    started = perf_counter()
    checked = 0
    mismatches: list[VerifyMismatch] = []
    for year in range(from_year, to_year + 1):
        for month in range(1, 13):
            for day in range(1, days_in_month(year, month) + 1):
                date = CivilDate(year, month, day)
                got, _, _ = day_of_week(date, method)
                expected = oracle.oracle_weekday(date)
                checked += 1
                if got != expected:
                    mismatches.append(
                        VerifyMismatch(date.isoformat(), str(expected), str(got))
                    )
    return VerifyReport(
        from_year, to_year, method, checked, mismatches, perf_counter() - started
    )


def _explain_day(date: CivilDate, method: str, breakdown, weekday: Weekday) -> str:
    leap = is_leap(date.year)
    x = date.year % 100
    _, dy_trace = doomsyear(x, method)
    dd = doomsdate(date.month, leap)
    total = breakdown.doomsyear + breakdown.doomscentury + breakdown.doomsmonth
    lines = [
        f"doomsyear({x:02d}) via {method}: {dy_trace.arrow_text()}",
        f"doomscentury({date.year // 100}00s) = {breakdown.doomscentury}",
        f"doomsmonth = {date.day} - {dd} = {breakdown.doomsmonth}",
        f"doomsyear {breakdown.doomsyear} + doomscentury {breakdown.doomscentury}"
        f" + doomsmonth {breakdown.doomsmonth} = {total}; mod 7 = {int(weekday)}",
        f"{date.isoformat()} is a {weekday}",
    ]
    return "\n".join(lines)


def cmd_day(args: argparse.Namespace) -> int:
    date = CivilDate.parse(args.date)
    weekday, breakdown, full_trace = day_of_week(date, args.method)
    if args.as_json:
        doc = {
            "weekday": str(weekday),
            "breakdown": breakdown.as_dict(),
            "trace": full_trace.as_dicts(),
        }
        print(json.dumps(doc))
    elif args.explain:
        print(_explain_day(date, args.method, breakdown, weekday))
    else:
        print(weekday)
    return 0


def cmd_doomsyear(args: argparse.Namespace) -> int:
    x = args.x
    if not 0 <= x <= 99:
        raise ValueError(f"year within century out of range 0..99: {x}")
    if args.method == "all":
        residues = {m: doomsyear(x, m)[0] for m in METHODS}
        agree = len(set(residues.values())) == 1
        if args.as_json:
            print(json.dumps({"x": x, "residues": residues, "agree": agree}))
        else:
            for m in METHODS:
                print(f"{m}: {residues[m]}")
            print("AGREE" if agree else "DISAGREE")
        return 0 if agree else 1
    residue, tr = doomsyear(x, args.method)
    if args.as_json:
        print(
            json.dumps(
                {"x": x, "method": args.method, "residue": residue, "trace": tr.as_dicts()}
            )
        )
    elif args.explain:
        print(tr.render())
        print(f"doomsyear({x}) = {residue}")
    else:
        print(residue)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verify(args.from_year, args.to_year, args.method)
    if args.as_json:
        print(json.dumps(report.as_dict()))
    else:
        print(
            f"checked {report.dates_checked} dates in "
            f"{report.from_year}-01-01..{report.to_year}-12-31 using {report.method}: "
            f"{len(report.mismatches)} mismatches ({report.elapsed_seconds:.2f}s)"
        )
        for m in report.mismatches:
            print(f"  {m.date}: expected {m.expected}, got {m.got}")
    return 0 if not report.mismatches else 1


def cmd_equiv(args: argparse.Namespace) -> int:
    failures = []
    print(" x  doomsyear")
    for x in range(100):
        odd11_residue, odd11_trace = doomsyear(x, "odd11")
        residues = {
            doomsyear(x, "conway")[0],
            simplified_doomsyear(x),
            odd11_residue,
            doomsyear(x, "walters")[0],
        }
        even_ok = odd11_trace.find(trace.MOD_7).value_in % 2 == 0
        if len(residues) != 1 or not even_ok:
            failures.append(x)
        print(f"{x:02d}  {odd11_residue}")
    if failures:
        print(f"DISAGREE at x = {failures}")
        return 1
    print("all 100 inputs agree; every odd11 mod-7 input was even")
    return 0


_STATS_EXTRA = {"add_11_first_stage", "add_11_second_stage"}


def cmd_stats(args: argparse.Namespace) -> int:
    report = cost_report()
    if args.as_json:
        print(json.dumps({cost.method: cost.as_dict() for cost in report}))
        return 0
    for cost in report:
        print(f"{cost.method}:")
        for label in sorted(cost.step_counts):
            line = f"  {label:<16} {cost.step_counts[label]}"
            if label == trace.ADD_11:
                line += (
                    f"  (first stage {cost.add11_first_stage},"
                    f" second stage {cost.add11_second_stage})"
                )
            print(line)
        print(
            f"  accumulator      min {cost.accumulator_min}"
            f"  max {cost.accumulator_max}"
            f"  mean {cost.accumulator_mean:.2f}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doomsday",
        description="Day-of-week calculator built on Conway's Doomsday rule.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_day = sub.add_parser("day", help="weekday of a calendar date")
    p_day.add_argument("date", help="ISO date, YYYY-MM-DD")
    p_day.add_argument("--method", choices=METHODS, default="odd11")
    p_day.add_argument("--explain", action="store_true", help="narrate the calculation")
    p_day.add_argument("--json", dest="as_json", action="store_true")
    p_day.set_defaults(handler=cmd_day)

    p_dy = sub.add_parser("doomsyear", help="doomsyear of a 2-digit year")
    p_dy.add_argument("x", type=int, help="year within the century, 0..99")
    p_dy.add_argument("--method", choices=METHODS + ("all",), default="odd11")
    p_dy.add_argument("--explain", action="store_true", help="print the step trace")
    p_dy.add_argument("--json", dest="as_json", action="store_true")
    p_dy.set_defaults(handler=cmd_doomsyear)

    p_verify = sub.add_parser("verify", help="scan a year range against the oracle")
    p_verify.add_argument("from_year", type=int)
    p_verify.add_argument("to_year", type=int)
    p_verify.add_argument("--method", choices=METHODS, default="odd11")
    p_verify.add_argument("--json", dest="as_json", action="store_true")
    p_verify.set_defaults(handler=cmd_verify)

    p_equiv = sub.add_parser("equiv", help="check that all strategies agree on 0..99")
    p_equiv.set_defaults(handler=cmd_equiv)

    p_stats = sub.add_parser("stats", help="operation counts per strategy")
    p_stats.add_argument("--json", dest="as_json", action="store_true")
    p_stats.set_defaults(handler=cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
