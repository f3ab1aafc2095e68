"""Command-line front end.

Every command writes one JSON record per line to standard output and ends with
a report line. Diagnostics and logs go to standard error. Exit status is 0 when
every record passes, 1 on a mathematical failure and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, TextIO

from powersum import __version__
from powersum.audit import audit_errata, audit_examples
from powersum.config import DEFAULT_LOG_LEVEL, LOG_LEVELS, load_settings
from powersum.elliptic import (
    DEG8_BASE,
    DEG9_AB,
    DEG9_P,
    QuarticPoint,
    deg8_model,
    deg9_bridge,
    deg9_model,
    generate_parameters,
)
from powersum.errors import ConditionError, ConfigError, CurveError, PowersumError, SearchTooLargeError
from powersum.exactcore import PowerSumPair, canonicalize, parse_rational, verify_pair
from powersum.families import (
    DEG3_SHIFT_BASE,
    DEG3_SYMMETRIC_BASE,
    deg2_family,
    deg3_shift_family,
    deg3_symmetric_family,
    deg4_family,
    deg5_66_family,
    deg6_family,
    deg7_family,
    deg8_family,
    deg8_parameters_from_u,
    deg9_family,
)
from powersum.oracle import SearchSpec, oracle_verify, search
from powersum.tables import TABLE_A

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def configure_logging(level: str = DEFAULT_LOG_LEVEL) -> None:
    """One stderr handler on the root logger; stdout stays reserved for records."""
    logging.basicConfig(level=level.upper(), format=LOG_FORMAT, stream=sys.stderr, force=True)


# ---------------------------------------------------------------------------
# Records
# ---------------------------------------------------------------------------


def _number(value: Fraction) -> str:
    return str(value)


def pair_record(pair: PowerSumPair, **extra: Any) -> dict[str, Any]:
    """Schema record for one pair; passes only if exact and integer checks agree."""
    report = verify_pair(pair)
    record: dict[str, Any] = {
        "pair": {
            "lhs": [_number(v) for v in pair.lhs],
            "rhs": [_number(v) for v in pair.rhs],
            "degrees": sorted(pair.degrees),
        },
        "residuals": {str(k): _number(v) for k, v in report.residuals.items()},
        "pass": report.passed and oracle_verify(pair),
        "source": pair.source,
    }
    record.update(extra)
    return record


@dataclass
class RunReport:
    command: list[str]
    records: list[dict[str, Any]] = field(default_factory=list)
    notes: list[dict[str, Any]] = field(default_factory=list)
    exit_status: int = EXIT_OK

    @property
    def passed(self) -> bool:
        return all(record.get("pass", False) for record in self.records)

    def summary(self) -> dict[str, Any]:
        return {
            "report": {
                "command": self.command,
                "version": __version__,
                "records": len(self.records),
                "passed": sum(bool(record.get("pass")) for record in self.records),
                "exit_status": self.exit_status,
            }
        }

    def write(self, out: TextIO) -> None:
        for line in (*self.records, *self.notes, self.summary()):
            out.write(json.dumps(line) + "\n")


# ---------------------------------------------------------------------------
# Argument types
# ---------------------------------------------------------------------------


def rational(text: str) -> Fraction:
    return parse_rational(text)


def rational_list(text: str) -> list[Fraction]:
    return [parse_rational(part) for part in text.split(",") if part.strip()]


def degree_set(text: str) -> frozenset[int]:
    degrees = frozenset(int(part) for part in text.split(",") if part.strip())
    if not degrees or min(degrees) < 1:
        raise ValueError(text)
    return degrees


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace, report: RunReport) -> None:
    pair = PowerSumPair(args.lhs, args.rhs, args.degrees, "verify")
    report.records.append(pair_record(pair))


def _gen_deg3_sym(args: argparse.Namespace) -> PowerSumPair:
    coeffs = args.coeffs or list(DEG3_SYMMETRIC_BASE)
    if len(coeffs) != 6:
        raise ConfigError(f"--coeffs needs six values A..F, got {len(coeffs)}")
    return deg3_symmetric_family(*coeffs, args.x)


def _gen_deg3_shift(args: argparse.Namespace) -> PowerSumPair:
    base_a = args.lhs or DEG3_SHIFT_BASE[0]
    base_p = args.rhs or DEG3_SHIFT_BASE[1]
    return deg3_shift_family(base_a, base_p).pair


GENERATORS: dict[str, Callable[[argparse.Namespace], PowerSumPair]] = {
    "deg2": lambda a: deg2_family(a.k),
    "deg3-shift": _gen_deg3_shift,
    "deg3-sym": _gen_deg3_sym,
    "deg4": lambda a: deg4_family(a.k),
    "deg5": lambda a: deg5_66_family(a.m),
    "deg6": lambda a: deg6_family(a.a1, a.b2, a.k),
    "deg7": lambda a: deg7_family(a.p, a.q, a.a, a.b),
    "deg8": lambda a: deg8_family(a.x, a.a, a.b),
    "deg9": lambda a: deg9_family(a.a, a.b, a.t, a.w),
}


def _cmd_gen(args: argparse.Namespace, report: RunReport) -> None:
    pair = GENERATORS[args.family](args)
    if args.canonical:
        pair = canonicalize(pair)
    report.records.append(pair_record(pair))


def _point(pt: QuarticPoint) -> dict[str, str]:
    return {"u": _number(pt.u), "v": _number(pt.v)}


def _cmd_extend(args: argparse.Namespace, report: RunReport) -> None:
    if args.degree == 8:
        for step, pt in enumerate(generate_parameters(deg8_model(), DEG8_BASE, args.steps), start=1):
            for x, a, b in deg8_parameters_from_u(pt.u):
                pair = deg8_family(x, a, b)
                report.records.append(pair_record(pair, point=_point(pt), step=step))
    else:
        bridge = deg9_bridge()
        base = bridge.to_quartic(DEG9_P)
        a, b = DEG9_AB
        for step, pt in enumerate(generate_parameters(deg9_model(a, b), base, args.steps, bridge), start=1):
            pair = deg9_family(a, b, pt.u)
            report.records.append(pair_record(pair, point=_point(pt), step=step))


def _cmd_search(args: argparse.Namespace, report: RunReport) -> None:
    spec = SearchSpec(args.degrees, args.height, args.side_len, args.signed)
    for pair in search(spec, workers=args.settings.workers, work_ceiling=args.settings.work_ceiling):
        report.records.append(pair_record(pair))


def _cmd_table_a(args: argparse.Namespace, report: RunReport) -> None:
    for row in TABLE_A:
        report.records.append(pair_record(row.pair(), note=row.note) if row.note else pair_record(row.pair()))
    if not args.audit:
        return
    for record in audit_examples():
        entry = pair_record(record.printed)
        entry["pass"] = entry["pass"] and record.matches is not False and record.error is None
        entry["reproduced"] = record.matches
        if record.error:
            entry["error"] = record.error
        report.records.append(entry)
    for erratum, holds in audit_errata():
        report.notes.append(
            {"erratum": erratum.key, "claim": erratum.claim, "resolution": erratum.resolution, "holds": holds}
        )


COMMANDS = {
    "verify": _cmd_verify,
    "gen": _cmd_gen,
    "extend": _cmd_extend,
    "search": _cmd_search,
    "table-a": _cmd_table_a,
}


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="powersum", description="Equal sums of six like powers, degrees 2 to 9")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper, default=None)
    parser.add_argument("--work-ceiling", type=int, default=None, help="search budget (side joins or candidate pairs)")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="check a pair at the given degrees")
    verify.add_argument("--degrees", type=degree_set, required=True)
    verify.add_argument("--lhs", type=rational_list, required=True)
    verify.add_argument("--rhs", type=rational_list, required=True)

    gen = sub.add_parser("gen", help="instantiate a parametric family")
    gen.add_argument("family", choices=sorted(GENERATORS))
    gen.add_argument("--canonical", action="store_true", help="print the canonical form")
    gen.add_argument("--k", type=rational, default=None)
    gen.add_argument("--m", type=rational, default=None)
    gen.add_argument("--x", type=rational, default=None)
    gen.add_argument("--t", type=rational, default=None)
    gen.add_argument("--w", type=rational, default=None)
    gen.add_argument("--a", type=rational, default=None)
    gen.add_argument("--b", type=rational, default=None)
    gen.add_argument("--a1", type=int, default=1)
    gen.add_argument("--b2", type=int, default=1)
    gen.add_argument("--p", type=int, default=None)
    gen.add_argument("--q", type=int, default=None)
    gen.add_argument("--coeffs", type=rational_list, default=None, help="A..F for deg3-sym")
    gen.add_argument("--lhs", type=rational_list, default=None, help="base A for deg3-shift")
    gen.add_argument("--rhs", type=rational_list, default=None, help="base P for deg3-shift")

    extend = sub.add_parser("extend", help="new degree-8 or degree-9 pairs from curve multiples")
    extend.add_argument("--degree", type=int, choices=(8, 9), required=True)
    extend.add_argument("--steps", type=int, default=1)

    search_parser = sub.add_parser("search", help="bounded exhaustive search")
    search_parser.add_argument("--degrees", type=degree_set, required=True)
    search_parser.add_argument("--height", type=int, required=True)
    search_parser.add_argument("--side-len", type=int, default=6)
    signs = search_parser.add_mutually_exclusive_group()
    signs.add_argument("--signed", dest="signed", action="store_true", default=None)
    signs.add_argument("--unsigned", dest="signed", action="store_false")
    search_parser.add_argument("--workers", type=int, default=None)

    table = sub.add_parser("table-a", help="verify Table A")
    table.add_argument("--audit", action="store_true", help="also reproduce the worked examples and errata")
    return parser


# deg6 defaults to k = 1; (a1, b2, k) = (1, 1, 2) is a trivial instance
_GEN_DEFAULTS = {
    "deg2": {"k": Fraction(2)},
    "deg4": {"k": Fraction(2)},
    "deg5": {"m": Fraction(2)},
    "deg6": {"k": Fraction(1)},
}

_REQUIRED_GEN = {
    "deg3-sym": ("x",),
    "deg7": ("p", "q", "a", "b"),
    "deg8": ("x", "a", "b"),
    "deg9": ("a", "b", "t"),
}


def _check_gen_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    missing = [f"--{name}" for name in _REQUIRED_GEN.get(args.family, ()) if getattr(args, name) is None]
    if missing:
        parser.error(f"gen {args.family} requires {', '.join(missing)}")
    for name, default in _GEN_DEFAULTS.get(args.family, {}).items():
        if getattr(args, name) is None:
            setattr(args, name, default)
    integral = {"deg6": ("k",), "deg7": ("a", "b")}.get(args.family, ())
    for name in integral:
        if getattr(args, name).denominator != 1:
            parser.error(f"gen {args.family} needs an integer --{name}")
        setattr(args, name, int(getattr(args, name)))


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------


def _error_record(exc: PowersumError) -> dict[str, Any]:
    record: dict[str, Any] = {"error": type(exc).__name__, "message": str(exc)}
    residual = getattr(exc, "residual", None)
    if residual is not None:
        record["residual"] = str(residual)
    return record


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> RunReport:
    """Parse ``argv``, execute the command and write its records to ``out``."""
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    report = RunReport(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "gen":
            _check_gen_args(parser, args)
    except SystemExit as exc:
        report.exit_status = EXIT_OK if exc.code in (0, None) else EXIT_USAGE
        return report

    try:
        settings = load_settings().with_overrides(
            workers=getattr(args, "workers", None),
            work_ceiling=args.work_ceiling,
            log_level=args.log_level,
        )
    except ConfigError as exc:
        print(f"powersum: error: {exc}", file=sys.stderr)
        report.exit_status = EXIT_USAGE
        return report
    configure_logging(settings.log_level)
    args.settings = settings

    try:
        COMMANDS[args.command](args, report)
    except (ConfigError, SearchTooLargeError, ValueError) as exc:
        print(f"powersum: error: {exc}", file=sys.stderr)
        report.exit_status = EXIT_USAGE
        return report
    except (ConditionError, CurveError) as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        report.notes.append(_error_record(exc))
        report.exit_status = EXIT_FAILURE
        report.write(out)
        return report

    report.exit_status = EXIT_OK if report.passed else EXIT_FAILURE
    report.write(out)
    logger.info("%s: %d records, exit status %d", args.command, len(report.records), report.exit_status)
    return report


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv).exit_status)


if __name__ == "__main__":
    main()
