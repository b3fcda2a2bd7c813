"""
Command-Line Interface

Subcommands:
    verify    theorem and parametric families
    scan      conjecture families
    identity  product identities and the q-binomial vanishing
    classic   the p-adic supercongruence and its q-analogue

Exit status: 0 when nothing failed, 1 when any instance failed, 2 for usage
or internal errors.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Iterable, List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from qfactors import __version__
from qfactors.config import Settings
from qfactors.congruence.checker import MODULUS_CHOICES, EngineDisagreementError
from qfactors.congruence.report import CongruenceReport
from qfactors.series.catalog import FAMILY_CATALOG
from qfactors.cli.request import ScanRequest, UsageError
from qfactors.cli.runner import (
    exit_code,
    run_classic,
    run_conjecture_scan,
    run_identities,
    run_verify,
)
from qfactors.cli.summary import render_identities, render_reports

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _add_scan_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", required=True, help="catalog family identifier")
    parser.add_argument("--d", type=int, nargs="+", default=[], help="values of d")
    parser.add_argument("--r", type=int, nargs="+", default=[], help="values of r")
    parser.add_argument("--m", type=int, nargs="+", default=[], help="values of m")
    parser.add_argument("--n", type=int, help="a single n")
    parser.add_argument("--n-min", type=int, default=2, help="smallest n (default 2)")
    parser.add_argument("--n-max", type=int, help="largest n")
    parser.add_argument("--modulus", choices=sorted(MODULUS_CHOICES), help="override the family's modulus")
    parser.add_argument("--engine", choices=["auto", "exact", "quotient", "both"])
    parser.add_argument("--jobs", type=int, help="worker processes")
    parser.add_argument("--out", help="JSON-lines output file (default: standard output)")
    parser.add_argument(
        "--force-inadmissible",
        action="store_true",
        help="also run n outside the family's residue classes",
    )
    parser.add_argument("--verbose", action="store_true", help="report skipped n as well")
    parser.add_argument("--timings", action="store_true", help="write elapsed_ms to the output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfactors",
        description="Verify cyclotomic divisibility of truncated q-hypergeometric sums",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    sub = parser.add_subparsers(dest="cmd", required=True)

    verify = sub.add_parser("verify", help="theorem and parametric families")
    _add_scan_arguments(verify)
    scan = sub.add_parser("scan", help="conjecture families")
    _add_scan_arguments(scan)

    identity = sub.add_parser("identity", help="q-binomial and cyclotomic identities")
    identity.add_argument("--n-max", type=int, default=20)
    identity.add_argument("--m-max", type=int, default=6)
    identity.add_argument("--out")

    classic = sub.add_parser("classic", help="p-adic and q-analogue supercongruences")
    classic.add_argument("--n-min", type=int, default=3)
    classic.add_argument("--n-max", type=int, default=15)
    classic.add_argument("--out")
    classic.add_argument("--timings", action="store_true")

    sub.add_parser("families", help="list the family catalog")
    return parser


def build_request(args: argparse.Namespace, settings: Settings) -> ScanRequest:
    """
    Raises:
        UsageError: If no n range is given
        pydantic.ValidationError: If the request is malformed
    """
    if args.n is not None:
        n_range = (args.n, args.n)
    elif args.n_max is not None:
        n_range = (args.n_min, args.n_max)
    else:
        raise UsageError("give --n or --n-max")
    return ScanRequest(
        family=args.family,
        d=args.d,
        r=args.r,
        m=args.m,
        n_range=n_range,
        modulus=args.modulus,
        engine=args.engine or settings.engine,
        out=args.out,
        jobs=args.jobs if args.jobs is not None else settings.jobs,
        force_inadmissible=args.force_inadmissible,
        verbose=args.verbose,
        timings=args.timings or settings.timings,
    )


def write_lines(lines: Iterable[str], out: Optional[str]) -> None:
    text = "".join(f"{line}\n" for line in lines)
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info(f"wrote {out}")
    else:
        sys.stdout.write(text)


def write_reports(reports: List[CongruenceReport], out: Optional[str], timings: bool) -> None:
    write_lines((report.to_json_line(timings) for report in reports), out)
    sys.stderr.write(render_reports(reports))


def _list_families() -> int:
    for name, entry in FAMILY_CATALOG.items():
        params = ",".join(entry.param_names) or "-"
        sys.stdout.write(f"{name:<16} {entry.role:<11} {params:<5} {entry.modulus:<9} {entry.description}\n")
    return 0


def dispatch(args: argparse.Namespace, settings: Settings) -> int:
    if args.cmd in ("verify", "scan"):
        request = build_request(args, settings)
        run = run_verify if args.cmd == "verify" else run_conjecture_scan
        reports = run(request)
        write_reports(reports, request.out, request.timings)
        return exit_code(reports)
    if args.cmd == "classic":
        if args.n_min > args.n_max:
            raise UsageError(f"empty n range {args.n_min}..{args.n_max}")
        reports = run_classic(args.n_min, args.n_max)
        write_reports(reports, args.out, args.timings or settings.timings)
        return exit_code(reports)
    if args.cmd == "identity":
        if args.n_max < 1 or args.m_max < 1:
            raise UsageError("--n-max and --m-max must be positive")
        identities = run_identities(args.n_max, args.m_max)
        write_lines((report.model_dump_json() for report in identities), args.out)
        sys.stderr.write(render_identities(identities))
        return 0 if all(report.passed for report in identities) else 1
    if args.cmd == "families":
        return _list_families()
    raise UsageError(f"unknown command: {args.cmd}")


def main(argv: Optional[List[str]] = None) -> int:
    # Load environment variables first
    load_dotenv()
    try:
        settings = Settings.from_env()
    except ValidationError as exc:
        sys.stderr.write(f"invalid QFACTORS_* settings: {exc}\n")
        return 2
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level or settings.log_level, format=LOG_FORMAT, stream=sys.stderr
    )
    try:
        return dispatch(args, settings)
    except (UsageError, ValidationError) as exc:
        logger.error(f"usage error: {exc}")
        return 2
    except EngineDisagreementError as exc:
        logger.error(f"internal error: {exc}")
        return 2
