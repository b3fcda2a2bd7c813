"""
CLI module: request validation, the scan runner and the argparse front end
"""

from qfactors.cli.commands import build_parser, main
from qfactors.cli.request import ScanRequest, UsageError
from qfactors.cli.runner import (
    IdentityReport,
    exit_code,
    run_classic,
    run_conjecture_scan,
    run_identities,
    run_verify,
)

__all__ = [
    "build_parser",
    "main",
    "ScanRequest",
    "UsageError",
    "IdentityReport",
    "exit_code",
    "run_classic",
    "run_conjecture_scan",
    "run_identities",
    "run_verify",
]
