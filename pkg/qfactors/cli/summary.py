"""
Summary Table

Human-readable rendering of a run for standard error.
"""

from collections import Counter
from typing import Iterable, List

from jinja2 import Environment

from qfactors.congruence.report import CongruenceReport
from qfactors.cli.runner import IdentityReport

_env = Environment(trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=True)

REPORT_TABLE = _env.from_string(
    """\
{{ "%-16s %-28s %-16s %-15s %-9s %10s"|format("family", "params", "modulus", "verdict", "engine", "ms") }}
{% for row in rows %}
{{ "%-16s %-28s %-16s %-15s %-9s %10s"|format(row.family, row.params, row.modulus, row.verdict, row.engine, row.ms) }}
{% endfor %}
{{ total }} instances: {% for verdict, count in counts %}{{ count }} {{ verdict }}{% if not loop.last %}, {% endif %}{% endfor %}

"""
)

IDENTITY_TABLE = _env.from_string(
    """\
{% for report in reports %}
{{ "%-26s %6d checked %4d failed"|format(report.identity, report.checked, report.failures|length) }}
{% endfor %}
"""
)


def _format_params(params: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in params.items() if v is not None)


def render_reports(reports: Iterable[CongruenceReport]) -> str:
    reports = list(reports)
    rows: List[dict] = [
        {
            "family": r.family + ("*" if r.conjecture else ""),
            "params": _format_params(r.params),
            "modulus": r.modulus_label,
            "verdict": r.verdict.value,
            "engine": r.engine.value,
            "ms": "" if r.elapsed_ms is None else f"{r.elapsed_ms:.1f}",
        }
        for r in reports
    ]
    counts = sorted(Counter(r.verdict.value for r in reports).items())
    return REPORT_TABLE.render(rows=rows, total=len(reports), counts=counts)


def render_identities(reports: Iterable[IdentityReport]) -> str:
    return IDENTITY_TABLE.render(reports=list(reports))
