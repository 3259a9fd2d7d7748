# Standard library:
from __future__ import annotations
from typing import Any, NamedTuple
import json
import math

# Third party:
from rich.console import Console
from rich.table import Table


REPORT_VERSION = "1.0"


class Case(NamedTuple):
    """One checked identity: observed residual against its tolerance, with the relation it checks."""
    id: str
    params: dict[str, Any]
    residual: float
    tolerance: float
    error: str | None = None
    identity: str = ""

    @property
    def passed(self) -> bool:
        return self.error is None and math.isfinite(self.residual) and self.residual <= self.tolerance


class SuiteResult(NamedTuple):
    name: str
    cases: tuple[Case, ...]

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)


class VerificationReport(NamedTuple):
    environment: dict[str, Any]
    suites: tuple[SuiteResult, ...]
    version: str = REPORT_VERSION

    @property
    def total(self) -> int:
        return sum(len(s.cases) for s in self.suites)

    @property
    def failed(self) -> int:
        return sum(not c.passed for s in self.suites for c in s.cases)

    @property
    def passed(self) -> bool:
        return self.failed == 0


def _number(value: Any) -> Any:
    """JSON-safe scalar: complex -> [re, im], non-finite -> None."""
    if isinstance(value, complex):
        return [_number(value.real), _number(value.imag)]
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, (list, tuple)):
        return [_number(v) for v in value]
    return value


def case_to_dict(case: Case) -> dict[str, Any]:

    data: dict[str, Any] = {
        "id": case.id,
        "identity": case.identity,
        "params": {k: _number(v) for k, v in case.params.items()},
        "residual": _number(float(case.residual)),
        "tolerance": case.tolerance,
        "pass": case.passed,
    }
    if case.error is not None:
        data["error"] = case.error
    return data


def report_to_dict(report: VerificationReport) -> dict[str, Any]:

    return {
        "version": report.version,
        "environment": report.environment,
        "suites": [
            {"name": suite.name, "pass": suite.passed, "cases": [case_to_dict(c) for c in suite.cases]}
            for suite in report.suites
        ],
        "totals": {"cases": report.total, "passed": report.total - report.failed, "failed": report.failed},
    }


def dumps(report: VerificationReport) -> str:
    """The report as one JSON document; identical runs give identical bytes."""
    return json.dumps(report_to_dict(report), indent=2, allow_nan=False) + "\n"


def report_rows(report: VerificationReport) -> list[list[str]]:
    """Flat rows suite,id,identity,residual,tolerance,pass for CSV output."""
    rows = []
    for suite in report.suites:
        for case in suite.cases:
            rows.append([suite.name, case.id, case.identity, repr(float(case.residual)), repr(case.tolerance), str(case.passed).lower()])
    return rows


def render_summary(report: VerificationReport, console: Console) -> None:
    """Per-suite pass counts and worst residual ratio as a rich table."""
    table = Table(title="verification summary")
    table.add_column("suite")
    table.add_column("cases", justify="right")
    table.add_column("failed", justify="right")
    table.add_column("worst residual / tolerance", justify="right")
    table.add_column("status")

    for suite in report.suites:
        failed = sum(not c.passed for c in suite.cases)
        ratios = [c.residual / c.tolerance for c in suite.cases if math.isfinite(c.residual)]
        worst = f"{max(ratios):.2e}" if ratios else "-"
        status = "[green]pass[/green]" if suite.passed else "[red]FAIL[/red]"
        table.add_row(suite.name, str(len(suite.cases)), str(failed), worst, status)

    console.print(table)
    console.print(f"{report.total - report.failed}/{report.total} cases passed")
