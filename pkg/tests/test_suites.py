import math

import numpy as np
import pytest

from rbf_fock.config import Settings
from rbf_fock.errors import ConfigError, ContextError
from rbf_fock.report import dumps
from rbf_fock.suites import IDENTITIES, SUITES, CaseLog, run_all, run_suite, selected_suites


def test_registry_order_is_kept():
    assert selected_suites(Settings()) == list(SUITES)
    assert selected_suites(Settings(suites=("gram", "position"))) == ["position", "gram"]


def test_unknown_suite():
    with pytest.raises(ConfigError):
        selected_suites(Settings(suites=("position", "telepathy")))


@pytest.mark.parametrize("name", ["position", "gram", "factorization"])
def test_cheap_suites_pass(name):
    result = run_suite(name, Settings())
    assert result.cases
    assert result.passed, [c for c in result.cases if not c.passed]


def test_suite_runs_once_per_gamma():
    result = run_suite("position", Settings(gammas=(0.5, 2.0)))
    assert [c.params["gamma"] for c in result.cases[:1]] == [0.5]
    assert len(result.cases) == 8
    assert result.passed


def test_global_tolerance_override_fails_cases():
    result = run_suite("factorization", Settings(tolerance=1e-300))
    assert not result.passed
    assert all(c.tolerance == 1e-300 for c in result.cases)


def test_report_is_reproducible():
    settings = Settings(suites=("gram", "mercer"), seed=11)
    first, second = run_all(settings), run_all(settings, workers=1)
    assert dumps(first) == dumps(second)
    assert [s.name for s in first.suites] == ["mercer", "gram"]
    assert first.environment["seed"] == 11


def test_case_log_turns_library_errors_into_failures():
    log = CaseLog("weyl", None)

    def boom() -> float:
        raise ContextError("gamma mismatch")

    log.check("broken", {}, boom)
    log.check("fine", {}, lambda: 0.0)
    broken, fine = log.cases
    assert not broken.passed and broken.error == "gamma mismatch" and math.isnan(broken.residual)
    assert fine.passed and fine.tolerance == 1e-7


@pytest.mark.parametrize("exc", [np.linalg.LinAlgError("singular matrix"), ZeroDivisionError("division by zero"),
                                 FloatingPointError("overflow")])
def test_case_log_turns_numerical_failures_into_failures(exc):
    log = CaseLog("gram", None)

    def boom() -> float:
        raise exc

    log.check("gram-psd", {"gamma": 1.0}, boom)
    log.check("gram-two-point-spectrum", {"gamma": 1.0}, lambda: 0.0)
    broken, fine = log.cases
    assert not broken.passed and math.isnan(broken.residual)
    assert broken.error == str(exc)
    assert fine.passed


def test_case_log_fills_identity():
    log = CaseLog("bargmann", None)
    log.check("rbf-bargmann-unitarity/coefficient", {}, lambda: 0.0)
    log.check("custom", {}, lambda: 0.0, identity="f = f")
    routed, custom = log.cases
    assert routed.identity == IDENTITIES["rbf-bargmann-unitarity"]
    assert custom.identity == "f = f"


def test_every_case_names_its_identity():
    report = run_all(Settings(suites=("position", "gram", "factorization", "weyl")))
    for suite in report.suites:
        for case in suite.cases:
            assert case.identity, case.id
    assert report.suites[0].cases[0].identity.startswith("K_gamma(z,w) = exp(")


def test_default_run_passes():
    report = run_all(Settings())
    assert [s.name for s in report.suites] == list(SUITES)
    assert report.passed, [(s.name, c.id, c.residual) for s in report.suites for c in s.cases if not c.passed]


def test_run_passes_for_three_widths():
    report = run_all(Settings(gammas=(0.5, 1.0, 2.0)))
    assert {c.params["gamma"] for s in report.suites for c in s.cases} == {0.5, 1.0, 2.0}
    assert report.passed, [(s.name, c.id, c.params["gamma"], c.residual) for s in report.suites for c in s.cases if not c.passed]
