"""Shared pytest configuration: per-criterion pass/fail summary."""

import pytest

_CRITERIA: dict[int, bool] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    num = getattr(report, "criterion", None)
    if num is None:
        return
    _CRITERIA[num] = _CRITERIA.get(num, True) and report.passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {num}: {'PASS' if _CRITERIA[num] else 'FAIL'}")
