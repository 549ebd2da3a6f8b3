"""Collect one pass/fail line per acceptance criterion and print them
in the terminal summary, where output capture cannot hide them."""

import re

_CRITERION = re.compile(r"test_criterion_(\d{2})_")

_results: dict[int, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    match = _CRITERION.search(report.nodeid)
    if not match:
        return
    num = int(match.group(1))
    if report.passed:
        line = None
        for name, value in report.user_properties:
            if name == "criterion":
                line = str(value)
        _results[num] = line or f"criterion {num}: PASS"
    elif report.failed:
        _results[num] = f"criterion {num}: FAIL ({report.nodeid})"
    else:
        _results[num] = f"criterion {num}: SKIPPED ({report.nodeid})"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        terminalreporter.write_line(_results[num])
