"""Collects per-criterion outcomes of the acceptance suite and prints one line each."""

from __future__ import annotations

_outcomes: dict = {}
_titles: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            num, title = mark.args
            _titles[num] = title
            item.user_properties.append(("criterion", num))


def pytest_runtest_logreport(report):
    num = dict(report.user_properties).get("criterion")
    if num is None:
        return
    ok = _outcomes.get(num, True)
    if report.failed or (report.when == "call" and report.skipped):
        ok = False
    _outcomes[num] = ok


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_outcomes):
        status = "PASS" if _outcomes[num] else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {status}  {_titles.get(num, '')}")
