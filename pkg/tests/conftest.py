from __future__ import annotations

import pytest

_OUTCOMES: dict = {}
_TITLES: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    _TITLES[number] = title
    if hasattr(report, "wasxfail") and report.skipped:
        state = "xfail"
    elif report.failed:
        state = "failed"
    elif report.when == "call" and report.passed:
        state = "passed"
    else:
        return
    _OUTCOMES.setdefault(number, {})[item.name] = state


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_OUTCOMES):
        states = _OUTCOMES[number]
        ok = all(s == "passed" for s in states.values())
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {_TITLES[number]}"
        xfailed = sorted(name for name, s in states.items() if s == "xfail")
        failed = sorted(name for name, s in states.items() if s == "failed")
        if xfailed:
            line += f"  [expected failure: {', '.join(xfailed)}]"
        if failed:
            line += f"  [failed: {', '.join(failed)}]"
        terminalreporter.write_line(line)
