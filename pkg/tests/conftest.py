from __future__ import annotations

from collections import defaultdict

import pytest

from aisw import WellConfig

_CRITERIA: dict[int, dict] = defaultdict(lambda: {"title": "", "results": []})


@pytest.fixture(scope="session")
def reference_well() -> WellConfig:
    return WellConfig(a=3.0, V0=100.0, m=0.5, hbar=1.0)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _CRITERIA[number]
    entry["title"] = title
    if report.when == "call" or (report.when == "setup" and not report.passed):
        entry["results"].append((item.name, report.passed and not hasattr(report, "wasxfail")))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        failed = [name for name, ok in entry["results"] if not ok]
        status = "PASS" if entry["results"] and not failed else "FAIL"
        line = f"criterion {number}: {status}  {entry['title']}"
        if failed:
            line += f"  (failing: {', '.join(failed)})"
        terminalreporter.write_line(line)
