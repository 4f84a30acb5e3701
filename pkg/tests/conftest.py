import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    key = mark.args
    if rep.failed:
        _acceptance[key] = "FAIL"
    elif rep.when == "call" and rep.passed:
        _acceptance.setdefault(key, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), status in sorted(_acceptance.items()):
        terminalreporter.write_line(f"[{status}] criterion {num}: {title}")
