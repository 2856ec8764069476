import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, summary): acceptance criterion checked by the test")


_criteria = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            _criteria[item.nodeid] = [mark.args[0], mark.args[1], "NOT RUN", 0.0]


def pytest_runtest_logreport(report):
    entry = _criteria.get(report.nodeid)
    if entry is None:
        return
    if report.when == "call" or report.failed:
        entry[2] = "PASS" if report.passed and entry[2] != "FAIL" else "FAIL"
        entry[3] += report.duration


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, summary, status, secs in sorted(_criteria.values()):
        terminalreporter.write_line(f"{status} criterion {number:>2} ({secs:6.2f}s): {summary}")
