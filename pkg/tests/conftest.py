import re

import pytest

from hypercolor.gen import complete_graph, complete_plus_triple, fano_plane

_CRITERION = re.compile(r"test_criterion_(\d+)")
_acceptance_results: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    match = _CRITERION.search(report.nodeid)
    if not match:
        return
    num = int(match.group(1))
    label = report.nodeid.split("::")[-1]
    _acceptance_results[num] = (label, report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_acceptance_results):
        label, outcome = _acceptance_results[num]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {verdict}  ({label})")


@pytest.fixture(scope="session")
def k4():
    return complete_graph(4)


@pytest.fixture(scope="session")
def k5():
    return complete_graph(5)


@pytest.fixture(scope="session")
def k4_plus_triple():
    return complete_plus_triple(4)


@pytest.fixture(scope="session")
def fano():
    return fano_plane()
