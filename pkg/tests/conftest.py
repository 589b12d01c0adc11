import sys

import pytest

from degseq_exclusion.enumeration import Universe


@pytest.fixture(scope="session")
def universe7():
    return Universe(7)


@pytest.fixture(scope="session")
def universe8():
    return Universe(8)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
