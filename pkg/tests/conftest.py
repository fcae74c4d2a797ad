import os
import sys

import hypothesis
import pytest

from gisemi.graph import g1, ladder, rose

hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


@pytest.fixture(scope="session")
def G1():
    return g1()


@pytest.fixture(scope="session")
def rose2():
    return rose(2)


@pytest.fixture(scope="session")
def ladder4():
    return ladder(4)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS.values():
            terminalreporter.write_line(line)
