import pytest

from braidsurf import complement_presentation, load_fixture

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def fac1():
    return load_fixture("auroux1.fac")


@pytest.fixture(scope="session")
def fac2():
    return load_fixture("auroux2.fac")


@pytest.fixture(scope="session")
def pres1(fac1):
    return complement_presentation(fac1)


@pytest.fixture(scope="session")
def pres2(fac2):
    return complement_presentation(fac2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
