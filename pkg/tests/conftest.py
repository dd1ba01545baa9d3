import pytest

from sturmian_refine.exact_circle import AlphaSpec

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def golden():
    return AlphaSpec.golden()


@pytest.fixture(scope="session")
def silver():
    return AlphaSpec.silver()


@pytest.fixture(scope="session")
def cf12():
    return AlphaSpec.from_cf([], [1, 2])


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
