import pytest

from boxvar import PhysicalParams

# filled by tests/test_acceptance.py, printed after the run
CRITERIA: list[str] = []


@pytest.fixture
def natural():
    return PhysicalParams()


@pytest.fixture
def dimensional():
    # deliberately far from natural units
    return PhysicalParams(mass=2.5, omega=0.7, hbar=1.3)


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA:
            terminalreporter.write_line(line)
