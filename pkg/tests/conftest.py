import pytest

from ordgroups.presentation import bundled, nonLO_case_analysis

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def weeks():
    return bundled("weeks")


@pytest.fixture(scope="session")
def klein():
    return bundled("klein")


@pytest.fixture(scope="session")
def trefoil():
    return bundled("trefoil")


@pytest.fixture(scope="session")
def b3():
    return bundled("b3")


@pytest.fixture(scope="session")
def brieskorn():
    return bundled("brieskorn237")


@pytest.fixture(scope="session")
def weeks_analysis(weeks):
    return nonLO_case_analysis(weeks)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
