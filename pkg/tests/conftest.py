import pytest

ACCEPTANCE: dict = {}


def record(number: int, title: str, status: str, seconds: float, limit: float, detail: str = ""):
    line = f"criterion {number:>2} [{status}] {title} ({seconds:.1f}s of {limit:.0f}s){detail}"
    ACCEPTANCE[number] = line
    print(line)


@pytest.fixture
def acceptance():
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])
