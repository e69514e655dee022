import pytest

ACCEPTANCE_RESULTS = {}


@pytest.fixture
def record_criterion():
    def record(number, title, ok, detail=""):
        ACCEPTANCE_RESULTS[number] = (title, ok, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, ok, detail = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail}")
