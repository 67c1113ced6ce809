import pytest


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def report_criterion(request):
    """Print one PASS/FAIL line and keep it for the end-of-run summary."""
    lines = request.config._acceptance_lines

    def emit(number: int, ok: bool, detail: str) -> None:
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
        print(line)
        lines.append(line)

    return emit


def pytest_terminal_summary(terminalreporter, config):
    if config._acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in config._acceptance_lines:
            terminalreporter.write_line(line)
