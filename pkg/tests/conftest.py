"""Shared test plumbing: a summary section for the acceptance checks."""

_LINES = []


def record(line: str):
    _LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _LINES:
        return
    terminalreporter.section("acceptance")
    for line in _LINES:
        terminalreporter.write_line(line)
