"""Acceptance reporting: one visible pass/fail line per criterion."""

_LINES = []


def record_acceptance(number, description, ok):
    line = f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {description}"
    _LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES):
            terminalreporter.write_line(line)
