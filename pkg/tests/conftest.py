import sys


def pytest_terminal_summary(terminalreporter):
    """Print the acceptance verdicts, one line per criterion, after the run."""
    module = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    lines = getattr(module, "VERDICTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(lines):
        terminalreporter.write_line(lines[number])
