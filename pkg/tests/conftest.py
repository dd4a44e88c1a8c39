"""Shared pytest plumbing.

The acceptance module appends its one-line-per-criterion reports here so
they appear in the terminal summary even under pytest's output capture.
"""

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
