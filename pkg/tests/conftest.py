"""Shared pytest configuration.

The acceptance tests append one PASS/FAIL line per criterion to
ACCEPTANCE_LINES; the terminal-summary hook prints them in a dedicated
section so the verdicts are visible even when stdout capture is on.
"""

from __future__ import annotations

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
