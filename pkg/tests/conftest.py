"""Shared fixtures: the acceptance gate records one line per criterion and a
terminal-summary hook prints them after the run, visible even with output
capture on."""

import pytest


@pytest.fixture(scope="session")
def criteria(request):
    lines: list[str] = []
    request.config._criteria_lines = lines
    return lines


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_criteria_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
