"""Shared test plumbing.

The acceptance tests append one human-readable line per criterion; the
terminal-summary hook below prints them after the run regardless of
output capture, so `pytest -v` always shows the pass/fail ledger.
"""

from __future__ import annotations

import random

import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240811)


@pytest.fixture(scope="session")
def criteria_log():
    def append(line: str) -> None:
        ACCEPTANCE_LINES.append(line)
        print(line)

    return append


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
