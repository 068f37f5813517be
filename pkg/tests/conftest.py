"""Shared fixtures and the acceptance-criteria summary hook."""

from __future__ import annotations

import pytest

# (criterion name, passed) tuples recorded by tests/test_acceptance.py
_ACCEPTANCE_RESULTS: list[tuple[str, bool]] = []


@pytest.fixture
def acceptance_report():
    """Record a per-criterion verdict for the terminal summary."""

    def record(name: str, ok: bool) -> None:
        _ACCEPTANCE_RESULTS.append((name, ok))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in _ACCEPTANCE_RESULTS:
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{verdict}] {name}")
