"""Shared pytest hooks: one summary line per acceptance check.

Tests named ``test_criterion_*`` in test_acceptance.py each cover one
numbered acceptance item; this plugin prints a single PASS/FAIL line per
item at the end of the run so the verdicts are visible without digging
through the full report.
"""

from __future__ import annotations

import re

# Free-form detail strings tests may attach via the `acceptance_notes`
# fixture, keyed by criterion label.
NOTES: dict[str, str] = {}

_OUTCOME_WORD = {
    "passed": "PASS",
    "failed": "FAIL",
    "error": "ERROR",
    "skipped": "SKIP",
    "xfailed": "FAIL (expected; see notes)",
    "xpassed": "UNEXPECTED PASS",
}


import pytest


@pytest.fixture(scope="session")
def acceptance_notes():
    return NOTES


def pytest_collection_modifyitems(config, items):
    lines = getattr(config, "_acceptance_lines", {})
    for item in items:
        if "test_acceptance.py" in item.nodeid and item.name.startswith("test_criterion"):
            doc = (item.function.__doc__ or "").strip().splitlines()
            lines[item.nodeid] = doc[0] if doc else item.name
    config._acceptance_lines = lines


def _criterion_key(nodeid: str) -> tuple:
    match = re.search(r"test_criterion_(\d+)", nodeid)
    return (int(match.group(1)) if match else 99, nodeid)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", {})
    if not lines:
        return
    results: dict[str, str] = {}
    for outcome in ("passed", "failed", "error", "skipped", "xfailed", "xpassed"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", None)
            if nodeid in lines and nodeid not in results:
                results[nodeid] = _OUTCOME_WORD[outcome]
    if not results:
        return
    writer = terminalreporter
    writer.section("acceptance summary")
    for nodeid in sorted(results, key=_criterion_key):
        writer.write_line(f"{results[nodeid]:<30} {lines[nodeid]}")
    for label in sorted(NOTES):
        writer.write_line(f"note [{label}]: {NOTES[label]}")
