import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

ACCEPTANCE = "test_acceptance.py::"


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if ACCEPTANCE not in nodeid or getattr(rep, "when", "call") != "call":
                continue
            name = nodeid.split("::", 1)[1]
            lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in sorted(lines):
        terminalreporter.write_line(f"{status}  {name}")
