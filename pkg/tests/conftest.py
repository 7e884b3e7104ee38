"""Shared pytest wiring: echo the acceptance-criteria lines after the run."""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(results):
        line = f"criterion {number:2d} ({title}): {'PASS' if ok else 'FAIL'}"
        if detail and not ok:
            line += f" - {detail}"
        terminalreporter.write_line(line)
