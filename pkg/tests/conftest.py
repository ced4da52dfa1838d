"""Collects one pass/fail line per acceptance criterion.

Acceptance tests call ``record_criterion`` before their asserts so the
summary stays honest even for expected failures; the hook prints the lines
after the normal pytest output.
"""

CRITERION_LINES: dict[int, tuple[str, bool, str]] = {}


def record_criterion(num: int, description: str, passed: bool,
                     detail: str = ""):
    CRITERION_LINES[num] = (description, passed, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERION_LINES):
        description, passed, detail = CRITERION_LINES[num]
        status = "PASS" if passed else "FAIL"
        line = f"criterion {num}: {status} - {description}"
        if detail:
            line += f" [{detail}]"
        terminalreporter.write_line(line)
