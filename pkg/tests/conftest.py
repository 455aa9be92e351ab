import pytest

# criterion number -> (title, list of booleans from its checks)
ACCEPTANCE: dict[int, tuple[str, list[bool]]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, outcomes = ACCEPTANCE[num]
        status = "PASS" if outcomes and all(outcomes) else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {num:2d}: {title}")
