from __future__ import annotations

import pytest

ACCEPTANCE_LINES = pytest.StashKey[list]()


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run slow checks")


def pytest_configure(config):
    config.stash[ACCEPTANCE_LINES] = []


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def report_line(request):
    """Record one summary line; all lines are printed after the run."""
    return request.config.stash[ACCEPTANCE_LINES].append


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_LINES, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines, key=_criterion_order):
        terminalreporter.write_line(line)


def _criterion_order(line: str):
    head = line.split(":", 1)[0].split()
    num = head[1] if len(head) > 1 else ""
    digits = "".join(ch for ch in num if ch.isdigit())
    return (int(digits) if digits else 99, line)
