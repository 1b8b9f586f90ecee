import os
import sys

import pytest
from hypothesis import settings

# make tests/oracles.py importable as a plain module
sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(k, title)`` returns a recorder."""
    lines = request.config.stash.setdefault(ACCEPTANCE, [])
    state = {}

    def start(k, title):
        state.update(k=k, title=title)

    yield start
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    lines.append(f"criterion {state['k']}: {'PASS' if ok else 'FAIL'}  {state['title']}")


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        item.rep_call = rep
    return rep


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
