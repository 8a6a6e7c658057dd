import sys

import pytest

from icosa5.verify import get_model


@pytest.fixture(scope="session")
def model():
    return get_model()


@pytest.fixture(scope="session")
def graph(model):
    return model.graph


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        title, ok = results[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n:2d}. {title}")
