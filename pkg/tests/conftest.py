import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from clutterlab import make_simple  # noqa: E402

INSTANCES = {
    "E1": (2, [[1, 2]]),
    "P3": (3, [[1, 2], [2, 3]]),
    "C3": (3, [[1, 2], [2, 3], [1, 3]]),
    "C4": (4, [[1, 2], [2, 3], [3, 4], [1, 4]]),
    "C5": (5, [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]]),
    "K4": (4, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]),
    "Q6": (6, [[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]]),
}


def hg(name):
    n, edges = INSTANCES[name]
    return make_simple(n, edges)


@pytest.fixture
def E1():
    return hg("E1")


@pytest.fixture
def C3():
    return hg("C3")


@pytest.fixture
def C4():
    return hg("C4")


@pytest.fixture
def Q6():
    return hg("Q6")


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {text}")
