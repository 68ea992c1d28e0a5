import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qim import Quiver  # noqa: E402
from qim.quiver import admissible_trees  # noqa: E402

QUIVER_DIR = Path(__file__).resolve().parent.parent / "quivers"

A2 = Quiver(2, ((1, 2),))
A3 = Quiver(3, ((1, 2), (2, 3)))
D4 = Quiver(4, ((1, 2), (3, 2), (4, 2)))
D4_RIGHT = Quiver(4, ((1, 2), (2, 3), (4, 2)))
EQ6 = Quiver(6, ((1, 2), (3, 2), (4, 3), (4, 5), (5, 6)))
EQ6_EXT = Quiver(6, ((1, 2), (3, 2), (4, 3), (4, 5), (6, 5)))
EX26 = Quiver(9, ((1, 2), (2, 3), (4, 3), (5, 4), (5, 6), (6, 7), (7, 8), (9, 8)))
SINK3 = Quiver(3, ((1, 2), (3, 2)))
SOURCE3 = Quiver(3, ((2, 1), (2, 3)))


@lru_cache(maxsize=None)
def trees_up_to(n):
    return tuple(q for k in range(2, n + 1) for q in admissible_trees(k))


@pytest.fixture
def quiver_dir():
    return QUIVER_DIR


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS):
        terminalreporter.write_line(line)
