import os
import sys

import pytest
from hypothesis import settings, strategies as hst

from certgame.boolfn import PartialBooleanFunction, to_str

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=40, deadline=None, derandomize=True)
settings.load_profile("default")

CRITERIA = {}


def record(number: int, title: str, passed: bool, detail: str = "") -> None:
    CRITERIA[number] = (title, passed, detail)


@hst.composite
def partial_functions(draw, min_n=1, max_n=3):
    """Partial functions with at least one input of each value."""
    n = draw(hst.integers(min_n, max_n))
    cells = draw(hst.lists(hst.sampled_from([0, 1, None]), min_size=1 << n, max_size=1 << n))
    values = {to_str(c, n): v for c, v in enumerate(cells) if v is not None}
    if len(set(values.values())) < 2:
        values[to_str(0, n)] = 0
        values[to_str((1 << n) - 1, n)] = 1
    return PartialBooleanFunction(n, values)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        title, passed, detail = CRITERIA[number]
        line = "criterion %d %s: %s" % (number, "PASS" if passed else "FAIL", title)
        if detail:
            line += " | " + detail
        terminalreporter.write_line(line)
