import random
from itertools import permutations
from math import prod

import pytest

from detlab.matrix import IntMatrix, allow_long_int_strings

allow_long_int_strings()

_acceptance: list[tuple[str, str]] = []


def leibniz_det(m: IntMatrix) -> int:
    """Sum over permutations; shares nothing with the library's algorithms."""
    n = m.rows
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = prod(m[i, perm[i]] for i in range(n))
        total += -term if inversions % 2 else term
    return total


def random_matrix(rng: random.Random, n: int, lo: int = -999, hi: int = 999, cols: int | None = None) -> IntMatrix:
    cols = n if cols is None else cols
    return IntMatrix(n, cols, tuple(rng.randint(lo, hi) for _ in range(n * cols)))


@pytest.fixture
def rng(request):
    return random.Random(request.node.name)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome.upper()))


def pytest_terminal_summary(terminalreporter):
    if _acceptance:
        terminalreporter.section("acceptance criteria")
        for name, outcome in _acceptance:
            terminalreporter.write_line(f"{outcome:7} {name}")
