import math

import pytest

DISCRIMINANTS = (-3, -4, -7, -8, -11, -15, -19, -20, -23, -24)
LEVELS = ((1, 1), (2, 1), (3, 1), (5, 1), (1, 6), (1, 10))

COPRIME_PAIRS = tuple(
    (a, b)
    for i, a in enumerate(DISCRIMINANTS)
    for b in DISCRIMINANTS[i + 1 :]
    if math.gcd(a, b) == 1 and math.isqrt(a * b) ** 2 != a * b
)

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
