from __future__ import annotations

import sys
from collections import Counter

import pytest
from sympy.utilities.iterables import partitions as sympy_partitions


def brute_partitions(n):
    """All partitions of n via sympy, as weakly decreasing tuples."""
    if n == 0:
        return [()]
    out = []
    for mult in sympy_partitions(n):
        parts = []
        for value in sorted(mult, reverse=True):
            parts.extend([value] * mult[value])
        out.append(tuple(parts))
    return out


def brute_p_regular(n, p):
    return sorted(
        lam for lam in brute_partitions(n) if all(c < p for c in Counter(lam).values())
    )


@pytest.fixture
def p_regular():
    return brute_p_regular


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "CRITERIA_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for key in sorted(lines):
            terminalreporter.write_line(lines[key])
