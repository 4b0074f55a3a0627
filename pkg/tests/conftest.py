from __future__ import annotations

import itertools

import pytest

from digroups import core
from digroups.enumeration import constructive_enumerate
from digroups.groups import named_group_digroup
from digroups.transform import build, ex4_spec

# EX4 element indices: l[s; f] with f in {1, σ}, index = (f == σ) * 2 + s
L01, L11, L0S, L1S = 0, 1, 2, 3


def naive_is_digroup(left, right) -> tuple[bool, tuple[int, ...]]:
    """Direct transcription of the axioms with plain loops; independent of the
    vectorized checker."""
    n = len(left)
    lp = lambda x, y: left[x][y]
    rp = lambda x, y: right[x][y]
    for x, y, z in itertools.product(range(n), repeat=3):
        a = lp(x, lp(y, z))
        if not (a == lp(lp(x, y), z) == lp(x, rp(y, z))):
            return False, ()
        if lp(rp(x, y), z) != rp(x, lp(y, z)):
            return False, ()
        b = rp(lp(x, y), z)
        if not (b == rp(rp(x, y), z) == rp(x, rp(y, z))):
            return False, ()
    units = tuple(e for e in range(n) if all(lp(x, e) == x == rp(e, x) for x in range(n)))
    for e in units:
        if all(any(lp(y, x) == e for y in range(n)) and any(rp(x, y) == e for y in range(n))
               for x in range(n)):
            return True, units
    return False, units


def ex4_oracle_tables():
    """EX4 straight from the product formulas, with σ as a bit and θ(σ) = swap."""
    def idx(s, a):
        return a * 2 + s

    els = [(s, a) for a in (0, 1) for s in (0, 1)]
    left = [[0] * 4 for _ in range(4)]
    right = [[0] * 4 for _ in range(4)]
    for s, a in els:
        for t, b in els:
            left[idx(s, a)][idx(t, b)] = idx(s, a ^ b)
            right[idx(s, a)][idx(t, b)] = idx(t ^ a, a ^ b)
    return left, right


def cyclic_table(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


@pytest.fixture(scope="session")
def C2():
    return core.group_digroup(cyclic_table(2))


@pytest.fixture(scope="session")
def C4():
    return core.group_digroup(cyclic_table(4))


@pytest.fixture(scope="session")
def V4():
    return core.group_digroup([[a ^ b for b in range(4)] for a in range(4)])


@pytest.fixture(scope="session")
def S3():
    return named_group_digroup("S3")


@pytest.fixture(scope="session")
def P2():
    return core.projection_digroup(2)


@pytest.fixture(scope="session")
def P3():
    return core.projection_digroup(3)


@pytest.fixture(scope="session")
def EX4():
    return build(ex4_spec()).digroup


@pytest.fixture(scope="session")
def catalog():
    """One representative of every digroup class of order 1..6."""
    out = []
    for n in range(1, 7):
        out.extend(constructive_enumerate(n).classes)
    return out


# ---- acceptance reporting --------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
