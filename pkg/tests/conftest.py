from __future__ import annotations

import math
from functools import lru_cache

import pytest
from hypothesis import strategies as st

from branchlift.abelian_group import GroupSpec
from branchlift.cover import CoverSpec
from branchlift.enumeration import enumerate_admissible

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def admissible(n: int, k: int) -> tuple:
    return tuple(enumerate_admissible(GroupSpec.cyclic(n), k))


@st.composite
def cyclic_covers(draw, max_n=10, max_k=5):
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(2, max_k))
    tuples = admissible(n, k)
    if not tuples:
        # Z/2 with odd k has no admissible tuples
        k += 1
        tuples = admissible(n, k)
    return CoverSpec(GroupSpec.cyclic(n), draw(st.sampled_from(tuples)))


@st.composite
def permutations_of(draw, k):
    return tuple(draw(st.permutations(range(k))))


def span_mod(basis, m, N):
    """Residues mod N of the lattice spanned by ``basis`` in Z^m."""
    seen = {(0,) * m}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for b in basis:
                y = tuple((u + v) % N for u, v in zip(x, b))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def euler_phi(n: int) -> int:
    return sum(1 for u in range(1, n + 1) if math.gcd(u, n) == 1)


@pytest.fixture
def z5():
    return GroupSpec.cyclic(5)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
