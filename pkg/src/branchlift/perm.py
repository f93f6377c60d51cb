"""Permutations of branch points.

A permutation of k points is a tuple ``p`` of 0-based images, ``p[i] = sigma(i)``.
User-facing text uses 1-based cycle notation such as ``"(1 2)(3 4)"`` or ``"id"``.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterator, Sequence

Perm = tuple[int, ...]

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class PermutationError(ValueError):
    pass


def identity(k: int) -> Perm:
    return tuple(range(k))


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def compose(p: Perm, q: Perm) -> Perm:
    """``p`` after ``q``: i -> p[q[i]]."""
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def transposition(k: int, i: int, j: int) -> Perm:
    p = list(range(k))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


def adjacent_transpositions(k: int) -> list[Perm]:
    return [transposition(k, i, i + 1) for i in range(k - 1)]


def all_permutations(k: int) -> Iterator[Perm]:
    return itertools.permutations(range(k))


def parse_cycles(text: str, k: int) -> Perm:
    """Parse 1-based cycle notation into a permutation of ``k`` points.

    Entries inside a cycle may be separated by spaces or commas.

    >>> parse_cycles("(2 3)", 3)
    (0, 2, 1)
    >>> parse_cycles("(1,2,3)", 3)
    (1, 2, 0)
    """
    s = text.strip()
    if s in ("id", "()", ""):
        return identity(k)
    if _CYCLE_RE.sub("", s).strip():
        raise PermutationError(f"malformed cycle notation: {text!r}")
    p = list(range(k))
    seen: set[int] = set()
    for body in _CYCLE_RE.findall(s):
        tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
        if not tokens:
            continue
        try:
            points = [int(t) for t in tokens]
        except ValueError:
            raise PermutationError(f"non-integer entry in cycle ({body})") from None
        for x in points:
            if not 1 <= x <= k:
                raise PermutationError(f"point {x} out of range 1..{k}")
            if x in seen:
                raise PermutationError(f"point {x} appears twice in {text!r}")
            seen.add(x)
        for a, b in zip(points, points[1:] + points[:1]):
            p[a - 1] = b - 1
    return tuple(p)


def format_cycles(p: Perm) -> str:
    """Inverse of :func:`parse_cycles`; fixed points are omitted."""
    seen = set()
    cycles = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = []
        i = start
        while i not in seen:
            seen.add(i)
            cyc.append(i + 1)
            i = p[i]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "id"
