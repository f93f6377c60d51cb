"""Cyclic (and experimentally, abelian) branched covers of the sphere.

A cover is recorded by its deck group A and an admissible tuple
(a_1, ..., a_k): nonzero elements of A that sum to zero and generate A.
Entry i is the image of the loop around the i-th branch point.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass

from .abelian_group import (
    Automorphism,
    Element,
    GroupError,
    GroupSpec,
    automorphisms,
    element_sum,
    generates,
    order_of,
)


class AdmissibilityError(ValueError):
    clause = "admissibility"


class ZeroEntry(AdmissibilityError):
    clause = "nonzero entries"

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"entry {index + 1} of the tuple is zero")


class NonzeroSum(AdmissibilityError):
    clause = "zero sum"

    def __init__(self, total: Element):
        self.total = total
        super().__init__(f"tuple entries sum to {_fmt(total)}, not 0")


class NotGenerating(AdmissibilityError):
    clause = "generation"

    def __init__(self, group: GroupSpec):
        super().__init__(f"tuple entries do not generate {group}")


class TupleTooShort(AdmissibilityError):
    clause = "length"

    def __init__(self, k: int):
        self.k = k
        super().__init__(f"an admissible tuple needs at least 2 entries, got {k}")


def _fmt(a: Element) -> str:
    return str(a[0]) if len(a) == 1 else str(a)


@dataclass(frozen=True)
class CoverSpec:
    """A branched cover of the sphere with deck group ``group``.

    Constructing one validates admissibility; use :func:`new_cover` to
    pass plain integers for cyclic groups.
    """

    group: GroupSpec
    entries: tuple[Element, ...]

    def __post_init__(self):
        g = self.group
        entries = tuple(g.element(a) for a in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) < 2:
            raise TupleTooShort(len(entries))
        for i, a in enumerate(entries):
            if a == g.zero:
                raise ZeroEntry(i)
        total = element_sum(g, entries)
        if total != g.zero:
            raise NonzeroSum(total)
        if not generates(g, entries):
            raise NotGenerating(g)

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return self.group.modulus

    @property
    def residues(self) -> tuple[int, ...]:
        """Entries as integers mod n (cyclic covers only)."""
        if not self.group.is_cyclic:
            raise GroupError(f"{self.group} is not cyclic")
        return tuple(a[0] for a in self.entries)

    def relabel(self, psi: Automorphism) -> CoverSpec:
        return CoverSpec(self.group, tuple(psi(a) for a in self.entries))

    def permute(self, sigma: Sequence[int]) -> CoverSpec:
        """The cover whose i-th entry is this cover's sigma(i)-th entry."""
        return CoverSpec(self.group, tuple(self.entries[j] for j in sigma))

    def to_json(self) -> dict:
        return {
            "invariant_factors": list(self.group.invariant_factors),
            "tuple": [list(a) for a in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> CoverSpec:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            factors = data["invariant_factors"]
            entries = data["tuple"]
        except (KeyError, TypeError):
            raise ValueError(
                'cover JSON must be an object with "invariant_factors" and "tuple"'
            ) from None
        g = GroupSpec(tuple(factors))
        return cls(g, tuple(g.element(a) for a in entries))

    def __str__(self):
        return f"({', '.join(_fmt(a) for a in self.entries)}) over {self.group}"


def new_cover(group: GroupSpec | int, entries: Sequence[int | Sequence[int]]) -> CoverSpec:
    """Validated cover; ``group`` may be an int n meaning Z/n."""
    if isinstance(group, int):
        group = GroupSpec.cyclic(group)
    return CoverSpec(group, tuple(group.element(a) for a in entries))


def equivalent(c1: CoverSpec, c2: CoverSpec) -> Automorphism | None:
    """A psi in Aut(A) with psi(c1[i]) = c2[i] for every i, if one exists."""
    if c1.group != c2.group or c1.k != c2.k:
        return None
    g = c1.group
    if g.is_cyclic:
        n = g.modulus
        a1, b1 = c1.entries[0][0], c2.entries[0][0]
        for psi in automorphisms(g):
            u = psi.unit
            if u * a1 % n == b1 and all(u * a[0] % n == b[0] for a, b in zip(c1.entries, c2.entries)):
                return psi
        return None
    for psi in automorphisms(g):
        if all(psi(a) == b for a, b in zip(c1.entries, c2.entries)):
            return psi
    return None


def canonical_form(c: CoverSpec, unlabeled: bool = False) -> tuple[Element, ...]:
    """Lexicographically least tuple in the Aut(A)-orbit of ``c``.

    With ``unlabeled`` the orbit also includes every reordering of the
    branch points, so the result is the least sorted image.
    """
    best = None
    for psi in automorphisms(c.group):
        image = tuple(psi(a) for a in c.entries)
        if unlabeled:
            image = tuple(sorted(image))
        if best is None or image < best:
            best = image
    return best


@dataclass(frozen=True)
class SurfaceInvariants:
    euler_characteristic: int
    genus: int
    hyperbolic: bool

    def to_json(self) -> dict:
        return {
            "euler_characteristic": self.euler_characteristic,
            "genus": self.genus,
            "hyperbolic": self.hyperbolic,
        }


def euler_characteristic(c: CoverSpec) -> int:
    # Riemann-Hurwitz: branch point i has |A| / ord(a_i) preimages.
    size = c.group.order
    return size * (2 - c.k) + sum(size // order_of(c.group, a) for a in c.entries)


def surface_invariants(c: CoverSpec) -> SurfaceInvariants:
    chi = euler_characteristic(c)
    if chi % 2 or chi > 2:
        raise AssertionError(f"impossible Euler characteristic {chi} for {c}")
    return SurfaceInvariants(chi, (2 - chi) // 2, chi < 0)


def is_hyperbolic(c: CoverSpec) -> bool:
    return euler_characteristic(c) < 0
