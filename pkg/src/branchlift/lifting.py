"""Deciding which homeomorphisms of the sphere lift to a branched cover.

A homeomorphism permuting the branch points by sigma lifts exactly when some
automorphism psi of the deck group satisfies psi(a_i) = a_sigma(i) for all i.
Orientation plays no role, because a -> -a is itself an automorphism.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .abelian_group import Automorphism, GroupError, automorphisms, units
from .cover import CoverSpec
from .homology import MappingClass
from .perm import Perm, adjacent_transpositions, all_permutations, compose, identity, is_permutation

DEFAULT_MAX_K = 8

# (n, k) pairs where every homeomorphism lifts but the cover is not hyperbolic.
NON_HYPERBOLIC_EXCEPTIONS = frozenset({(2, 2), (2, 4), (3, 3)})


class NotCyclic(GroupError):
    def __init__(self, cover: CoverSpec):
        super().__init__(f"deck group {cover.group} is not cyclic; the closed form applies to Z/n only")


class BoundExceeded(ValueError):
    pass


class WitnessError(AssertionError):
    """A claimed witness fails verification; indicates a bug, never bad input."""


@dataclass(frozen=True)
class LiftDecision:
    lifts: bool
    witness: Automorphism | None = None

    def __post_init__(self):
        if self.lifts != (self.witness is not None):
            raise ValueError("a positive decision carries a witness and a negative one does not")

    def to_json(self) -> dict:
        return {"lifts": self.lifts, "witness": self.witness.to_json() if self.witness else None}


@dataclass(frozen=True)
class LiftableSubgroup:
    order: int
    members: tuple[Perm, ...]
    is_full: bool


def _check_sigma(c: CoverSpec, sigma: Perm):
    if len(sigma) != c.k or not is_permutation(sigma):
        raise ValueError(f"{sigma} is not a permutation of the {c.k} branch points")


def verify_witness(c: CoverSpec, sigma: Perm, psi: Automorphism) -> bool:
    return all(psi(c.entries[i]) == c.entries[sigma[i]] for i in range(c.k))


def find_witness(c: CoverSpec, sigma: Perm) -> Automorphism | None:
    _check_sigma(c, sigma)
    if c.group.is_cyclic:
        n = c.n
        a = c.residues
        target = a[sigma[0]]
        for u in units(n):
            # u is pinned down by the first coordinate, then checked everywhere
            if u * a[0] % n != target:
                continue
            if all(u * a[i] % n == a[sigma[i]] for i in range(c.k)):
                return Automorphism(c.group, ((u,),))
        return None
    for psi in automorphisms(c.group):
        if verify_witness(c, sigma, psi):
            return psi
    return None


def lifts(c: CoverSpec, mc: MappingClass) -> LiftDecision:
    """Does a homeomorphism inducing ``mc`` on the branch points lift?"""
    psi = find_witness(c, mc.sigma)
    if psi is None:
        return LiftDecision(False)
    if not verify_witness(c, mc.sigma, psi):
        raise WitnessError(f"witness {psi.images} fails for sigma={mc.sigma} on {c}")
    return LiftDecision(True, psi)


def all_lift_bruteforce(c: CoverSpec, mode: str = "transpositions", max_k: int = DEFAULT_MAX_K) -> bool:
    """Check that every permutation of the branch points lifts.

    ``transpositions`` tests only (i i+1); that suffices because the
    liftable permutations form a subgroup and the adjacent transpositions
    generate S_k. ``full`` tests all k! permutations and needs k <= max_k.
    """
    if mode == "transpositions":
        perms = adjacent_transpositions(c.k)
    elif mode == "full":
        if c.k > max_k:
            raise BoundExceeded(f"full enumeration of S_{c.k} exceeds the bound k <= {max_k}")
        perms = all_permutations(c.k)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return all(find_witness(c, p) is not None for p in perms)


def all_entries_equal(c: CoverSpec) -> bool:
    return len(set(c.entries)) == 1


def first_bullet(c: CoverSpec) -> bool:
    """Some isomorphism A -> Z/n sends every a_i to 1 (forcing k = 0 mod n)."""
    if not c.group.is_cyclic:
        raise NotCyclic(c)
    n = c.n
    a = c.residues[0]
    return all_entries_equal(c) and math.gcd(a, n) == 1 and c.k % n == 0


def second_bullet(c: CoverSpec) -> bool:
    """k = 2, n >= 3, and the entries are a generator and its negative."""
    if not c.group.is_cyclic:
        raise NotCyclic(c)
    n = c.n
    a1, a2 = c.residues[0], c.residues[-1]
    return c.k == 2 and n >= 3 and math.gcd(a1, n) == 1 and (a1 + a2) % n == 0


def all_lift_theorem(c: CoverSpec) -> bool:
    """Closed-form answer for cyclic deck groups."""
    return first_bullet(c) or second_bullet(c)


def liftable_order(c: CoverSpec) -> int:
    """|{sigma : sigma lifts}| without enumerating S_k.

    Each automorphism that permutes the multiset of entries is realized by
    prod(m_v!) permutations (m_v = multiplicity of value v), and distinct
    automorphisms give disjoint sets because the entries generate A.
    """
    counts = Counter(c.entries)
    stabilizing = sum(
        1 for psi in automorphisms(c.group) if Counter(psi(a) for a in c.entries) == counts
    )
    return stabilizing * math.prod(math.factorial(m) for m in counts.values())


def _closure(gens: list[Perm], k: int) -> set[Perm]:
    seen = {identity(k)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = compose(s, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _generated_subgroup(perms: tuple[Perm, ...], k: int) -> set[Perm]:
    # Greedy generating set: at most log2|H| rounds, each a closure of size |H|.
    allowed = set(perms)
    gens: list[Perm] = []
    span = {identity(k)}
    for p in perms:
        if p not in span:
            gens.append(p)
            span = _closure(gens, k)
            if not span <= allowed:
                break
    return span


def liftable_subgroup(c: CoverSpec, max_k: int = DEFAULT_MAX_K) -> LiftableSubgroup:
    if c.k > max_k:
        raise BoundExceeded(f"listing members of S_{c.k} exceeds the bound k <= {max_k}")
    members = tuple(p for p in all_permutations(c.k) if find_witness(c, p) is not None)
    if _generated_subgroup(members, c.k) != set(members):
        raise WitnessError(f"liftable permutations of {c} do not form a subgroup")
    order = len(members)
    return LiftableSubgroup(order, members, order == math.factorial(c.k))


def smod_iso(c: CoverSpec) -> bool:
    """Whether SMod(cover)/A is isomorphic to Mod of the sphere.

    Requires the first bullet and a hyperbolic cover; the three non-hyperbolic
    first-bullet shapes are excluded.
    """
    if not c.group.is_cyclic:
        raise NotCyclic(c)
    return first_bullet(c) and (c.n, c.k) not in NON_HYPERBOLIC_EXCEPTIONS

