"""Finite abelian groups in invariant-factor form and their automorphisms.

Elements are plain tuples of reduced coefficients, one per invariant factor.
The cyclic group Z/n is the rank-one case, so its elements are 1-tuples.
"""

from __future__ import annotations

import itertools
import math
import os
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache, reduce

Element = tuple[int, ...]

DEFAULT_MAX_AUT = 64
# |Aut(A)| outgrows |A| quickly for elementary abelian groups, e.g. |GL(6, F_2)| ~ 2e10.
MAX_AUT_COUNT = 250_000
MAX_AUT_ENV = "BRANCHLIFT_MAX_AUT"


class GroupError(ValueError):
    pass


class AutomorphismBoundError(GroupError):
    """Aut(A) is too large to enumerate under the configured bound."""


def max_aut_order() -> int:
    raw = os.environ.get(MAX_AUT_ENV)
    if raw is None:
        return DEFAULT_MAX_AUT
    try:
        value = int(raw)
    except ValueError:
        raise GroupError(f"{MAX_AUT_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise GroupError(f"{MAX_AUT_ENV} must be positive, got {value}")
    return value


def _prime_powers(m: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1
    if m > 1:
        out.append((m, 1))
    return out


def normalize_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Convert a list of cyclic orders into the invariant-factor chain.

    >>> normalize_factors([2, 3])
    (6,)
    >>> normalize_factors([4, 2, 6])
    (2, 2, 12)
    """
    by_prime: dict[int, list[int]] = {}
    for m in orders:
        m = int(m)
        if m < 1:
            raise GroupError(f"cyclic factor orders must be positive, got {m}")
        for p, e in _prime_powers(m):
            by_prime.setdefault(p, []).append(p**e)
    if not by_prime:
        return ()
    rank = max(len(v) for v in by_prime.values())
    factors = [1] * rank
    for powers in by_prime.values():
        powers.sort()
        # largest prime powers go into the largest invariant factors
        for offset, q in enumerate(reversed(powers)):
            factors[rank - 1 - offset] *= q
    return tuple(factors)


@dataclass(frozen=True)
class GroupSpec:
    """Z/n_1 + ... + Z/n_r with n_1 | n_2 | ... | n_r, every n_j >= 2."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(f) for f in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        if not factors:
            raise GroupError("the trivial group is not a valid deck group")
        for f in factors:
            if f < 2:
                raise GroupError(f"invariant factors must be >= 2, got {factors}")
        for lo, hi in zip(factors, factors[1:]):
            if hi % lo:
                raise GroupError(
                    f"invariant factors must form a divisibility chain, got {factors}; "
                    "use GroupSpec.from_orders to normalize"
                )

    @classmethod
    def cyclic(cls, n: int) -> GroupSpec:
        return cls((n,))

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> GroupSpec:
        return cls(normalize_factors(orders))

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def is_cyclic(self) -> bool:
        return self.rank == 1

    @property
    def modulus(self) -> int:
        """The n of Z/n; only meaningful for cyclic groups."""
        if not self.is_cyclic:
            raise GroupError(f"{self} is not cyclic")
        return self.invariant_factors[0]

    @property
    def zero(self) -> Element:
        return (0,) * self.rank

    def element(self, coeffs: int | Sequence[int]) -> Element:
        """Build a reduced element; a bare int is accepted for cyclic groups."""
        if isinstance(coeffs, int):
            if not self.is_cyclic:
                raise GroupError(f"bare integer {coeffs} given for non-cyclic group {self}")
            coeffs = (coeffs,)
        coeffs = tuple(coeffs)
        if len(coeffs) != self.rank:
            raise GroupError(
                f"element {coeffs} has {len(coeffs)} coordinates, group {self} has rank {self.rank}"
            )
        return tuple(int(c) % n for c, n in zip(coeffs, self.invariant_factors))

    def elements(self) -> Iterator[Element]:
        """All elements in lexicographic order of coefficients."""
        return itertools.product(*(range(n) for n in self.invariant_factors))

    def __str__(self):
        return " + ".join(f"Z/{n}" for n in self.invariant_factors)


def _conform(g: GroupSpec, a: Sequence[int]) -> Element:
    if len(a) != g.rank:
        raise GroupError(f"element {tuple(a)} does not conform to {g} (rank {g.rank})")
    return tuple(int(c) % n for c, n in zip(a, g.invariant_factors))


def element_add(g: GroupSpec, a: Sequence[int], b: Sequence[int]) -> Element:
    a, b = _conform(g, a), _conform(g, b)
    return tuple((x + y) % n for x, y, n in zip(a, b, g.invariant_factors))


def element_neg(g: GroupSpec, a: Sequence[int]) -> Element:
    a = _conform(g, a)
    return tuple(-x % n for x, n in zip(a, g.invariant_factors))


def element_scale(g: GroupSpec, m: int, a: Sequence[int]) -> Element:
    a = _conform(g, a)
    return tuple(m * x % n for x, n in zip(a, g.invariant_factors))


def element_sum(g: GroupSpec, elems: Iterable[Sequence[int]]) -> Element:
    total = [0] * g.rank
    for a in elems:
        a = _conform(g, a)
        for j, x in enumerate(a):
            total[j] += x
    return tuple(t % n for t, n in zip(total, g.invariant_factors))


def order_of(g: GroupSpec, a: Sequence[int]) -> int:
    """Least m >= 1 with m*a = 0: the lcm of the componentwise orders."""
    a = _conform(g, a)
    return reduce(math.lcm, (n // math.gcd(x, n) for x, n in zip(a, g.invariant_factors)), 1)


def subgroup_closure(g: GroupSpec, elems: Iterable[Sequence[int]]) -> frozenset[Element]:
    """The subgroup generated by ``elems``, by breadth-first closure under addition."""
    gens = {_conform(g, a) for a in elems}
    seen = {g.zero}
    frontier = [g.zero]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = tuple((u + v) % n for u, v, n in zip(x, s, g.invariant_factors))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def generates(g: GroupSpec, elems: Sequence[Sequence[int]]) -> bool:
    elems = [_conform(g, a) for a in elems]
    if g.is_cyclic:
        return math.gcd(g.modulus, *(a[0] for a in elems)) == 1
    return len(subgroup_closure(g, elems)) == g.order


@dataclass(frozen=True)
class Automorphism:
    """An automorphism of ``group`` given by the images of the canonical generators.

    Instances built directly are trusted; use :meth:`from_images` to validate.
    """

    group: GroupSpec
    images: tuple[Element, ...]

    @classmethod
    def from_images(cls, g: GroupSpec, images: Sequence[Sequence[int]]) -> Automorphism:
        if len(images) != g.rank:
            raise GroupError(f"need {g.rank} generator images, got {len(images)}")
        images = tuple(_conform(g, im) for im in images)
        for n, im in zip(g.invariant_factors, images):
            if element_scale(g, n, im) != g.zero:
                raise GroupError(f"image {im} is not killed by {n}; map is not well defined")
        psi = cls(g, images)
        if len({psi(a) for a in g.elements()}) != g.order:
            raise GroupError(f"generator images {images} do not define a bijection")
        return psi

    @classmethod
    def multiplication(cls, g: GroupSpec, u: int) -> Automorphism:
        """Multiplication by a unit u of Z/n; the whole of Aut(Z/n)."""
        n = g.modulus
        if math.gcd(u, n) != 1:
            raise GroupError(f"{u} is not a unit mod {n}")
        return cls(g, ((u % n,),))

    @classmethod
    def identity(cls, g: GroupSpec) -> Automorphism:
        return cls(g, tuple(tuple(int(i == j) for i in range(g.rank)) for j in range(g.rank)))

    @property
    def unit(self) -> int:
        """For cyclic groups, the multiplier u with psi(a) = u*a."""
        if not self.group.is_cyclic:
            raise GroupError("only automorphisms of cyclic groups are multiplications")
        return self.images[0][0]

    def __call__(self, a: Sequence[int]) -> Element:
        g = self.group
        out = [0] * g.rank
        for c, im in zip(a, self.images):
            if c:
                for j, x in enumerate(im):
                    out[j] += c * x
        return tuple(v % n for v, n in zip(out, g.invariant_factors))

    def compose(self, other: Automorphism) -> Automorphism:
        """``self`` after ``other``."""
        return Automorphism(self.group, tuple(self(im) for im in other.images))

    def inverse(self) -> Automorphism:
        g = self.group
        table = {self(a): a for a in g.elements()}
        basis = Automorphism.identity(g).images
        return Automorphism(g, tuple(table[e] for e in basis))

    def to_json(self) -> dict:
        data: dict = {"images": [list(im) for im in self.images]}
        if self.group.is_cyclic:
            data["unit"] = self.unit
        return data


def apply(g: GroupSpec, psi: Automorphism, a: Sequence[int]) -> Element:
    if psi.group != g:
        raise GroupError(f"automorphism of {psi.group} applied in {g}")
    return psi(_conform(g, a))


@lru_cache(maxsize=None)
def units(n: int) -> tuple[int, ...]:
    return tuple(u for u in range(1, n) if math.gcd(u, n) == 1) if n > 1 else ()


def _elements_of_order(g: GroupSpec, m: int) -> list[Element]:
    return [a for a in g.elements() if order_of(g, a) == m]


def _generic_automorphisms(g: GroupSpec) -> list[Automorphism]:
    # An automorphism sends generator j to an element of order n_j, and restricted to
    # Z/n_1 + ... + Z/n_j it must stay injective; both are checked as images are chosen.
    candidates = [_elements_of_order(g, n) for n in g.invariant_factors]
    out: list[Automorphism] = []

    def extend(chosen: list[Element], span: frozenset[Element]):
        j = len(chosen)
        if j == g.rank:
            if len(out) >= MAX_AUT_COUNT:
                raise AutomorphismBoundError(
                    f"Aut({g}) has more than {MAX_AUT_COUNT} elements; refusing to enumerate"
                )
            out.append(Automorphism(g, tuple(chosen)))
            return
        n_j = g.invariant_factors[j]
        for im in candidates[j]:
            multiples = [element_scale(g, m, im) for m in range(n_j)]
            new_span = frozenset(element_add(g, s, x) for s in span for x in multiples)
            if len(new_span) == len(span) * n_j:
                extend(chosen + [im], new_span)

    extend([], frozenset([g.zero]))
    return out


@lru_cache(maxsize=256)
def _automorphisms_cached(g: GroupSpec, generic: bool) -> tuple[Automorphism, ...]:
    if g.is_cyclic and not generic:
        return tuple(Automorphism(g, ((u,),)) for u in units(g.modulus))
    return tuple(_generic_automorphisms(g))


def automorphisms(g: GroupSpec, *, generic: bool = False) -> tuple[Automorphism, ...]:
    """Every automorphism of ``g``, without repetition.

    Cyclic groups use the unit group of Z/n unless ``generic`` forces the
    search over generator images that non-cyclic groups always go through.
    That search is bounded by ``|A| <= max_aut_order()`` (environment
    variable ``BRANCHLIFT_MAX_AUT``) and raises :class:`AutomorphismBoundError`
    rather than returning a partial list.
    """
    if generic or not g.is_cyclic:
        bound = max_aut_order()
        if g.order > bound:
            raise AutomorphismBoundError(
                f"|{g}| = {g.order} exceeds the automorphism enumeration bound {bound} "
                f"(set {MAX_AUT_ENV} to raise it)"
            )
    return _automorphisms_cached(g, generic)
