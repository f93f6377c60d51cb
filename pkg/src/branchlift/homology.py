"""First homology of the k-punctured sphere and the kernel test for lifting.

H_1 is free on x_1, ..., x_{k-1}; the loop x_k around the last puncture is
eliminated through the relation x_1 + ... + x_k = 0. A homeomorphism that
permutes the punctures by sigma acts by x_i -> +-x_{sigma(i)}, and it lifts
to the cover defined by phi exactly when ker(phi o f_*) = ker(phi). This
module decides that with integer lattices only, independently of any
automorphism search.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from .abelian_group import Element, GroupError, GroupSpec, element_neg, element_sum, generates
from .cover import CoverSpec
from .lattice import kernel_mod, lattice_index
from .perm import Perm, compose, is_permutation


class HomologyError(ValueError):
    pass


@dataclass(frozen=True)
class HomologyClass:
    """A class in H_1(sphere minus k points), stored with last coordinate 0."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        if len(c) < 1:
            raise HomologyError("homology classes need k >= 1 coordinates")
        last = c[-1]
        object.__setattr__(self, "coeffs", tuple(x - last for x in c))

    @classmethod
    def basis(cls, k: int, i: int) -> HomologyClass:
        """The loop x_i around puncture i (0-based)."""
        return cls(tuple(int(j == i) for j in range(k)))

    @property
    def k(self) -> int:
        return len(self.coeffs)

    @property
    def reduced(self) -> tuple[int, ...]:
        """Coordinates in the free basis x_1, ..., x_{k-1}."""
        return self.coeffs[:-1]

    def __add__(self, other: HomologyClass) -> HomologyClass:
        return HomologyClass(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> HomologyClass:
        return HomologyClass(tuple(-x for x in self.coeffs))


@dataclass(frozen=True)
class MappingClass:
    """A puncture permutation together with orientation (+1 preserving, -1 reversing)."""

    sigma: Perm
    orientation: int = 1

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        if not is_permutation(self.sigma):
            raise HomologyError(f"{self.sigma} is not a permutation")
        if self.orientation not in (1, -1):
            raise HomologyError(f"orientation must be +1 or -1, got {self.orientation}")

    @classmethod
    def identity(cls, k: int) -> MappingClass:
        return cls(tuple(range(k)))

    @property
    def k(self) -> int:
        return len(self.sigma)

    def compose(self, first: MappingClass) -> MappingClass:
        """This mapping class applied after ``first``."""
        return MappingClass(compose(self.sigma, first.sigma), self.orientation * first.orientation)


@dataclass(frozen=True)
class TupleHomomorphism:
    """H_1 -> A sending x_i to values[i]; well defined because the values sum to zero."""

    group: GroupSpec
    values: tuple[Element, ...]

    def __post_init__(self):
        vals = tuple(self.group.element(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if element_sum(self.group, vals) != self.group.zero:
            raise HomologyError("values must sum to zero to respect x_1 + ... + x_k = 0")

    @classmethod
    def of_cover(cls, c: CoverSpec) -> TupleHomomorphism:
        return cls(c.group, c.entries)

    @property
    def k(self) -> int:
        return len(self.values)

    def __call__(self, v: HomologyClass | Sequence[int]) -> Element:
        coords = v.reduced if isinstance(v, HomologyClass) else tuple(v)
        if len(coords) == self.k:
            coords = HomologyClass(coords).reduced
        if len(coords) != self.k - 1:
            raise HomologyError(f"vector of length {len(coords)} for k = {self.k}")
        g = self.group
        out = [0] * g.rank
        for c, val in zip(coords, self.values):
            for j, x in enumerate(val):
                out[j] += c * x
        return tuple(t % n for t, n in zip(out, g.invariant_factors))


def induced_action(mc: MappingClass, c: HomologyClass) -> HomologyClass:
    if mc.k != c.k:
        raise HomologyError(f"mapping class on {mc.k} punctures applied to class with k = {c.k}")
    out = [0] * c.k
    for i, coeff in enumerate(c.coeffs):
        out[mc.sigma[i]] += mc.orientation * coeff
    return HomologyClass(tuple(out))


def pullback(phi: TupleHomomorphism, mc: MappingClass) -> TupleHomomorphism:
    """phi o f_*, i.e. x_i -> orientation * phi(x_sigma(i))."""
    if mc.k != phi.k:
        raise HomologyError(f"mapping class on {mc.k} punctures, homomorphism on {phi.k}")
    g = phi.group
    vals = tuple(phi.values[j] for j in mc.sigma)
    if mc.orientation == -1:
        vals = tuple(element_neg(g, v) for v in vals)
    return TupleHomomorphism(g, vals)


@lru_cache(maxsize=4096)
def kernel_generators(phi: TupleHomomorphism) -> tuple[tuple[int, ...], ...]:
    """Hermite basis of ker(phi) inside Z^{k-1} (coordinates x_1, ..., x_{k-1}).

    Raises HomologyError if phi is not onto, since the kernel would then
    have index smaller than |A|.
    """
    g = phi.group
    try:
        onto = generates(g, phi.values)
    except GroupError as exc:
        raise HomologyError(str(exc)) from None
    if not onto:
        raise HomologyError(f"homomorphism {phi.values} is not onto {g}")
    m = phi.k - 1
    basis = kernel_mod([list(v) for v in phi.values[:m]], g.invariant_factors)
    index = lattice_index(basis, m)
    if index != g.order:
        raise AssertionError(f"kernel of {phi} has index {index}, expected {g.order}")
    return tuple(basis)


def kernels_equal(phi: TupleHomomorphism, psi: TupleHomomorphism) -> bool:
    if phi.group != psi.group or phi.k != psi.k:
        raise HomologyError("homomorphisms must share group and number of punctures")
    zero = phi.group.zero
    return all(psi(v) == zero for v in kernel_generators(phi)) and all(
        phi(v) == zero for v in kernel_generators(psi)
    )


def lifts_homology_oracle(cover: CoverSpec, mc: MappingClass) -> bool:
    if mc.k != cover.k:
        raise HomologyError(f"mapping class on {mc.k} punctures, cover has {cover.k} branch points")
    phi = TupleHomomorphism.of_cover(cover)
    return kernels_equal(pullback(phi, mc), phi)
