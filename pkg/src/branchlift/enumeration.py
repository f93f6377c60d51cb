"""Exhaustive censuses of admissible tuples."""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .abelian_group import Element, GroupSpec, automorphisms, generates
from .cover import CoverSpec, canonical_form, surface_invariants
from .lifting import all_lift_bruteforce, all_lift_theorem, liftable_order, smod_iso

DEFAULT_MAX_SEARCH = 10**7


class SearchTooLarge(ValueError):
    pass


def _sumsets(g: GroupSpec, nonzero: list[Element], depth: int) -> list[frozenset[Element]]:
    """reach[r] = set of sums of exactly r nonzero elements."""
    reach = [frozenset([g.zero])]
    for _ in range(depth):
        prev = reach[-1]
        reach.append(
            frozenset(
                tuple((x + y) % n for x, y, n in zip(s, a, g.invariant_factors))
                for s in prev
                for a in nonzero
            )
        )
    return reach


def iter_admissible(
    g: GroupSpec, k: int, max_search: int = DEFAULT_MAX_SEARCH
) -> Iterator[tuple[Element, ...]]:
    """Admissible k-tuples over ``g`` in lexicographic order, each exactly once.

    A prefix is abandoned as soon as no choice of the remaining entries can
    bring the running sum back to zero. Generation is checked on full tuples.
    """
    if k < 2:
        return
    if g.order**k > max_search:
        raise SearchTooLarge(f"search space |A|^k = {g.order}^{k} exceeds the bound {max_search}")
    nonzero = [a for a in g.elements() if a != g.zero]
    reach = _sumsets(g, nonzero, k)
    factors = g.invariant_factors
    prefix: list[Element] = []

    def rec(total: Element) -> Iterator[tuple[Element, ...]]:
        remaining = k - len(prefix)
        if remaining == 0:
            if total == g.zero and generates(g, prefix):
                yield tuple(prefix)
            return
        target = tuple(-x % n for x, n in zip(total, factors))
        if target not in reach[remaining]:
            return
        for a in nonzero:
            prefix.append(a)
            yield from rec(tuple((x + y) % n for x, y, n in zip(total, a, factors)))
            prefix.pop()

    yield from rec(g.zero)


def enumerate_admissible(
    g: GroupSpec, k: int, max_search: int = DEFAULT_MAX_SEARCH
) -> list[tuple[Element, ...]]:
    return list(iter_admissible(g, k, max_search))


@dataclass(frozen=True)
class CensusRow:
    tuple: tuple[Element, ...]
    orbit_size: int
    all_lift: bool
    genus: int
    liftable_order: int
    smod_iso: bool | None

    def to_json(self) -> dict:
        return {
            "tuple": [list(a) for a in self.tuple],
            "orbit_size": self.orbit_size,
            "all_lift": self.all_lift,
            "genus": self.genus,
            "liftable_order": self.liftable_order,
            "smod_iso": self.smod_iso,
        }


def classify(g: GroupSpec, k: int, unlabeled: bool = False) -> list[CensusRow]:
    """One row per equivalence class of admissible k-tuples, sorted by representative.

    Classes are up to Aut(A) (labeled) or Aut(A) x S_k (unlabeled); the
    orbit size counts admissible tuples in the class.
    """
    automorphisms(g)  # fail fast on the enumeration bound
    sizes: dict[tuple[Element, ...], int] = {}
    for entries in iter_admissible(g, k):
        key = canonical_form(CoverSpec(g, entries), unlabeled)
        sizes[key] = sizes.get(key, 0) + 1
    rows = []
    for rep in sorted(sizes):
        c = CoverSpec(g, rep)
        if g.is_cyclic:
            all_lift = all_lift_theorem(c)
            iso = smod_iso(c)
        else:
            all_lift = all_lift_bruteforce(c, "transpositions")
            iso = None
        rows.append(
            CensusRow(
                tuple=rep,
                orbit_size=sizes[rep],
                all_lift=all_lift,
                genus=surface_invariants(c).genus,
                liftable_order=liftable_order(c),
                smod_iso=iso,
            )
        )
    return rows


@dataclass(frozen=True)
class CensusEntry:
    group: GroupSpec
    k: int
    rows: tuple[CensusRow, ...]

    @property
    def classes(self) -> int:
        return len(self.rows)

    @property
    def all_lift_classes(self) -> int:
        return sum(r.all_lift for r in self.rows)

    def to_json(self) -> dict:
        return {
            "invariant_factors": list(self.group.invariant_factors),
            "k": self.k,
            "classes": self.classes,
            "all_lift_classes": self.all_lift_classes,
            "rows": [r.to_json() for r in self.rows],
        }


@dataclass(frozen=True)
class CensusReport:
    unlabeled: bool
    entries: tuple[CensusEntry, ...]

    def to_json(self) -> dict:
        return {
            "unlabeled": self.unlabeled,
            "entries": [e.to_json() for e in self.entries],
            "summary": {
                "classes": sum(e.classes for e in self.entries),
                "all_lift_classes": sum(e.all_lift_classes for e in self.entries),
                "pairs": len(self.entries),
            },
        }


def _census_cell(args: tuple[int, int, bool]) -> CensusEntry:
    n, k, unlabeled = args
    g = GroupSpec.cyclic(n)
    return CensusEntry(g, k, tuple(classify(g, k, unlabeled)))


def census(
    n_range: Iterable[int], k_range: Iterable[int], unlabeled: bool = False, workers: int = 1
) -> CensusReport:
    """Classify Z/n covers for every (n, k) pair; results come back in (n, k) order."""
    cells = [(n, k, unlabeled) for n in sorted(set(n_range)) for k in sorted(set(k_range))]
    for n, k, _ in cells:
        if n < 2 or k < 2:
            raise ValueError(f"census needs n >= 2 and k >= 2, got n={n}, k={k}")
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = tuple(pool.map(_census_cell, cells))
    else:
        entries = tuple(map(_census_cell, cells))
    return CensusReport(unlabeled, entries)


def _fmt_tuple(rep: tuple[Element, ...]) -> str:
    parts = (str(a[0]) if len(a) == 1 else "(" + ",".join(map(str, a)) + ")" for a in rep)
    return "(" + ",".join(parts) + ")"


def render_table(report: CensusReport) -> str:
    """Fixed-width text rendering of a census."""
    header = f"{'group':>10} {'k':>3}  {'tuple':<24} {'orbit':>6} {'genus':>5} {'lift':>5} {'|L|':>8} {'smod':>5}"
    lines = [header, "-" * len(header)]
    for e in report.entries:
        for r in e.rows:
            smod = "-" if r.smod_iso is None else ("yes" if r.smod_iso else "no")
            lines.append(
                f"{str(e.group):>10} {e.k:>3}  {_fmt_tuple(r.tuple):<24} {r.orbit_size:>6} {r.genus:>5} "
                f"{'yes' if r.all_lift else 'no':>5} {r.liftable_order:>8} {smod:>5}"
            )
    lines.append("-" * len(header))
    total = sum(e.classes for e in report.entries)
    lifting = sum(e.all_lift_classes for e in report.entries)
    lines.append(f"{total} classes, {lifting} where every homeomorphism lifts")
    return "\n".join(lines)


def orbit_bound(g: GroupSpec, k: int, unlabeled: bool) -> int:
    """|Aut(A)| (times k! when unlabeled); every orbit size divides it."""
    size = len(automorphisms(g))
    return size * math.factorial(k) if unlabeled else size
