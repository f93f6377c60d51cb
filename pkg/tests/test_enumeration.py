import itertools
import json
import math

import pytest

from branchlift.abelian_group import GroupSpec, element_sum, generates
from branchlift.cover import CoverSpec, canonical_form, equivalent
from branchlift.enumeration import (
    SearchTooLarge,
    census,
    classify,
    enumerate_admissible,
    orbit_bound,
    render_table,
)
from branchlift.lifting import all_lift_bruteforce, all_lift_theorem


def brute_admissible(g, k):
    nonzero = [a for a in g.elements() if a != g.zero]
    return [
        t for t in itertools.product(nonzero, repeat=k)
        if element_sum(g, t) == g.zero and generates(g, t)
    ]


@pytest.mark.parametrize(
    "n,k,expected",
    [(2, 4, [(1, 1, 1, 1)]), (3, 3, [(1, 1, 1), (2, 2, 2)]), (4, 2, [(1, 3), (3, 1)]), (2, 3, [])],
)
def test_enumerate_examples(n, k, expected):
    g = GroupSpec.cyclic(n)
    got = [tuple(a[0] for a in t) for t in enumerate_admissible(g, k)]
    assert got == expected


@pytest.mark.parametrize("factors,k", [((n,), k) for n in range(2, 8) for k in range(2, 6)] + [((2, 2), 3), ((2, 2), 4), ((2, 4), 3)])
def test_enumerate_matches_bruteforce(factors, k):
    g = GroupSpec(factors)
    assert enumerate_admissible(g, k) == brute_admissible(g, k)


def test_search_bound():
    with pytest.raises(SearchTooLarge):
        enumerate_admissible(GroupSpec.cyclic(30), 6)


def test_classify_examples():
    rows = classify(GroupSpec.cyclic(3), 3)
    assert [(r.tuple, r.all_lift, r.orbit_size) for r in rows] == [(((1,), (1,), (1,)), True, 2)]
    rows = classify(GroupSpec.cyclic(4), 2)
    assert [(r.tuple, r.all_lift) for r in rows] == [(((1,), (3,)), True)]
    rows = classify(GroupSpec.cyclic(5), 3)
    fig = [r for r in rows if r.tuple == ((1,), (1,), (3,))]
    assert len(fig) == 1 and fig[0].all_lift is False and fig[0].genus == 2 and fig[0].liftable_order == 2


def test_classify_z2_two_points():
    (row,) = classify(GroupSpec.cyclic(2), 2)
    assert row.tuple == ((1,), (1,)) and row.all_lift and row.smod_iso is False


@pytest.mark.parametrize("unlabeled", [False, True])
@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 7) for k in range(2, 5)])
def test_classes_partition_tuples(n, k, unlabeled):
    g = GroupSpec.cyclic(n)
    rows = classify(g, k, unlabeled)
    reps = [CoverSpec(g, r.tuple) for r in rows]
    tuples = enumerate_admissible(g, k)
    assert sum(r.orbit_size for r in rows) == len(tuples)
    bound = orbit_bound(g, k, unlabeled)
    for r in rows:
        assert bound % r.orbit_size == 0
        assert canonical_form(CoverSpec(g, r.tuple), unlabeled) == r.tuple

    def related(c1, c2):
        if not unlabeled:
            return equivalent(c1, c2) is not None
        return any(equivalent(c1, c2.permute(p)) is not None for p in itertools.permutations(range(k)))

    for r1, r2 in itertools.combinations(reps, 2):
        assert not related(r1, r2)
    for t in tuples:
        c = CoverSpec(g, t)
        assert sum(related(c, r) for r in reps) == 1


def test_census_rows_match_bruteforce():
    report = census(range(2, 8), range(2, 6))
    for entry in report.entries:
        for row in entry.rows:
            c = CoverSpec(entry.group, row.tuple)
            assert row.all_lift == all_lift_theorem(c) == all_lift_bruteforce(c, "full")


def test_census_examples():
    report = census([2], [2, 4, 6])
    assert [(e.k, e.classes, e.all_lift_classes) for e in report.entries] == [(2, 1, 1), (4, 1, 1), (6, 1, 1)]
    (e,) = census([3], [4]).entries
    assert any(r.tuple == ((1,), (1,), (2,), (2,)) and not r.all_lift for r in e.rows)
    (e,) = census([5], [2]).entries
    assert e.classes == 1 and e.all_lift_classes == 1


def test_census_deterministic_across_workers():
    a = json.dumps(census(range(2, 6), range(2, 5), workers=1).to_json(), sort_keys=True)
    b = json.dumps(census(range(2, 6), range(2, 5), workers=2).to_json(), sort_keys=True)
    assert a == b


def test_noncyclic_classify():
    rows = classify(GroupSpec((2, 2)), 3)
    assert len(rows) == 1 and rows[0].all_lift and rows[0].smod_iso is None
    assert rows[0].liftable_order == math.factorial(3)


def test_table_rendering():
    text = render_table(census([5], [3]))
    assert "(1,1,3)" in text
    assert text.splitlines()[-1].endswith("where every homeomorphism lifts")
