from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from branchlift.abelian_group import element_sum
from branchlift.lifting import all_lift_theorem
from branchlift.superelliptic import (
    CurveError,
    CurveSpec,
    CurveSyntaxError,
    DegenerateN,
    DuplicateRoot,
    ExponentOutOfRange,
    Reducible,
    all_lift_corollary,
    curve_cover_json,
    has_infinity_branch,
    is_irreducible,
    parse_curve,
    render,
    to_cover,
)


def curve(n, exps):
    return CurveSpec(n, tuple((i, a) for i, a in enumerate(exps)))


class TestParse:
    def test_explicit_exponents(self):
        cv = parse_curve("y^5 = (x-0)^1 (x-1)^1 (x-2)^3")
        assert cv.n == 5
        assert cv.factors == ((0, 1), (1, 1), (2, 3))

    def test_default_exponents(self):
        cv = parse_curve("y^2 = (x-0)(x-1)(x-2)")
        assert cv.n == 2 and cv.exponents == (1, 1, 1)

    def test_whitespace_and_root_forms(self):
        cv = parse_curve("  y ^ 7=( x - (-3) )^2(x-0.5)   (x - 3/4)^ 4 (x-z1)")
        assert [z for z, _ in cv.factors] == [Fraction(-3), Fraction(1, 2), Fraction(3, 4), "z1"]
        assert cv.exponents == (2, 1, 4, 1)

    def test_duplicate_root(self):
        with pytest.raises(DuplicateRoot) as info:
            parse_curve("y^4 = (x-0)^2 (x-0)^1")
        assert info.value.root == 0

    def test_duplicate_root_in_other_notation(self):
        with pytest.raises(DuplicateRoot):
            parse_curve("y^4 = (x-0.5) (x-1/2)")

    @pytest.mark.parametrize("text,index", [("y^3 = (x-0)^3", 0), ("y^3 = (x-0)(x-1)^0", 1), ("y^3 = (x-0)(x-1)^4", 1)])
    def test_exponent_out_of_range(self, text, index):
        with pytest.raises(ExponentOutOfRange) as info:
            parse_curve(text)
        assert info.value.index == index

    def test_out_of_range_hint(self):
        with pytest.raises(ExponentOutOfRange, match="reduce it mod 3 to 1"):
            parse_curve("y^3 = (x-0)(x-1)^4")

    @pytest.mark.parametrize("text", ["y^1 = (x-0)", "y^0 = (x-0)"])
    def test_degenerate_n(self, text):
        with pytest.raises(DegenerateN):
            parse_curve(text)

    @pytest.mark.parametrize(
        "text,position",
        [
            ("y^2 = (x--3)", 9),
            ("y^2 = (x+3)", 8),
            ("y^2 = ", 6),
            ("x^2 = (x-1)", 0),
            ("y^2 = (x-1", 10),
            ("y^2 = (x-1)^", 12),
            ("y^2 = (x-1) * (x-2)", 12),
            ("y^2 = (x-1)#", 11),
            ("y^2.5 = (x-1)", 2),
            ("y^2 = (x-x)", 9),
        ],
    )
    def test_syntax_errors_report_position(self, text, position):
        with pytest.raises(CurveSyntaxError) as info:
            parse_curve(text)
        assert info.value.position == position

    def test_negative_root_hint(self):
        with pytest.raises(CurveSyntaxError, match=r"\(x-\(-3\)\)"):
            parse_curve("y^2 = (x--3)")


class TestRender:
    def test_canonical_text(self):
        cv = CurveSpec(5, ((0, 1), (Fraction(-3), 2), (Fraction(1, 2), 3), ("w", 4)))
        assert render(cv) == "y^5 = (x-0)^1 (x-(-3))^2 (x-1/2)^3 (x-w)^4"

    @settings(max_examples=200, deadline=None)
    @given(
        st.integers(2, 12).flatmap(
            lambda n: st.tuples(
                st.just(n),
                st.lists(
                    st.tuples(
                        st.one_of(st.fractions(max_denominator=20), st.from_regex(r"[a-w][a-z0-9_]{0,3}", fullmatch=True)),
                        st.integers(1, n - 1),
                    ),
                    min_size=1,
                    max_size=6,
                    unique_by=lambda p: p[0],
                ),
            )
        )
    )
    def test_round_trip(self, args):
        n, factors = args
        cv = CurveSpec(n, tuple(factors))
        assert parse_curve(render(cv)) == cv


@pytest.mark.parametrize("n,exps,expected", [(5, (1, 1, 3), True), (4, (2, 2), False), (6, (2, 3), True)])
def test_is_irreducible(n, exps, expected):
    assert is_irreducible(curve(n, exps)) is expected


@pytest.mark.parametrize(
    "n,exps,entries,infinity",
    [
        (5, (1, 1, 3), (1, 1, 3), False),
        (3, (1, 1), (1, 1, 1), True),
        (2, (1, 1, 1), (1, 1, 1, 1), True),
        (6, (2, 3), (2, 3, 1), True),
    ],
)
def test_to_cover(n, exps, entries, infinity):
    cv = curve(n, exps)
    c = to_cover(cv)
    assert c.residues == entries
    assert has_infinity_branch(cv) is infinity
    assert curve_cover_json(cv)["infinity_branch"] is infinity


def test_reducible():
    with pytest.raises(Reducible):
        to_cover(curve(4, (2, 2)))
    with pytest.raises(Reducible):
        all_lift_corollary(curve(4, (2, 2)))
    assert issubclass(Reducible, CurveError)


@pytest.mark.parametrize(
    "n,exps,expected",
    [
        (5, (1, 1, 3), False),
        (2, (1, 1, 1), True),
        (3, (2,), True),
        (2, (1,), True),
        (7, (3, 4), True),
        (7, (3, 3), False),
        (3, (1, 1), True),
        (4, (1, 1, 1), True),
        (4, (1, 1, 1, 1), True),
        (4, (1, 1, 1, 1, 1), False),
    ],
)
def test_corollary_examples(n, exps, expected):
    cv = curve(n, exps)
    assert all_lift_corollary(cv) is expected
    assert all_lift_theorem(to_cover(cv)) is expected


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 12).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n - 1), min_size=1, max_size=7))))
def test_to_cover_is_admissible(args):
    n, exps = args
    cv = curve(n, exps)
    if not is_irreducible(cv):
        return
    c = to_cover(cv)
    assert element_sum(c.group, c.entries) == c.group.zero
    assert c.k == len(exps) + has_infinity_branch(cv)
