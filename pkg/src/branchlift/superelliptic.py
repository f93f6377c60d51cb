"""Superelliptic curves y^n = (x - z_1)^a_1 ... (x - z_t)^a_t as cyclic covers.

Curves are combinatorial data only: the roots are exact rationals or
symbolic labels used for distinctness, never evaluated.

Accepted input, whitespace anywhere between tokens::

    curve  := "y" "^" INT "=" factor+
    factor := "(" "x" "-" root ")" [ "^" INT ]
    root   := NUMBER | LABEL | "(" ["-"] NUMBER ")"
    NUMBER := DIGITS [ "." DIGITS | "/" DIGITS ]
    LABEL  := letter (letter | digit | "_")*, not "x" or "y"

A negative root is written ``(x-(-3))``; ``(x--3)`` and ``(x+3)`` are rejected.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .abelian_group import GroupSpec
from .cover import CoverSpec

Root = Fraction | str


class CurveError(ValueError):
    pass


class CurveSyntaxError(CurveError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        detail = f"{message} at position {position}"
        if text:
            detail += f"\n  {text}\n  {' ' * position}^"
        super().__init__(detail)


class DuplicateRoot(CurveError):
    def __init__(self, root: Root):
        self.root = root
        super().__init__(f"root {_render_root(root)} appears more than once; roots must be distinct")


class ExponentOutOfRange(CurveError):
    def __init__(self, index: int, exponent: int, n: int):
        self.index = index
        super().__init__(
            f"exponent {exponent} of factor {index + 1} is outside 1..{n - 1}"
            + (f" (reduce it mod {n} to {exponent % n})" if exponent % n else "")
        )


class DegenerateN(CurveError):
    def __init__(self, n: int):
        super().__init__(f"the power of y must be at least 2, got {n}")


class Reducible(CurveError):
    def __init__(self, n: int, d: int):
        super().__init__(f"curve is reducible: gcd(n, a_1, ..., a_t) = {d} (n = {n})")


@dataclass(frozen=True)
class CurveSpec:
    n: int
    factors: tuple[tuple[Root, int], ...]

    def __post_init__(self):
        if self.n < 2:
            raise DegenerateN(self.n)
        factors = tuple((_as_root(z), int(a)) for z, a in self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise CurveError("a curve needs at least one factor (x - z)")
        seen = set()
        for i, (z, a) in enumerate(factors):
            if z in seen:
                raise DuplicateRoot(z)
            seen.add(z)
            if not 1 <= a <= self.n - 1:
                raise ExponentOutOfRange(i, a, self.n)

    @property
    def t(self) -> int:
        return len(self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.factors)


def _as_root(z) -> Root:
    if isinstance(z, str):
        return z
    return Fraction(z)


def _render_root(z: Root) -> str:
    if isinstance(z, str):
        return z
    body = str(abs(z.numerator)) if z.denominator == 1 else f"{abs(z.numerator)}/{z.denominator}"
    return f"(-{body})" if z < 0 else body


def render(cv: CurveSpec) -> str:
    parts = " ".join(f"(x-{_render_root(z)})^{a}" for z, a in cv.factors)
    return f"y^{cv.n} = {parts}"


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+|/\d+)?)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<sym>[()^=\-+*]))"
)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                start = len(text[pos:]) - len(text[pos:].lstrip()) + pos
                raise CurveSyntaxError(f"unexpected character {text[start]!r}", start, text)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("eof", "", len(self.text))

    def fail(self, expected: str):
        _, value, pos = self.peek()
        found = repr(value) if value else "end of input"
        raise CurveSyntaxError(f"expected {expected}, found {found}", pos, self.text)

    def take(self, kind: str, value: str | None = None, expected: str | None = None) -> str:
        k, v, _ = self.peek()
        if k != kind or (value is not None and v != value):
            self.fail(expected or repr(value or kind))
        self.i += 1
        return v

    def at(self, kind: str, value: str | None = None) -> bool:
        k, v, _ = self.peek()
        return k == kind and (value is None or v == value)


def _int(sc: _Scanner, what: str) -> int:
    k, v, _ = sc.peek()
    if k != "num" or not v.isdigit():
        sc.fail(what)
    sc.i += 1
    return int(v)


def _root(sc: _Scanner) -> Root:
    k, v, pos = sc.peek()
    if k == "num":
        sc.i += 1
        return Fraction(v)
    if k == "name":
        if v in ("x", "y"):
            sc.fail("a root")
        sc.i += 1
        return v
    if sc.at("sym", "("):
        sc.i += 1
        negative = False
        if sc.at("sym", "-"):
            sc.i += 1
            negative = True
        value = Fraction(sc.take("num", expected="a number"))
        sc.take("sym", ")", "')'")
        return -value if negative else value
    if sc.at("sym", "-"):
        raise CurveSyntaxError("negative roots must be parenthesized, e.g. (x-(-3))", pos, sc.text)
    sc.fail("a root")


def parse_curve(text: str) -> CurveSpec:
    """Parse ``y^N = (x-R)^E ...``; exponents default to 1.

    >>> parse_curve("y^2 = (x-0)(x-1)(x-2)").exponents
    (1, 1, 1)
    """
    sc = _Scanner(text)
    sc.take("name", "y", "'y'")
    sc.take("sym", "^", "'^'")
    n = _int(sc, "the power of y")
    sc.take("sym", "=", "'='")
    factors: list[tuple[Root, int]] = []
    while True:
        if not sc.at("sym", "("):
            if factors and sc.at("eof"):
                break
            sc.fail("'(' starting a factor (x-R)")
        sc.i += 1
        sc.take("name", "x", "'x'")
        if sc.at("sym", "+"):
            sc.fail("'-' (write (x-(-R)) for a negative root)")
        sc.take("sym", "-", "'-'")
        z = _root(sc)
        sc.take("sym", ")", "')'")
        a = 1
        if sc.at("sym", "^"):
            sc.i += 1
            a = _int(sc, "an exponent")
        factors.append((z, a))
    return CurveSpec(n, tuple(factors))


def is_irreducible(cv: CurveSpec) -> bool:
    return math.gcd(cv.n, *cv.exponents) == 1


def has_infinity_branch(cv: CurveSpec) -> bool:
    return sum(cv.exponents) % cv.n != 0


def to_cover(cv: CurveSpec) -> CoverSpec:
    """The cover of P^1 given by projection to x, as a tuple over Z/n.

    When the exponents do not sum to 0 mod n, infinity is a branch point
    and carries the entry -(a_1 + ... + a_t).
    """
    d = math.gcd(cv.n, *cv.exponents)
    if d != 1:
        raise Reducible(cv.n, d)
    entries = list(cv.exponents)
    if has_infinity_branch(cv):
        entries.append(-sum(entries) % cv.n)
    g = GroupSpec.cyclic(cv.n)
    return CoverSpec(g, tuple(g.element(a) for a in entries))


def all_lift_corollary(cv: CurveSpec) -> bool:
    """Whether every homeomorphism of P^1 lifts, read off n, t and the exponents."""
    d = math.gcd(cv.n, *cv.exponents)
    if d != 1:
        raise Reducible(cv.n, d)
    n, t, a = cv.n, cv.t, cv.exponents
    if len(set(a)) == 1 and t % n in (0, n - 1):
        return True
    if n >= 3 and t == 1:
        return True
    return n >= 3 and t == 2 and (a[0] + a[1]) % n == 0


def curve_cover_json(cv: CurveSpec) -> dict:
    data = to_cover(cv).to_json()
    data["infinity_branch"] = has_infinity_branch(cv)
    return data
