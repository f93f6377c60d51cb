"""Command-line interface.

Every command prints one JSON document (sorted keys, no timestamps) unless
``--table`` is given. Exit status: 0 affirmative verdict, 3 negative
verdict, 1 usage or input error, 2 internal invariant breach (two
independent decision routes disagreed).
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path

from .abelian_group import GroupSpec
from .cover import CoverSpec, surface_invariants
from .enumeration import CensusEntry, CensusReport, census, classify, render_table
from .homology import MappingClass, lifts_homology_oracle
from .lifting import (
    DEFAULT_MAX_K,
    all_lift_bruteforce,
    all_lift_theorem,
    first_bullet,
    lifts,
    smod_iso,
)
from .perm import format_cycles, parse_cycles
from .superelliptic import all_lift_corollary, curve_cover_json, parse_curve, to_cover

EXIT_YES = 0
EXIT_INPUT = 1
EXIT_BREACH = 2
EXIT_NO = 3

CURVE_HELP = """\
curve grammar: y^N = (x-R)^E (x-R)^E ...
  ^E is optional (default 1) and must satisfy 1 <= E <= N-1.
  R is an integer, decimal (0.5), fraction (3/2) or label (z1);
  negative roots are written (x-(-3)). (x+3) and (x--3) are rejected.
"""


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise InputError(f"{what} must be comma-separated integers, got {text!r}") from None


def _int_range(text: str) -> list[int]:
    """'3', '2-6', '2..6' or '2,4,6'."""
    out: list[int] = []
    for part in text.replace(" ", "").split(","):
        for sep in ("..", "-"):
            if sep in part:
                lo, hi = part.split(sep, 1)
                try:
                    out.extend(range(int(lo), int(hi) + 1))
                except ValueError:
                    raise InputError(f"bad range {part!r}") from None
                break
        else:
            try:
                out.append(int(part))
            except ValueError:
                raise InputError(f"bad integer {part!r}") from None
    return out


def _add_cover_args(p: argparse.ArgumentParser):
    src = p.add_argument_group("cover input (exactly one source)")
    src.add_argument("--group", type=int, metavar="N", help="cyclic deck group Z/N")
    src.add_argument("--factors", metavar="N1,N2,...", help="abelian deck group by cyclic factor orders")
    src.add_argument(
        "--tuple",
        metavar="A1,A2,...",
        help="residues mod N with --group; with --factors, elements separated by ';' "
        "and coordinates by ',' (e.g. '1,0;0,1;1,1')",
    )
    src.add_argument("--cover", metavar="FILE", help='JSON {"invariant_factors": [...], "tuple": [[...], ...]}; - for stdin')


def _load_cover(args) -> CoverSpec:
    inline = args.group is not None or args.factors is not None or args.tuple is not None
    if args.cover is not None:
        if inline:
            raise InputError("give either --cover or --group/--factors with --tuple, not both")
        text = sys.stdin.read() if args.cover == "-" else Path(args.cover).read_text()
        try:
            return CoverSpec.from_json(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"cover file is not valid JSON: {exc}") from None
    if args.tuple is None or (args.group is None) == (args.factors is None):
        raise InputError("a cover needs --tuple together with exactly one of --group or --factors")
    if args.group is not None:
        g = GroupSpec.cyclic(args.group)
        entries = [(a,) for a in _int_list(args.tuple, "--tuple")]
    else:
        factors = _int_list(args.factors, "--factors")
        g = GroupSpec(tuple(factors))
        entries = [tuple(_int_list(chunk, "--tuple element")) for chunk in args.tuple.split(";")]
    for a in entries:
        if len(a) != g.rank:
            raise InputError(f"element {a} does not have {g.rank} coordinates")
        for x, n in zip(a, g.invariant_factors):
            if not 0 <= x < n:
                raise InputError(f"tuple entries must be residues in [0, {n}), got {x}")
    return CoverSpec(g, tuple(entries))


def _emit(data: dict, table: bool):
    if table:
        width = max(len(k) for k in data)
        for key in sorted(data):
            value = data[key]
            if not isinstance(value, str):
                value = json.dumps(value, sort_keys=True)
            print(f"{key:<{width}}  {value}")
    else:
        print(json.dumps(data, sort_keys=True, indent=2))


def cmd_lifts(args) -> int:
    c = _load_cover(args)
    sigma = parse_cycles(args.perm, c.k)
    mc = MappingClass(sigma, args.orientation)
    decision = lifts(c, mc)
    report = decision.to_json()
    report["permutation"] = format_cycles(sigma)
    report["orientation"] = mc.orientation
    report["oracle_agrees"] = None
    if args.verify:
        report["oracle_agrees"] = lifts_homology_oracle(c, mc) == decision.lifts
    _emit(report, args.table)
    if report["oracle_agrees"] is False:
        print(f"internal error: homology oracle disagrees on {c}, {report['permutation']}", file=sys.stderr)
        return EXIT_BREACH
    return EXIT_YES if decision.lifts else EXIT_NO


def cmd_check_all(args) -> int:
    c = _load_cover(args)
    report: dict = {"mode": args.mode, "theorem": None, "bruteforce_full": None, "bruteforce_transpositions": None}
    if args.mode in ("theorem", "both"):
        report["theorem"] = all_lift_theorem(c)
    if args.mode in ("brute", "both"):
        report["bruteforce_transpositions"] = all_lift_bruteforce(c, "transpositions")
        if c.k <= DEFAULT_MAX_K:
            report["bruteforce_full"] = all_lift_bruteforce(c, "full")
    verdicts = [v for key, v in report.items() if key != "mode" and v is not None]
    report["agree"] = len(set(verdicts)) == 1
    report["all_lift"] = verdicts[0]
    _emit(report, args.table)
    if not report["agree"]:
        print(f"internal error: decision routes disagree on {c}: {report}", file=sys.stderr)
        return EXIT_BREACH
    return EXIT_YES if report["all_lift"] else EXIT_NO


def cmd_curve(args) -> int:
    cv = parse_curve(args.curve)
    if args.question == "cover":
        _emit(curve_cover_json(cv), args.table)
        return EXIT_YES
    c = to_cover(cv)
    if args.question == "genus":
        report = surface_invariants(c).to_json()
        report.update(curve_cover_json(cv))
        _emit(report, args.table)
        return EXIT_YES
    corollary = all_lift_corollary(cv)
    theorem = all_lift_theorem(c)
    _emit({"all_lift": corollary, "corollary": corollary, "theorem": theorem, "agree": corollary == theorem}, args.table)
    if corollary != theorem:
        print(f"internal error: corollary and theorem disagree on {args.curve!r}", file=sys.stderr)
        return EXIT_BREACH
    return EXIT_YES if corollary else EXIT_NO


def cmd_classify(args) -> int:
    ks = _int_range(args.k)
    if args.factors is not None:
        if args.n is not None:
            raise InputError("give either --n or --factors, not both")
        g = GroupSpec.from_orders(_int_list(args.factors, "--factors"))
        entries = tuple(CensusEntry(g, k, tuple(classify(g, k, args.unlabeled))) for k in sorted(set(ks)))
        report = CensusReport(args.unlabeled, entries)
    else:
        if args.n is None:
            raise InputError("classify needs --n (or --factors)")
        report = census(_int_range(args.n), ks, args.unlabeled, args.workers)
    if args.table:
        print(render_table(report))
    else:
        print(json.dumps(report.to_json(), sort_keys=True, indent=2))
    return EXIT_YES


def cmd_genus(args) -> int:
    c = _load_cover(args)
    report = surface_invariants(c).to_json()
    report.update(c.to_json())
    _emit(report, args.table)
    return EXIT_YES


def cmd_smod(args) -> int:
    c = _load_cover(args)
    inv = surface_invariants(c)
    verdict = smod_iso(c)
    _emit(
        {
            "smod_iso": verdict,
            "first_bullet": first_bullet(c),
            "hyperbolic": inv.hyperbolic,
            "n": c.n,
            "k": c.k,
        },
        args.table,
    )
    return EXIT_YES if verdict else EXIT_NO


def _orientation(text: str) -> int:
    table = {"+1": 1, "1": 1, "+": 1, "-1": -1, "-": -1}
    if text not in table:
        raise argparse.ArgumentTypeError("orientation must be +1 or -1")
    return table[text]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="branchlift",
        description="Decide which homeomorphisms of the sphere lift to a cyclic branched cover.",
        epilog="Environment: BRANCHLIFT_MAX_AUT bounds |A| for automorphism enumeration (default 64).",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, **kw):
        p = sub.add_parser(name, help=help_text, description=help_text, **kw)
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="table", action="store_false", help="JSON output (default)")
        fmt.add_argument("--table", dest="table", action="store_true", help="fixed-width text output")
        p.set_defaults(func=func, table=False)
        return p

    p = add("lifts", cmd_lifts, "does a homeomorphism permuting the branch points by PERM lift?")
    _add_cover_args(p)
    p.add_argument("--perm", required=True, help='1-based cycle notation, e.g. "(2 3)", "(1 2)(3 4)" or "id"')
    p.add_argument("--orientation", type=_orientation, default=1, help="+1 (preserving, default) or -1 (reversing)")
    p.add_argument("--verify", action="store_true", help="cross-check with the homology kernel oracle")

    p = add("check-all", cmd_check_all, "does every homeomorphism of the sphere lift?")
    _add_cover_args(p)
    p.add_argument("--mode", choices=("theorem", "brute", "both"), default="both")

    p = add(
        "curve",
        cmd_curve,
        "questions about the cover defined by a superelliptic curve",
        epilog=CURVE_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("curve", help='e.g. "y^5 = (x-0)(x-1)(x-2)^3"')
    p.add_argument("--question", choices=("lift", "cover", "genus"), default="lift")

    p = add("classify", cmd_classify, "census of admissible tuples up to equivalence")
    p.add_argument("--n", help="cyclic order(s): 5, 2-6, 2..6 or 2,4,6")
    p.add_argument("--factors", help="a single abelian group by cyclic factor orders, e.g. 2,2")
    p.add_argument("--k", required=True, help="number(s) of branch points, same syntax as --n")
    p.add_argument("--unlabeled", action="store_true", help="also identify tuples that differ by reordering")
    p.add_argument("--workers", type=int, default=1, help="worker processes for ranged censuses")

    p = add("genus", cmd_genus, "Euler characteristic and genus of the covering surface")
    _add_cover_args(p)

    p = add("smod", cmd_smod, "is SMod(cover)/A isomorphic to Mod of the sphere?")
    _add_cover_args(p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    # every input-validation error in the package derives from ValueError
    except (InputError, ValueError, OSError) as exc:
        print(json.dumps({"error": str(exc), "kind": type(exc).__name__}, sort_keys=True))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
