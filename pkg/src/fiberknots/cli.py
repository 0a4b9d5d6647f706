"""Command line interface.

Exit status: 0 success, 2 usage or parse error, 3 domain precondition
violated, 4 smallness criterion inapplicable.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

from .bounds import BridgeIndices, epsilon_target, growth_rate_bound
from .curves import (CurveClass, FamilyParams, TwistLetter, apply_twist_word,
                     curve_from_cf, family_cf, intersection, k0_class, knot_class,
                     ktw_class)
from .exact import ContinuedFraction, ProjectiveRational, evaluate, expand
from .genus import braid_counts, fibered_genus, ktw_genus, to_cb_basis
from .smallness import (CriterionInapplicable, enumerate_witnesses,
                        family_smallness_scan)
from .surgery import (DegenerateTwist, SurgeryDescription, c7_description, export,
                      l7_description)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_INAPPLICABLE = 0, 2, 3, 4

_LETTER = re.compile(r"^(a|b|-?\d+/-?\d+)(?:\^(-?\d+))?$")


class UsageError(Exception):
    pass


def _parse(fn: Callable, text: str):
    try:
        return fn(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_twist_word(text: str) -> tuple:
    """``"b^-3,a^2,b^-5"`` -> letters; curves are ``a``, ``b`` or ``m/n``."""
    letters = []
    for token in re.split(r"[,\s]+", text.strip()):
        if not token:
            continue
        match = _LETTER.match(token)
        if not match:
            raise ValueError(f"bad twist letter {token!r}")
        curve = CurveClass.parse(match.group(1))
        letters.append(TwistLetter(curve, int(match.group(2) or 1)))
    return tuple(letters)


def _pair(c: CurveClass) -> List[int]:
    return [c.m, c.n]


def _description_json(d: SurgeryDescription) -> dict:
    return {
        "link": d.link_name,
        "components": [{"label": label, "slope": None if slope is None else str(slope)}
                       for label, slope in d.components],
        "text": export(d),
    }


def family_report(p: FamilyParams, bridge: Optional[BridgeIndices] = None,
                  figure_variant: bool = False) -> dict:
    """Everything computable about ``[r, -s, n]`` as a JSON-ready dict."""
    kn, ktw, k0 = knot_class(p), ktw_class(p.r, p.s), k0_class(p.r)
    try:
        witnesses = enumerate_witnesses(family_cf(p))
        smallness = {"applicable": True, "small": not witnesses,
                     "witnesses": [w.to_json() for w in witnesses], "reason": None}
    except CriterionInapplicable as exc:
        smallness = {"applicable": False, "small": None, "witnesses": [],
                     "reason": str(exc)}
    # small knots in S^3 are m-small; an unknown verdict stays unknown
    msmall = True if smallness["small"] else None

    try:
        l7 = _description_json(l7_description(p))
        l7["error"] = None
    except DegenerateTwist as exc:
        l7 = {"link": "L7", "components": None, "text": None, "error": str(exc)}
    c7 = _description_json(c7_description(p, figure_variant))
    c7["error"] = None

    growth = None
    if bridge is not None:
        growth = growth_rate_bound(bridge).to_json()
        growth.update(b0=bridge.b0, b1=bridge.b1,
                      assumes="knot is m-small and its exterior has Heegaard genus 2")

    return {
        "params": {"r": p.r, "s": p.s, "n": p.n},
        "continued_fraction": list(family_cf(p)),
        "curve_class": _pair(kn),
        "ktw_class": _pair(ktw),
        "k0_class": _pair(k0),
        "intersections": {"ktw_k0": intersection(ktw, k0),
                          "ktw_kn": intersection(ktw, kn),
                          "k0_kn": intersection(k0, kn)},
        "ktw_genus": ktw_genus(p.r, p.s),
        "smallness": smallness,
        "msmall": msmall,
        "heegaard_genus_bound": 2,
        "growth_rate": growth,
        "surgery": {"L7": l7, "C7": c7},
        "conditions": {
            "exterior_genus_two": "upper bound 2 by construction",
            "small": smallness["small"],
            "torus_bridge_index_unbounded": "external input",
            "hyperbolic": "out of scope",
        },
        "notes": ["hyperbolicity for r, s, n sufficiently large comes from the C7 "
                  "filling description; verify externally"],
    }


def scan_report(r: int, s: int, n_min: int, n_max: int) -> dict:
    entries = family_smallness_scan(r, s, n_min, n_max)
    not_small = [n for n, e in entries.items() if e.applicable and not e.small]
    expected = [n for n in (r - 1, r) if n_min <= n <= n_max and n >= 2]
    observed = [n for n in not_small if n >= 2]
    return {
        "params": {"r": r, "s": s, "n_min": n_min, "n_max": n_max},
        "results": [entries[n].to_json() for n in sorted(entries)],
        "summary": {"not_small": not_small, "expected_not_small": expected,
                    "matches_expected": observed == expected},
    }


def _params(args) -> FamilyParams:
    return FamilyParams(args.r, args.s, args.n)


def cmd_cf(args):
    if args.action == "eval":
        value = evaluate(_parse(ContinuedFraction.parse, args.operand))
        return {"value": str(value)}, str(value)
    cf = expand(_parse(ProjectiveRational.parse, args.operand))
    return {"coefficients": list(cf)}, str(cf) if cf else "[]"


def cmd_curve(args):
    c = curve_from_cf(_parse(ContinuedFraction.parse, args.cf))
    return {"m": c.m, "n": c.n}, f"{c.m} {c.n}"


def cmd_twist(args):
    word = _parse(parse_twist_word, args.word)
    c = apply_twist_word(word, _parse(CurveClass.parse, args.curve))
    return {"m": c.m, "n": c.n}, f"{c.m} {c.n}"


def cmd_genus(args):
    if args.ktw:
        r, s = args.ktw
        g = ktw_genus(r, s)
        return {"r": r, "s": s, "genus": g}, str(g)
    if args.curve is None:
        raise UsageError("genus needs a curve or --ktw R S")
    c = _parse(CurveClass.parse, args.curve)
    g = fibered_genus(c)
    counts = braid_counts(*to_cb_basis(c))
    data = {"m": c.m, "n": c.n, "p": counts.p, "q": counts.q,
            "strands": counts.strands, "crossings": counts.crossings,
            "euler_characteristic": counts.strands - counts.crossings, "genus": g}
    return data, str(g)


def cmd_small(args):
    witnesses = enumerate_witnesses(_parse(ContinuedFraction.parse, args.cf))
    data = {"small": not witnesses, "witnesses": [w.to_json() for w in witnesses]}
    lines = ["small" if not witnesses else "not small"]
    lines += [f"I={list(w.I)} J={list(w.J)} ({w.condition})" for w in witnesses]
    return data, "\n".join(lines)


def cmd_scan(args):
    data = scan_report(args.r, args.s, args.n_min, args.n_max)
    return data, None


def cmd_growth(args):
    data = {}
    text = []
    if args.b0 is not None or args.b1 is not None:
        if args.b0 is None or args.b1 is None:
            raise UsageError("growth needs both B0 and B1")
        rate = growth_rate_bound(BridgeIndices(args.b0, args.b1))
        data.update(rate.to_json())
        text.append(str(rate.value))
    if args.eps is not None:
        eps = _parse(Fraction, args.eps)
        data["eps"] = str(eps)
        data["b1_target"] = epsilon_target(eps)
        text.append(f"b1 >= {data['b1_target']}")
    if not data:
        raise UsageError("growth needs B0 B1 and/or --eps")
    return data, "\n".join(text)


def cmd_surgery(args):
    p = _params(args)
    if args.link == "l7":
        d = l7_description(p)
    else:
        d = c7_description(p, args.figure_variant)
    return _description_json(d), export(d).rstrip("\n")


def cmd_report(args):
    bridge = None
    if args.b0 is not None or args.b1 is not None:
        if args.b0 is None or args.b1 is None:
            raise UsageError("--b0 and --b1 must be given together")
        bridge = BridgeIndices(args.b0, args.b1)
    return family_report(_params(args), bridge, args.figure_variant), None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON")
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS,
                        help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(prog="fiberknots", parents=[common],
                                     description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cf", parents=[common], help="evaluate or expand continued fractions")
    p.add_argument("action", choices=["eval", "expand"])
    p.add_argument("operand", help="coefficients like 3,-2,5 or a fraction like 2/7")
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("curve", parents=[common], help="curve class of a continued fraction")
    p.add_argument("cf")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("twist", parents=[common], help="apply a Dehn twist word")
    p.add_argument("word", help="letters like b^-3,a^2,b^-5 (applied right to left)")
    p.add_argument("curve", help="a, b, or m/n")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("genus", parents=[common], help="fibered genus of a curve")
    p.add_argument("curve", nargs="?", help="a, b, or m/n")
    p.add_argument("--ktw", nargs=2, type=int, metavar=("R", "S"),
                   help="closed-form genus of [R, -S]")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("small", parents=[common], help="closed essential surface witnesses")
    p.add_argument("cf")
    p.set_defaults(func=cmd_small)

    p = sub.add_parser("scan", parents=[common], help="smallness of [r,-s,n] over a range of n")
    for name in ("r", "s", "n_min", "n_max"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("growth", parents=[common], help="growth rate from bridge indices")
    p.add_argument("b0", type=int, nargs="?")
    p.add_argument("b1", type=int, nargs="?")
    p.add_argument("--eps", help="rational epsilon, e.g. 1/10")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("surgery", parents=[common], help="export a surgery description")
    for name in ("r", "s", "n"):
        p.add_argument(name, type=int)
    p.add_argument("link", choices=["l7", "c7"])
    p.add_argument("--figure-variant", action="store_true",
                   help="use -n+1 as the fourth C7 slope")
    p.set_defaults(func=cmd_surgery)

    p = sub.add_parser("report", parents=[common], help="full JSON report for [r,-s,n]")
    for name in ("r", "s", "n"):
        p.add_argument(name, type=int)
    p.add_argument("--b0", type=int)
    p.add_argument("--b1", type=int)
    p.add_argument("--figure-variant", action="store_true")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        data, text = args.func(args)
    except UsageError as exc:
        print(f"fiberknots {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CriterionInapplicable as exc:
        print(f"fiberknots {args.command}: criterion inapplicable: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except ValueError as exc:
        print(f"fiberknots {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN

    if text is None or getattr(args, "json", False):
        output = json.dumps(data, sort_keys=True, indent=2)
    else:
        output = text
    output += "\n"
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
