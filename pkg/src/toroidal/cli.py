"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (malformed or zero element,
mismatched orders, ...), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import chern
from .caselaw import run_classification
from .lattices import format_point, quotient_reps
from .report import emit_report
from .rings import OrderKind, parse_quadint, try_div_exact, units
from .surfaces import intersection_number, intersection_points, parse_slope, search_good_configurations


def _order(text: str) -> OrderKind:
    try:
        return OrderKind.from_name(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _order_list(text: str) -> tuple[OrderKind, ...]:
    names = [t for t in text.split(",") if t]
    if not names:
        raise argparse.ArgumentTypeError("empty order list")
    orders = tuple(_order(t) for t in names)
    if len(set(orders)) != len(orders):
        raise argparse.ArgumentTypeError("repeated order in list")
    return orders


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _surface(text: str) -> chern.SurfaceClass:
    try:
        return chern.SurfaceClass.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def cmd_rings(args) -> str:
    order = args.order
    us = units(order)
    data = {"order": order.label, "units": [str(u) for u in us]}
    lines = [f"units of the {order.label} order ({len(us)}): " + ", ".join(map(str, us))]
    if args.x is not None:
        x = parse_quadint(args.x, order)
        data.update(x=str(x), conj=str(x.conj()), norm=x.norm(), trace=x.trace())
        lines.append(f"x = {x}: conj {x.conj()}, norm {x.norm()}, trace {x.trace()}")
        if args.y is not None:
            y = parse_quadint(args.y, order)
            q = try_div_exact(x, y) if y else None
            data.update(
                y=str(y), sum=str(x + y), difference=str(x - y), product=str(x * y),
                quotient=None if q is None else str(q),
            )
            lines += [
                f"x + y = {x + y}", f"x - y = {x - y}", f"x * y = {x * y}",
                f"x / y = {'not in the order' if q is None else q}",
            ]
    return _dump(data) if args.json else "\n".join(lines) + "\n"


def cmd_torsion(args) -> str:
    gamma = parse_quadint(args.gamma, args.order)
    tg = quotient_reps(gamma)
    if args.json:
        return json.dumps(tg.to_json()) + "\n"
    lines = [f"kernel of multiplication by {gamma} on C/Lambda: {len(tg)} point(s)"]
    lines += [format_point(p) for p in tg.reps]
    return "\n".join(lines) + "\n"


def cmd_intersect(args) -> str:
    s1 = parse_slope(args.s1, args.order)
    s2 = parse_slope(args.s2, args.order)
    n = intersection_number(s1, s2)
    pts = intersection_points(s1, s2) if s1 != s2 else ()
    if args.json:
        return _dump({
            "number": n,
            "points": [[[str(c) for c in w], [str(c) for c in z]] for w, z in pts],
        })
    lines = [f"C_{s1} . C_{s2} = {n}"]
    lines += [f"w={format_point(w)} z={format_point(z)}" for w, z in pts]
    return "\n".join(lines) + "\n"


def cmd_search(args) -> str:
    found = search_good_configurations(args.order)
    if args.json:
        return _dump({"order": args.order.label,
                      "classes": [[str(s) for s in c.slopes] for c in found]})
    lines = [f"good configurations over the {args.order.label} order: {len(found)} class(es)"]
    lines += [str(c) for c in found]
    return "\n".join(lines) + "\n"


def cmd_chern(args) -> str:
    pair = chern.LogPair(args.base, args.blowups, args.boundary)
    c1bar, c2bar = chern.log_chern_numbers(pair)
    k2x = chern.blowup_k2(pair.base.k2, pair.blowups)
    noether = chern.noether_filter(k2x, c2bar)
    bmy = chern.bmy_equality(c1bar, c2bar)
    if args.json:
        return _dump({"c1bar_sq": c1bar, "c2bar": c2bar, "noether": noether, "bmy_equality": bmy})
    return (
        f"base {pair.base}, {pair.blowups} blow-up(s), boundary {list(pair.boundary_selfints)}\n"
        f"c1bar^2 = {c1bar}\n"
        f"c2bar = {c2bar}\n"
        f"c1^2(X) + c2(X) = {k2x + c2bar} divisible by 12: {str(noether).lower()}\n"
        f"3*c2bar = c1bar^2: {str(bmy).lower()}\n"
    )


def cmd_classify(args) -> str:
    report = run_classification(args.orders)
    return emit_report(report, "json" if args.json else "text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toroidal",
        description="Exact verification of the classification of smooth toroidal "
                    "compactifications with 3*c2bar = c1bar^2 and c2bar = 1.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("-o", "--output", metavar="PATH", help="also write the output to PATH")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("rings", parents=[common],
                       help="unit groups and arithmetic in Z, Z[i], Z[t]",
                       description="Units of the endomorphism order (the automorphisms "
                                   "fixing the origin) and exact arithmetic on x, y.")
    p.add_argument("order", type=_order, help="rational | gaussian | eisenstein")
    p.add_argument("x", nargs="?", help="element such as 2-t or 1+i")
    p.add_argument("y", nargs="?")
    p.set_defaults(func=cmd_rings)

    p = sub.add_parser("torsion", parents=[common],
                       help="kernel of multiplication by gamma on C/Lambda",
                       description="Points z with gamma*z = 0 mod Lambda; there are "
                                   "[gamma Lambda : Lambda] = norm(gamma) of them.")
    p.add_argument("order", type=_order)
    p.add_argument("gamma", help="nonzero element, e.g. 2-1t")
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("intersect", parents=[common],
                       help="intersection of two elliptic curves through the origin",
                       description="Intersection number and points of the curves "
                                   "w = s1*z and w = s2*z on C x C (slope inf is z = 0).")
    p.add_argument("order", type=_order)
    p.add_argument("s1")
    p.add_argument("s2")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("search", parents=[common],
                       help="good configurations of four curves, up to isomorphism",
                       description="Four elliptic curves through the origin of C x C "
                                   "meeting pairwise once, in canonical form {inf, 0, 1, u}.")
    p.add_argument("order", type=_order)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("chern", parents=[common],
                       help="logarithmic Chern numbers of a blown-up pair",
                       description="c1bar^2 = K_X^2 - sum D_i^2 and c2bar = c2(X) for a "
                                   "minimal surface blown up k times with elliptic boundary.")
    p.add_argument("--base", type=_surface, required=True,
                   help="abelian, bielliptic, k3, enriques, p2, hirzebruch, ruled:g, kodaira1:d")
    p.add_argument("--blowups", type=int, default=0, metavar="K")
    p.add_argument("--boundary", type=_int_list, default=(), metavar="D1,D2,...",
                   help="boundary self-intersections; write --boundary=-1,-1")
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("classify", parents=[common],
                       help="run the whole case tree and report the survivor",
                       description="Eliminates Kodaira dimensions 2, 1, -infinity, the "
                                   "K3/Enriques models and the singular blow-down curves, "
                                   "then searches good configurations.")
    p.add_argument("--orders", type=_order_list, default=tuple(OrderKind),
                   help="comma list from rational,gaussian,eisenstein")
    p.set_defaults(func=cmd_classify)
    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"toroidal {args.command}: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(out)
        except OSError as exc:
            print(f"toroidal: cannot write {args.output}: {exc.strerror or exc}", file=sys.stderr)
            return 1
    return 0


def main() -> None:
    sys.exit(run_cli())
