"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 unsupported input in single-curve commands.
"""
from __future__ import annotations

import argparse
import json
import math
import re
import sys

from .arith import Place
from .clusters import ROWS, cluster_picture, real_configuration, render_cluster, render_real
from .curves import RationalCubic, integralize
from .errors import (
    DegenerateSturm, EvenPrimeUnsupported, NotPrime, NotSeparable, NotSquarefree, ParityError,
    ParseError, RootAtZero, StrictModeUnsupported, Unsupported,
)
from .globalparity import global_identity
from .local import local_report
from .parse import parse_cubic_coeffs, parse_poly, parse_rationals
from .sturm import chain_places, count_roots, generalized_H, sign_changes, sturm_sequence
from .twotorsion import mobius_match, normal_form
from .verify import CHECKS, VerifyConfig, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _cubic(text: str) -> RationalCubic:
    a, b, c = parse_cubic_coeffs(text)
    try:
        return RationalCubic(a, b, c)
    except (RootAtZero, NotSeparable) as exc:
        raise UsageError(f"invalid cubic {text!r}: {exc}") from None


def _place(text: str) -> Place:
    try:
        return Place.parse(text)
    except (NotPrime, ValueError) as exc:
        raise UsageError(str(exc)) from None


_FACTOR = re.compile(r"\(([^()]*)\)")


def _roots(text: str) -> tuple:
    """Ordered roots from ``"r1,r2,r3"`` or a product of three linear factors."""
    if "x" not in text.lower():
        roots = parse_rationals(text)
    else:
        rest = _FACTOR.sub("", text).replace("*", "").strip()
        if rest:
            raise ParseError("expected a product of parenthesized linear factors", text, 0)
        roots = []
        for m in _FACTOR.finditer(text):
            g = parse_poly(m.group(1))
            if g.degree != 1:
                raise ParseError("factor is not linear", text, m.start())
            roots.append(-g.coeff(0) / g.coeff(1))
    if len(roots) != 3:
        raise ParseError(f"expected three roots, got {len(roots)}", text, 0)
    return tuple(roots)


def _emit(args, data: dict, text: str):
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _report_text(f: RationalCubic, r) -> str:
    lines = [f"f = {f}", f"place: {r.place}"]
    if not r.supported:
        lines.append(f"unsupported: {r.reason}")
        lines.append(f"H = {r.H:+d}")
        return "\n".join(lines)
    payload = r.payload.to_json() if hasattr(r.payload, "to_json") else {}
    for key, value in payload.items():
        lines.append(f"{key}: {value}")
    lines += [
        f"w_E = {r.w_E:+d}, w_JacE' = {r.w_JacEprime:+d}",
        f"lambda = {r.lam:+d}, H = {r.H:+d}",
        f"w_E w_JacE' = lambda H: {'yes' if r.identity_holds else 'NO'}",
    ]
    return "\n".join(lines)


def cmd_local(args) -> int:
    f = _cubic(args.cubic)
    place = _place(args.place)
    r = local_report(f, place)
    _emit(args, r.to_json(), _report_text(f, r))
    if not r.supported:
        return EXIT_UNSUPPORTED
    return EXIT_OK if r.identity_holds else EXIT_FAIL


def cmd_global(args) -> int:
    f = _cubic(args.cubic)
    try:
        g = global_identity(f, args.mode)
    except StrictModeUnsupported as exc:
        places = ", ".join(map(str, exc.places))
        if args.json:
            print(json.dumps({"error": "strict mode unsupported",
                              "places": [v.to_json() for v in exc.places]}, sort_keys=True))
        else:
            print(f"strict mode unsupported at: {places}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    lines = [f"f = {g.cubic} ({args.mode})"]
    for r in g.reports:
        if r.supported:
            lines.append(f"  {r.place}: H {r.H:+d}  lambda {r.lam:+d}  w*w {r.ww:+d}")
        else:
            lines.append(f"  {r.place}: H {r.H:+d}  lambda assumed ({r.reason})")
    lines += [
        f"prod H = {g.product_H:+d}",
        f"prod lambda = {g.product_lambda:+d}, prod w*w = {g.product_w:+d}",
        f"all identities: {'yes' if g.all_identities else 'NO'}",
    ]
    _emit(args, g.to_json(), "\n".join(lines))
    return EXIT_OK if g.all_identities else EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        cfg = VerifyConfig(seed=args.seed, count=args.count, height=args.height, check=args.check,
                           force_case=args.force_case, force_type=args.force_type,
                           workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    summary = run_verify(cfg)
    _emit(args, summary.to_json(), summary.to_text())
    return EXIT_OK if summary.ok else EXIT_FAIL


def _point(text: str):
    t = text.strip().lower()
    if t in ("inf", "+inf", "oo"):
        return math.inf
    if t in ("-inf", "-oo"):
        return -math.inf
    return parse_rationals(t)[0]


def cmd_sturm(args) -> int:
    f = parse_poly(args.poly)
    if f.degree < 1:
        raise UsageError("Sturm chain needs a nonconstant polynomial")
    seq = sturm_sequence(f)
    data = {
        "chain": [str(P) for P in seq.polys],
        "constants_at_zero": [str(x) for x in seq.constants_at_zero],
        "leads": [str(x) for x in seq.leads],
        "degenerate": seq.degenerate,
        "reason": seq.reason,
    }
    lines = [f"P_{i} = {P}" for i, P in enumerate(seq.polys)]
    status = EXIT_OK
    a, b = (_point(x) for x in args.at.split(",")) if args.at else (0, math.inf)
    data["sigma"] = {str(a): sign_changes(seq, a), str(b): sign_changes(seq, b)}
    lines.append(f"sigma({a}) = {data['sigma'][str(a)]}, sigma({b}) = {data['sigma'][str(b)]}")
    try:
        data["roots_in_interval"] = count_roots(f, a, b, seq)
        data["real_roots"] = count_roots(f, None, math.inf, seq)
        lines.append(f"roots in ({a}, {b}]: {data['roots_in_interval']}")
        lines.append(f"real roots: {data['real_roots']}")
    except NotSquarefree as exc:
        lines.append(f"root count unavailable: {exc}")
        status = EXIT_UNSUPPORTED
    if seq.degenerate:
        lines.append(f"degenerate chain: {seq.reason}")
        status = EXIT_UNSUPPORTED
    elif f.lead == 1:
        data["H"] = {}
        for v in chain_places(seq):
            h = generalized_H(f, v, seq)
            data["H"][str(v)] = h
            lines.append(f"H at {v}: {h:+d}")
    _emit(args, data, "\n".join(lines))
    return status


def cmd_mobius(args) -> int:
    m = mobius_match(_roots(args.cubic1), _roots(args.cubic2))
    nf = normal_form(m)
    data = m.to_json()
    data["model"] = nf.to_json()
    lines = [f"A = {m.A}, B = {m.B}, C = {m.C}, D = {m.D}", f"branch: {m.branch}",
             f"model: {nf.d} y^2 = {nf.model}"]
    if nf.monic is not None:
        lines.append(f"  with x' = 1 - (C/A) x: x' g1 = {nf.scale} * x' ({nf.monic})")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_render(args) -> int:
    f = _cubic(args.cubic)
    place = _place(args.place)
    if place.kind == "real":
        config = real_configuration(f)
        text = render_real(config)
        data = {"place": "real", "case": config.case_id, "picture": text}
    elif place.kind == "padic":
        g, _ = integralize(f)
        try:
            pic = cluster_picture(g, place.p)
            text = render_cluster(pic)
        except (EvenPrimeUnsupported, Unsupported) as exc:
            print(f"cannot render at {place}: {exc}", file=sys.stderr)
            return EXIT_UNSUPPORTED
        data = {"place": place.to_json(), "shape": pic.shape, "picture": text}
    else:
        print("nothing to render at the complex place", file=sys.stderr)
        return EXIT_UNSUPPORTED
    _emit(args, data, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--workers", type=int, default=1, help="worker processes (verify)")

    parser = argparse.ArgumentParser(prog="twoparity", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("local", parents=[common], help="local report at one place")
    p.add_argument("cubic", help="'a,b,c' or a monic cubic such as '(x-17)(x-1)(x-2)'")
    p.add_argument("--place", required=True, help="real, complex or a prime")
    p.set_defaults(func=cmd_local)

    p = sub.add_parser("global", parents=[common], help="products over all relevant places")
    p.add_argument("cubic")
    p.add_argument("--mode", choices=("strict", "inferred"), default="strict")
    p.set_defaults(func=cmd_global)

    p = sub.add_parser("verify", parents=[common], help="seeded batch verification")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--height", type=int, default=1000)
    p.add_argument("--check", choices=CHECKS, default="identity")
    p.add_argument("--force-case", type=int, choices=range(1, 7), metavar="K")
    p.add_argument("--force-type", choices=ROWS, metavar="ROW")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sturm", parents=[common], help="Sturm chain, root counts, chain error term")
    p.add_argument("poly")
    p.add_argument("--at", help="interval ends 'a,b' (use inf / -inf)")
    p.set_defaults(func=cmd_sturm)

    p = sub.add_parser("mobius", parents=[common], help="match two root triples")
    p.add_argument("cubic1", help="'r1,r2,r3' or '(x-r1)(x-r2)(x-r3)'")
    p.add_argument("cubic2")
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("render", parents=[common], help="cluster picture or real root layout")
    p.add_argument("cubic")
    p.add_argument("--place", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Unsupported, DegenerateSturm) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ParityError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
