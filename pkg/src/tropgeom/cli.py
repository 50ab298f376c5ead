"""Command-line front end.

Exit codes: 0 success, 1 domain error (e.g. zero polynomial), 2 usage or
parse error. Reports go to stdout only when the whole command succeeded.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from . import corpus
from .errors import InputError, TropicalError
from .initial import initial_form, is_monomial, member_via_initial
from .laurent import parse_poly, parse_scalar, to_string, tropicalize
from .planecurve import (
    check_balancing,
    check_connected_codim1,
    curve_contains,
    dual_curve,
    newton_polygon,
    regular_subdivision,
)
from .render import RenderOptions, render_svg
from .tropical import (
    format_trop,
    in_hypersurface,
    parse_min_poly,
    prevariety_member,
    trop_eval,
    univariate_roots,
)
from .valuation import ValuationSpec
from .verify import check_point, first_order_witness

PREVARIETY_NOTE = (
    "note: this is the prevariety of the given generators; "
    "it may be larger than trop(V(I))"
)


class UsageError(Exception):
    pass


def _rats(text: str):
    try:
        return tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected comma-separated rationals, got {text!r}") from None


def _fmt(x) -> str:
    return str(x)


def _pt(p) -> str:
    return "(" + ", ".join(_fmt(x) for x in p) + ")"


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _load(args, text):
    return parse_poly(text, args.spec, args.names)


def _trop_input(args, text):
    if text.lstrip().startswith("min-poly"):
        return parse_min_poly(text, args.names), None
    f = _load(args, text)
    return tropicalize(f), f


# -- subcommands -------------------------------------------------------------


def cmd_tropicalize(args, out):
    f = _load(args, args.poly)
    F = tropicalize(f)
    out.append(f"field: {args.spec}")
    out.append(f"polynomial: {to_string(f)}")
    out.append(f"trop(f) = {format_trop(F, f.names)}")
    for u, v in F.terms.items():
        out.append(f"  {_vec(u)} -> {v}")


def cmd_roots(args, out):
    F, _ = _trop_input(args, args.poly)
    out.append(f"F = {format_trop(F, args.names)}")
    for r, m in univariate_roots(F):
        out.append(f"root {r} multiplicity {m}")


def _curve_report(args, F, out):
    poly = newton_polygon(F)
    sub = regular_subdivision(F)
    C = dual_curve(F)
    out.append(f"newton polygon ({poly.kind}): " + " ".join(_vec(v) for v in poly.vertices))
    out.append(f"subdivision: {len(sub.cells)} cell(s)")
    for i, cell in enumerate(sub.cells):
        out.append(f"  cell {i}: " + " ".join(_vec(v) for v in cell.vertices))
    out.append(f"curve vertices: {len(C.vertices)}")
    for i, v in enumerate(C.vertices):
        out.append(f"  v{i} = {_pt(v)}")
    out.append(f"edges: {len(C.edges)}")
    for e in C.edges:
        i, j = e.endpoints
        out.append(
            f"  v{i} -- v{j}  direction {_vec(e.direction)}  weight {e.weight}"
            f"  dual {_vec(e.dual[0])}-{_vec(e.dual[1])}"
        )
    out.append(f"rays: {len(C.rays)}")
    for r in C.rays:
        out.append(
            f"  v{r.base} + pos{_vec(r.direction)}  weight {r.weight}"
            f"  dual {_vec(r.dual[0])}-{_vec(r.dual[1])}"
        )
    if C.lineality:
        out.append("lineality: yes (union of parallel lines)")
    report = check_balancing(C)
    for vb in report.vertices:
        terms = " + ".join(f"{w}*{_vec(d)}" for d, w in vb.contributions)
        out.append(f"  balance at v{vb.vertex}: {terms} = {_vec(vb.total)}")
    out.append(f"balanced: {'yes' if report.passed else 'no'}")
    out.append(
        f"connected through codimension one: {'yes' if check_connected_codim1(C) else 'no'}"
    )
    return sub, C


def cmd_curve(args, out):
    F, f = _trop_input(args, args.poly)
    out.append(f"field: {args.spec}")
    if f is not None:
        out.append(f"polynomial: {to_string(f)}")
    out.append(f"trop(f) = {format_trop(F, args.names)}")
    _curve_report(args, F, out)


def cmd_initial(args, out):
    f = _load(args, args.poly)
    w = _rats(args.at)
    g = initial_form(f, w)
    out.append(f"trop(f)(w) = {trop_eval(tropicalize(f), w)}")
    out.append(f"in_w(f) = {g}  over {g.field_name()}")
    out.append(f"monomial: {'yes' if is_monomial(g) else 'no'}")


def cmd_member(args, out):
    fs = [_load(args, text) for text in args.polys]
    w = _rats(args.at)
    Fs = [tropicalize(f) for f in fs]
    for f, F in zip(fs, Fs):
        hyp = in_hypersurface(F, w)
        try:
            via = member_via_initial(f, w)
            via_text = "yes" if via else "no"
        except TropicalError as exc:
            via, via_text = None, f"n/a ({exc})"
        flag = "" if via is None or via == hyp else "  DISAGREE"
        out.append(f"{to_string(f)}: hypersurface {'yes' if hyp else 'no'}; "
                   f"initial form {via_text}{flag}")
    inside = prevariety_member(Fs, w)
    out.append(f"in prevariety: {'yes' if inside else 'no'}")
    if len(fs) > 1:
        out.append(PREVARIETY_NOTE)


def cmd_check_point(args, out):
    f = _load(args, args.poly)
    pt = [parse_scalar(x, args.spec) for x in args.point.split(",")]
    pc = check_point(f, pt)
    out.append(f"value: {pc.value}")
    out.append(f"zero: {pc.is_zero.value}")
    if pc.margin is not None:
        out.append(f"precision margin: {pc.margin}")
    out.append(f"val vector: {_pt(pc.val_vector)}")
    out.append(f"in trop(V(f)): {'yes' if pc.in_trop else 'no'}")
    if pc.is_zero.name == "UP_TO_PRECISION" and not pc.conclusive:
        out.append("inconclusive: precision margin below 1")


def cmd_witness(args, out):
    f = _load(args, args.poly)
    w = _rats(args.at)
    g = initial_form(f, w)
    out.append(f"in_w(f) = {g}  over {g.field_name()}")
    wit = first_order_witness(f, w, args.bound)
    if wit is None:
        out.append("no rational witness found (inconclusive)")
        return
    out.append(f"residue point: {_pt(wit.residue_point)}")
    out.append(f"point: {_pt(wit.point)}")
    out.append(f"f(point) = {wit.value}")
    out.append(f"delta: {wit.delta}")


def cmd_render(args, out):
    F, _ = _trop_input(args, args.poly)
    viewport = _rats(args.viewport) if args.viewport else None
    if viewport is not None and len(viewport) != 4:
        raise UsageError("--viewport needs xmin,ymin,xmax,ymax")
    opts = RenderOptions(
        viewport=viewport,
        ray_clip_length=Fraction(args.clip),
        weight_labels=not args.no_labels,
        show_subdivision=args.subdivision,
        scale=Fraction(args.scale),
    )
    svg = render_svg(dual_curve(F), regular_subdivision(F), opts)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
        out.append(f"wrote {args.output}")
    else:
        out.append(svg.rstrip("\n"))


def cmd_selftest(args, out):
    rng = random.Random(args.seed)
    failures = 0
    for k in range(args.count):
        f = corpus.random_padic_curve(rng)
        F = tropicalize(f)
        C = dual_curve(F)
        ok = check_balancing(C).passed and check_connected_codim1(C)
        for _ in range(20):
            w = (Fraction(rng.randint(-12, 12), rng.randint(1, 4)),
                 Fraction(rng.randint(-12, 12), rng.randint(1, 4)))
            ok &= in_hypersurface(F, w) == curve_contains(C, w)
            wi = tuple(Fraction(round(x)) for x in w)
            ok &= member_via_initial(f, wi) == in_hypersurface(F, wi)
        if not ok:
            failures += 1
            out.append(f"FAIL case {k}: {to_string(f)}")
    out.append(f"selftest seed={args.seed}: {args.count - failures}/{args.count} passed")
    return 1 if failures else 0


# -- wiring ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropgeom", description="Tropical plane curves over valued fields."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, default_vars="x,y", poly=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--field", default="trivial",
                       help="trivial, padic:<p> or puiseux[:<precision>]")
        p.add_argument("--vars", default=default_vars, help="comma-separated names")
        if poly:
            p.add_argument("poly")
        p.set_defaults(func=func)
        return p

    add("tropicalize", cmd_tropicalize, "coefficient valuations and trop(f)")
    add("roots", cmd_roots, "roots of a univariate tropical polynomial", "x")
    add("curve", cmd_curve, "subdivision, dual curve, balancing, connectivity")
    p = add("initial", cmd_initial, "initial form in_w(f)")
    p.add_argument("--at", required=True)
    p = add("member", cmd_member, "membership via both oracles", poly=False)
    p.add_argument("polys", nargs="+")
    p.add_argument("--at", required=True)
    p = add("check-point", cmd_check_point, "evaluate f and compare with trop(f)")
    p.add_argument("--point", required=True)
    p = add("witness", cmd_witness, "first-order witness for w on the curve")
    p.add_argument("--at", required=True)
    p.add_argument("--bound", type=int, default=50)
    p = add("render", cmd_render, "SVG drawing of the curve")
    p.add_argument("-o", "--output")
    p.add_argument("--clip", default="2", help="ray clip length")
    p.add_argument("--scale", default="40", help="pixels per unit")
    p.add_argument("--viewport", help="xmin,ymin,xmax,ymax")
    p.add_argument("--no-labels", action="store_true")
    p.add_argument("--subdivision", action="store_true", help="draw subdivision inset")
    p = add("selftest", cmd_selftest, "randomized property checks", poly=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=50)
    return parser


_VALUE_OPTIONS = ("--at", "--point", "--viewport")


def _glue_negative_values(argv):
    # argparse reads "-1,2" as an option flag
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-"):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negative_values(argv))
    out: list = []
    try:
        args.spec = ValuationSpec.parse(args.field)
        args.names = [n.strip() for n in args.vars.split(",") if n.strip()]
        code = args.func(args, out) or 0
    except (UsageError, InputError, ValueError) as exc:
        print(f"tropgeom: error: {exc}", file=sys.stderr)
        return 2
    except TropicalError as exc:
        print(f"tropgeom: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if out:
        sys.stdout.write("\n".join(out) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
