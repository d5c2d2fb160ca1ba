"""Command line interface: ``ribbontutte <command> FILE ...``.

Exit status is 0 on success, 2 for unreadable or invalid input and 3 when
``verify`` finds two routes that disagree.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import flows, graphfile, specializations, tutte
from .errors import BudgetExceededError, RibbonError
from .groups import builtin_group
from .poly import LaurentPoly, _SparsePoly

EXIT_INPUT = 2
EXIT_MISMATCH = 3
DEFAULT_GROUPS = ("cyclic:2", "cyclic:3", "dihedral:3")


class Mismatch(Exception):
    pass


def first_difference(left, right) -> str:
    """Describe the first monomial (in canonical order) where two
    polynomials differ, or the two values for numbers."""
    if isinstance(left, _SparsePoly) and isinstance(right, _SparsePoly):
        if type(left) is not type(right):
            left, right = LaurentPoly() + left, LaurentPoly() + right
        diff = left - right
        if not diff:
            return ""
        mono, _ = diff.ordered_terms()[0]
        body = left._fmt_mono(mono) or "1"
        return f"monomial {body}: {left.coefficient(mono)} vs {right.coefficient(mono)}"
    return "" if left == right else f"{left} vs {right}"


def _load(path):
    if path.startswith("@"):
        return graphfile.bundled(path[1:])
    return graphfile.load(path)


def _fmt(val) -> str:
    if isinstance(val, Fraction) and val.denominator == 1:
        return str(val.numerator)
    return str(val)


def _parse_point(items) -> dict:
    point = {}
    for item in items or []:
        for part in item.split(","):
            if not part:
                continue
            name, sep, value = part.partition("=")
            if not sep:
                raise RibbonError(f"--at expects name=value, got {part!r}")
            try:
                point[name.strip()] = Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise RibbonError(f"--at value {value!r} is not a rational number") from None
    return point


# -- commands --------------------------------------------------------------------


def cmd_show(args, out):
    pg = _load(args.file)
    c = pg.map.counts()
    out.write(f"v={c.v} e={c.e} f={c.f} k={c.k} g={c.g} r={c.r} n={c.n}\n")
    out.write("boundary components:\n")
    for b in pg.map.boundary_components():
        what = " ".join(map(str, b.members)) if b.kind == "orbit" else f"isolated vertex {b.members[0]}"
        out.write(f"  {b.id}: {what}\n")
    for label, part in (("vertex partition", pg.vpart), ("boundary partition", pg.fpart)):
        out.write(f"{label}:\n")
        for blk, w in zip(part.blocks, part.weights):
            out.write(f"  {{{', '.join(map(str, blk))}}} weight {w}\n")


def cmd_dual(args, out):
    out.write(graphfile.emit(_load(args.file).dual()))


def cmd_tutte(args, out):
    pg = _load(args.file)
    if args.method == "statesum":
        p = tutte.statesum(pg, workers=args.parallel)
    else:
        p = tutte.dc(pg)
    out.write(f"{p}\n")


def cmd_specialize(args, out):
    pg = _load(args.file)
    t = args.target
    if t == "classical":
        p = specializations.classical_tutte(pg.packaging_V)
    elif t == "surface":
        p = specializations.surface_tutte(pg.map)
    elif t == "tps-direct":
        p = specializations.tps_direct(pg.map, pg.vpart.zero_weighted(), pg.fpart.zero_weighted())
    else:
        p = specializations.tps_via_T(pg)
    point = _parse_point(args.at)
    out.write(_fmt(specializations.evaluate_at(p, point) if point else p) + "\n")


def cmd_flows(args, out):
    pg = _load(args.file)
    group = builtin_group(args.group)
    if args.method == "brute":
        side = pg.vpart if args.side == "q" else pg.fpart
        if not side.is_trivial():
            raise RibbonError("brute force counts flows of the plain map; the partition on this side is not trivial")
        fn = flows.brute_force_q if args.side == "q" else flows.brute_force_p
        val = fn(pg.map, group, budget=args.budget, workers=args.parallel)
    else:
        val = flows.ROUTES[args.side][args.method](pg, group)
    out.write(_fmt(val) + "\n")


def run_checks(pg, groups, budget=flows.DEFAULT_BUDGET):
    """Yield ``(name, status, detail)`` with status ``ok``, ``FAIL`` or ``skip``."""

    def compare(name, left, right):
        d = first_difference(left, right)
        return (name, "FAIL", d) if d else (name, "ok", "")

    T = tutte.statesum(pg)
    yield compare("statesum = dc", T, tutte.dc(pg))
    yield compare("duality", T, tutte.statesum(pg.dual()).swap_families())
    yield compare("universal recursion = closed form", tutte.universal_recursive(pg), tutte.universal_closed(pg, T=T))
    yield compare("surface polynomial routes", specializations.surface_tutte(pg.map), specializations.surface_tutte_direct(pg.map))
    names = ("a", "b", "c", "d")
    yield compare(
        "tps direct = via T",
        specializations.tps_direct(pg.map, pg.vpart.zero_weighted(), pg.fpart.zero_weighted(), names),
        specializations.tps_via_T(pg, names=names),
    )
    dual = pg.dual()
    for gname in groups:
        group = builtin_group(gname)
        for side in ("q", "p"):
            routes = flows.ROUTES[side]
            vals = {m: routes[m](pg, group) for m in ("incexc", "dc")}
            vals["viaT"] = routes["viaT"](pg, group, T=T)
            trivial = (pg.vpart if side == "q" else pg.fpart).is_trivial()
            brute = flows.brute_force_q if side == "q" else flows.brute_force_p
            if trivial:
                try:
                    vals["brute"] = brute(pg.map, group, budget=budget)
                except BudgetExceededError:
                    yield (f"{side} brute force over {gname}", "skip", "over budget")
            ref = vals["incexc"]
            bad = [f"{m}={_fmt(v)}" for m, v in vals.items() if v != ref]
            label = f"{side} routes over {gname}"
            if bad:
                yield (label, "FAIL", f"incexc={_fmt(ref)} but " + ", ".join(bad))
            else:
                yield (label, "ok", f"{_fmt(ref)} via {', '.join(vals)}")
            other = flows.ROUTES["p" if side == "q" else "q"]["dc"](dual, group)
            yield compare(f"{side} duality over {gname}", vals["dc"], other)


def cmd_verify(args, out):
    pg = _load(args.file)
    groups = args.group or list(DEFAULT_GROUPS)
    failed = 0
    for name, status, detail in run_checks(pg, groups, args.budget):
        out.write(f"{status:4} {name}" + (f": {detail}" if detail else "") + "\n")
        if status == "FAIL":
            failed += 1
            sys.stderr.write(f"mismatch in {name}: {detail}\n")
    if failed:
        raise Mismatch(f"{failed} check(s) failed")


def cmd_fixture(args, out):
    if not args.name:
        out.write("\n".join(graphfile.bundled_names()) + "\n")
        return
    out.write(graphfile.emit(graphfile.bundled(args.name)))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ribbontutte", description="Packaged ribbon graphs and their Tutte polynomials.")
    sub = ap.add_subparsers(dest="command", required=True)
    file_help = "graph file (JSON), or @NAME for a bundled fixture"

    p = sub.add_parser("show", help="counts, boundary components and partitions")
    p.add_argument("file", help=file_help)
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("dual", help="print the dual as a graph file")
    p.add_argument("file", help=file_help)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("tutte", help="packaged surface Tutte polynomial")
    p.add_argument("file", help=file_help)
    p.add_argument("--method", choices=("statesum", "dc"), default="statesum")
    p.add_argument("--parallel", type=int, default=None, metavar="N", help="worker processes for the state sum")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("specialize", help="classical, surface or pseudo-surface polynomial")
    p.add_argument("file", help=file_help)
    p.add_argument("--target", choices=("classical", "surface", "tps-direct", "tps-viaT"), required=True)
    p.add_argument("--at", nargs="+", metavar="NAME=VALUE", help="evaluate at rational values, e.g. a=2 b=1/2")
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("flows", help="count nowhere-identity local flows (q) or tensions (p)")
    p.add_argument("file", help=file_help)
    p.add_argument("--group", required=True, help="cyclic:N, dihedral:N or table:PATH")
    p.add_argument("--side", choices=("q", "p"), default="q")
    p.add_argument("--method", choices=("formula", "incexc", "dc", "viaT", "brute"), default="dc")
    p.add_argument("--parallel", type=int, default=None, metavar="N")
    p.add_argument("--budget", type=int, default=flows.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_flows)

    p = sub.add_parser("verify", help="cross-check every route against every other")
    p.add_argument("file", help=file_help)
    p.add_argument("--group", action="append", help="group to use for flows (repeatable)")
    p.add_argument("--budget", type=int, default=flows.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fixture", help="list bundled fixtures or print one")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_fixture)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except Mismatch as exc:
        sys.stderr.write(f"verification failed: {exc}\n")
        return EXIT_MISMATCH
    except RibbonError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    return 0


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
