"""Command-line interface: ``barytrans <command> ...``.

Exit status: 0 on success, 1 on input errors, 2 on resource aborts or an
unusable results store.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .canonical import canonical_key
from .census import census
from .classify import DEFAULT_BUDGET, DEFAULT_MAX_HULL_VERTICES, Unresolved, classify, orbit_classes
from .enumerate import enumerate_fano_polygons
from .fano import (
    FanoFailure,
    FanoPolytope,
    b_transform,
    barycenter,
    cond_b1,
    g_values,
    gorenstein_index,
    has_nontrivial_rotation,
    is_kahler_einstein,
    is_smooth,
    is_symmetric,
    validate_fano,
)
from .formats import FORMATS, ParseError, parse, serialize, vertices_text
from .store import STORE_ENV, ResultStore, StoreError
from .svg import trajectory_svg

EXIT_OK, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_input(p: argparse.ArgumentParser, positional: bool = True):
    if positional:
        p.add_argument("polytope", nargs="?", help="vertices as '(x,y);(x,y);...'")
    p.add_argument("-i", "--input", help="read polytopes from a file ('-' for stdin)")
    p.add_argument("--input-format", choices=FORMATS, default="plain")
    p.add_argument("--transpose", action="store_true", help="grdb-matrix rows are vertices")


def _records(args):
    text = None
    if getattr(args, "polytope", None):
        text = args.polytope
        fmt = "plain"
    elif args.input:
        fmt = args.input_format
        try:
            text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
        except OSError as e:
            raise InputError(str(e)) from e
    else:
        raise InputError("no polytope given (pass vertices or --input)")
    try:
        return parse(text, fmt, args.transpose)
    except ParseError as e:
        raise InputError(str(e)) from e


def _fano(rec) -> FanoPolytope:
    try:
        p = validate_fano(rec.vertices)
    except ValueError as e:
        raise InputError(f"{rec.id}: {e}") from e
    if isinstance(p, FanoFailure):
        raise InputError(f"{rec.id}: input is not a Fano polytope ({p})")
    return p


def _fmt_q(x) -> str:
    return "(" + ",".join(str(c) for c in x) + ")"


def cmd_analyze(args, out) -> int:
    for rec in _records(args):
        p = _fano(rec)
        info = {
            "id": rec.id,
            "vertices": vertices_text(p.vertices),
            "dimension": p.dim,
            "vertex_count": len(p.vertices),
            "facet_count": len(p.facets),
            "gorenstein_index": gorenstein_index(p),
            "barycenter": _fmt_q(barycenter(p)),
            "barycenter_zero": all(x == 0 for x in barycenter(p)),
            "kahler_einstein": is_kahler_einstein(p),
            "symmetric": is_symmetric(p),
            "smooth": is_smooth(p),
            "automorphism_group_order": len(p.automorphisms),
            "canonical_key": canonical_key(p).decode("ascii"),
        }
        if p.dim == 2:
            info["nontrivial_rotation"] = has_nontrivial_rotation(p)
            info["g_values"] = g_values(p)
            info["cond_b1"] = cond_b1(p)
        if args.json:
            out.write(json.dumps(info, sort_keys=True) + "\n")
        else:
            width = max(len(k) for k in info)
            for k, v in info.items():
                out.write(f"{k.ljust(width)}  {v}\n")
            out.write("\n")
    return EXIT_OK


def cmd_transform(args, out) -> int:
    if args.n < 1:
        raise InputError("-n must be at least 1")
    for rec in _records(args):
        q = _fano(rec)
        for step in range(1, args.n + 1):
            img = b_transform(q)
            r = validate_fano(img)
            if isinstance(r, FanoFailure) and step < args.n:
                out.write(f"{rec.id}: B^{step} = {vertices_text(img.vertices)} is not Fano ({r}); stopped\n")
                break
            if step == args.n:
                note = "" if not isinstance(r, FanoFailure) else f"  # not Fano: {r}"
                out.write(f"{rec.id}: {vertices_text(img.vertices)}{note}\n")
            q = r
    return EXIT_OK


def cmd_classify(args, out) -> int:
    status = EXIT_OK
    for rec in _records(args):
        p = _fano(rec)
        verdict, traj = classify(p, args.budget, args.max_hull_vertices, args.min_steps)
        if args.json:
            doc = {
                "id": rec.id,
                "verdict": verdict.to_dict(),
                "trajectory": [
                    {"step": s.step, "vertices": [list(v) for v in s.polytope.vertices],
                     "vertex_count": s.vertex_count, "kahler_einstein": s.kahler_einstein,
                     "symmetric": s.symmetric, "smooth": s.smooth}
                    for s in traj.steps
                ],
            }
            if traj.terminal is not None:
                doc["terminal"] = [list(v) for v in traj.terminal.vertices]
            out.write(json.dumps(doc, sort_keys=True) + "\n")
        else:
            out.write(f"{rec.id}: {_describe(verdict)}\n")
            out.write("step  #vert  KE     sym    smooth  vertices\n")
            for s in traj.steps:
                out.write(f"{s.step:>4}  {s.vertex_count:>5}  {str(s.kahler_einstein):<5}  "
                          f"{str(s.symmetric):<5}  {str(s.smooth):<6}  {vertices_text(s.polytope.vertices)}\n")
            if traj.terminal is not None:
                out.write(f"{len(traj.steps):>4}  {len(traj.terminal.vertices):>5}  not Fano: "
                          f"{verdict.reason}  {vertices_text(traj.terminal.vertices)}\n")
            out.write("\n")
        if isinstance(verdict, Unresolved) and verdict.resource_abort:
            status = EXIT_RESOURCE
    return status


def _describe(verdict) -> str:
    d = verdict.to_dict()
    if d["kind"] == "strict":
        return f"strict type B_{d['k']} (B^{d['k'] + 1} fails: {d['reason']})"
    if d["kind"] == "periodic":
        return (f"periodic, type B_infinity (B^{d['preperiod'] + d['period']} ~ B^{d['preperiod']}, "
                f"preperiod {d['preperiod']}, period {d['period']})")
    extra = ", aborted on hull size" if d["resource_abort"] else ""
    return f"unresolved: at least type B_{d['budget']}{extra}"


def cmd_orbit(args, out) -> int:
    for rec in _records(args):
        p = _fano(rec)
        oc = orbit_classes(p, args.budget, args.include_start)
        out.write(f"{rec.id}: {len(oc.keys)} orbit classes{'' if oc.complete else ' (incomplete)'}\n")
        for k in sorted(oc.keys):
            out.write(f"  {k.decode('ascii')}\n")
    return EXIT_OK


def _open_store(args):
    path = args.store
    if path:
        return ResultStore(path)
    return ResultStore.from_env()


def cmd_census(args, out) -> int:
    if args.from_enumerator:
        items = enumerate_fano_polygons(args.from_enumerator, args.max_vertices, args.index)
    else:
        items = _records(args)
    store = _open_store(args)
    res = census(items, budget=args.budget, dedupe=not args.no_dedupe, smooth_only=args.smooth_only,
                 index=args.index, store=store, workers=args.workers, max_hull_vertices=args.max_hull_vertices)
    out.write(res.format(args.format))
    if any(r.verdict.get("resource_abort") for r in res.records):
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    recs = enumerate_fano_polygons(args.box, args.max_vertices, args.index)
    if args.dedupe:
        seen = {}
        for r in recs:
            seen.setdefault(canonical_key(FanoPolytope.from_points(r.vertices)), r)
        recs = [seen[k] for k in sorted(seen)]
    out.write(serialize(list(recs), args.format))
    return EXIT_OK


def cmd_svg(args, out) -> int:
    recs = _records(args)
    if len(recs) != 1:
        raise InputError("svg renders exactly one polytope")
    p = _fano(recs[0])
    if p.dim != 2:
        raise InputError("svg rendering needs a polygon")
    verdict, traj = classify(p, args.budget, min_steps=args.min_steps)
    doc = trajectory_svg(verdict, traj)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(doc)
        except OSError as e:
            raise InputError(str(e)) from e
    else:
        out.write(doc)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="barytrans", description="Barycentric transformations of Fano polytopes.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="predicates and index of each polytope")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("transform", help="print B(P) or B^n(P)")
    _add_input(p)
    p.add_argument("-n", type=int, default=1)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("classify", help="strict type / periodicity verdict with trajectory")
    _add_input(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--max-hull-vertices", type=int, default=DEFAULT_MAX_HULL_VERTICES)
    p.add_argument("--min-steps", type=int, default=0, help="keep iterating past a detected period")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("orbit", help="equivalence classes along the B-orbit")
    _add_input(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--include-start", action="store_true")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("census", help="strict-type table grouped by dimension and index")
    _add_input(p, positional=False)
    p.add_argument("--from-enumerator", type=int, metavar="BOX", help="census the enumerator output for a box")
    p.add_argument("--max-vertices", type=int, default=6)
    p.add_argument("--index", type=int)
    p.add_argument("--smooth-only", action="store_true")
    p.add_argument("--no-dedupe", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--max-hull-vertices", type=int, default=DEFAULT_MAX_HULL_VERTICES)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--store", help=f"results store path (default: ${STORE_ENV})")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("enumerate", help="Fano polygons with vertices in [-BOX, BOX]^2")
    p.add_argument("--box", type=int, default=3)
    p.add_argument("--max-vertices", type=int, default=6)
    p.add_argument("--index", type=int)
    p.add_argument("--dedupe", action="store_true", help="one representative per equivalence class")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("svg", help="render a polygon trajectory as SVG")
    _add_input(p)
    p.add_argument("-o", "--output")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--min-steps", type=int, default=0)
    p.set_defaults(func=cmd_svg)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as e:
        print(f"barytrans: {e}", file=sys.stderr)
        return EXIT_INPUT
    except StoreError as e:
        print(f"barytrans: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as e:
        print(f"barytrans: {e}", file=sys.stderr)
        return EXIT_INPUT
