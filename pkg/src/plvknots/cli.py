"""Command-line front end.

Exit codes: 0 success, 2 parse or input error, 3 crossing cap exceeded,
4 degenerate geometry.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .diagram import GaussCodeError, parse_gauss, render_gauss
from .enumeration import (
    TableError, classify, enumerate_diagrams, five_edge_universe, is_unknot_group,
    load_table, max_crossings, negami_bound, randell_bound, randell_bound_is_floored,
    report_lines, representative_universes, survey_universes,
)
from .geometry import (
    DegenerateProjection, InvalidPolygon, diagram_to_gauss, generic_direction, load_any,
    load_polygon, project,
)
from .ice import ice_bracket
from .invariants import DEFAULT_CAP, CrossingCapExceeded, cabled_jones, jones, kauffman_bracket, writhe
from .poly import PolyParseError

EXIT_OK, EXIT_PARSE, EXIT_CAP, EXIT_GEOMETRY = 0, 2, 3, 4

ENUMERATION_CAP = int(os.environ.get("PLVKNOTS_ENUM_CAP", "64"))


class InputError(ValueError):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _existing(text: str) -> Path:
    p = Path(text)
    if not p.is_file():
        raise InputError(f"no such file: {text}")
    return p


def _emit(fmt: str, record: str, pairs: list[tuple[str, object]]):
    if fmt == "structured":
        print(record + " " + " ".join(f"{k}={v}" for k, v in pairs))
    else:
        for k, v in pairs:
            print(f"{k.replace('_', ' ')}: {v}")


def _direction(text: str | None):
    if text is None:
        return None
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise InputError("direction must be three comma-separated numbers")
    return tuple(parts)


def cmd_invariant(args) -> int:
    if args.gauss is not None:
        g = parse_gauss(args.gauss)
    else:
        g = diagram_to_gauss(load_any(_existing(args.polygon)))
    pairs = [
        ("gauss", render_gauss(g) or "-"),
        ("crossings", g.n_crossings),
        ("writhe", writhe(g)),
        ("bracket", kauffman_bracket(g, cap=args.cap)),
        ("jones", jones(g, cap=args.cap)),
    ]
    if args.cable:
        pairs.append(("cabled_jones", cabled_jones(g, cap=max(args.cap, ENUMERATION_CAP))))
    _emit(args.format, "invariant", pairs)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    table = load_table(_existing(args.table)) if args.table else None
    if args.edges == 5:
        fixtures = [five_edge_universe()]
        filters = args.filters or "edge,virtual-edge"
        min_virtual = args.min_virtual if args.min_virtual is not None else min(2, args.max_virtual)
    elif args.edges == 6:
        fixtures = representative_universes()
        filters = args.filters or "kink,bigon"
        min_virtual = args.min_virtual if args.min_virtual is not None else 0
    else:
        raise InputError("enumeration is available for 5 or 6 edges")
    filters = tuple(f for f in filters.split(",") if f)
    bound = max_crossings(args.edges)
    diagrams, per_universe = [], []
    for fx in fixtures:
        assert fx.k <= bound, f"{fx.name} exceeds the crossing bound"
        found = enumerate_diagrams(fx, max_virtual=args.max_virtual, min_real=args.min_real,
                                   min_virtual=min_virtual, filters=filters)
        per_universe.append((fx.name, fx.k, len(found)))
        diagrams.extend(found)
    report = classify(diagrams, table=table, cap=args.cap, jobs=args.jobs)
    realizable = None
    if args.realizable:
        from .geometry import lift
        realizable = {i: sum(1 for m in g.members if lift(m.diagram) is not None)
                      for i, g in enumerate(report.groups)}
    header = {
        "edges": args.edges, "max_virtual": args.max_virtual, "min_real": args.min_real,
        "min_virtual": min_virtual, "filters": ",".join(filters) or "-",
        "max_crossings": bound,
    }
    lines = report_lines(report, header, per_universe, realizable)
    if args.format == "structured":
        print("\n".join(lines))
    else:
        print(f"{report.total} diagrams on {len(fixtures)} universes, {len(report.groups)} groups")
        for n, g in enumerate(report.groups, start=1):
            tag = " (unknot)" if is_unknot_group(g) else ""
            names = f"  [{', '.join(g.names)}]" if g.names else ""
            print(f"{n:3d}. jones {g.jones} | cabled {g.cabled} | {len(g.members)} diagrams, "
                  f"mirror {g.mirror}{tag}{names}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    pairs = [("max_crossings", max_crossings(args.edges))]
    r = randell_bound(args.edges, args.virtual)
    if r is None:
        pairs.append(("randell_bound", f"none (needs n >= {6 * args.virtual + 1})"
                      if args.format == "text" else "none"))
    else:
        pairs.append(("randell_bound", r))
        if randell_bound_is_floored(args.edges, args.virtual):
            pairs.append(("randell_floored", "yes"))
    if args.crossings is not None:
        pairs.append(("negami_bound", negami_bound(args.crossings)))
    if args.format == "text":
        for k, v in pairs:
            print(f"{k.replace('_', ' ')}: {v}")
    else:
        _emit("structured", "bounds", [("edges", args.edges), ("virtual", args.virtual)] + pairs)
    return EXIT_OK


def cmd_ice(args) -> int:
    d = load_any(_existing(args.polygon))
    g = diagram_to_gauss(d)
    res = ice_bracket(d, cap=args.cap)
    kb = kauffman_bracket(g, cap=args.cap)
    verdict = "MATCH" if res.bracket is not None and res.bracket == kb else "MISMATCH"
    pairs = [
        ("ice_bracket", res.bracket if res.bracket is not None else "undefined"),
        ("kauffman_bracket", kb),
        ("coverings", res.coverings),
        ("flagged_circuits", len(res.flagged)),
        ("verdict", verdict),
    ]
    _emit(args.format, "ice", pairs)
    turning = sorted({k for _, k in res.flagged})
    if turning:
        _emit(args.format, "flag", [("turning_numbers", ",".join(str(k) for k in turning))])
    return EXIT_OK


def cmd_project(args) -> int:
    path = _existing(args.polygon)
    k = load_polygon(path)
    direction = _direction(args.direction) or k.direction or generic_direction(k, seed=args.seed)
    d = project(k, direction)
    g = diagram_to_gauss(d)
    _emit(args.format, "project", [
        ("direction", ",".join(str(c) for c in direction)),
        ("intersections", d.count_intersections()),
        ("real", d.c_r),
        ("virtual", d.c_v),
        ("gauss", render_gauss(g) or "-"),
    ])
    return EXIT_OK


def cmd_universes(args) -> int:
    if args.survey:
        rep = survey_universes(samples=args.samples, seed=args.seed)
        print("\n".join(rep.lines()))
        return EXIT_OK
    for fx in representative_universes():
        _emit("structured", "fixture", [("name", fx.name), ("edges", fx.n_edges),
                                        ("intersections", fx.k)])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="plvknots", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, cap=DEFAULT_CAP):
        sp.add_argument("--cap", type=_positive, default=cap, help="crossing cap for state sums")
        sp.add_argument("--format", choices=("text", "structured"), default="text")

    sp = sub.add_parser("invariant", help="writhe, bracket, Jones (and cabled Jones) of a diagram")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--gauss", help="signed Gauss code, e.g. O1+U2+O3+U1+O2+U3+")
    src.add_argument("--polygon", help="polygon (.knot) or planar diagram (.pld) file")
    sp.add_argument("--cable", action="store_true", help="also compute the 2-cabled Jones polynomial")
    common(sp)
    sp.set_defaults(func=cmd_invariant)

    sp = sub.add_parser("enumerate", help="enumerate and classify diagrams over universe fixtures")
    sp.add_argument("--edges", type=int, default=6)
    sp.add_argument("--max-virtual", type=int, default=3)
    sp.add_argument("--min-real", type=int, default=0)
    sp.add_argument("--min-virtual", type=int, default=None)
    sp.add_argument("--filters", default=None,
                    help="comma list from kink,bigon,edge,virtual-edge,lift")
    sp.add_argument("--table", help="tab-separated knot table for name matching")
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.add_argument("--realizable", action="store_true",
                    help="count members that lift to a polygon over the fixture coordinates")
    common(sp, ENUMERATION_CAP)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("bounds", help="crossing and edge bounds")
    sp.add_argument("--edges", type=int, required=True)
    sp.add_argument("--virtual", type=int, default=0)
    sp.add_argument("--crossings", type=int, default=None)
    sp.add_argument("--format", choices=("text", "structured"), default="text")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("ice", help="compare the ice-model sum with the bracket")
    sp.add_argument("--polygon", required=True)
    common(sp)
    sp.set_defaults(func=cmd_ice)

    sp = sub.add_parser("project", help="project a polygon and print its Gauss code")
    sp.add_argument("--polygon", required=True)
    sp.add_argument("--direction", help="a,b,c (rationals allowed)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("text", "structured"), default="text")
    sp.set_defaults(func=cmd_project)

    sp = sub.add_parser("universes", help="list universe fixtures or run the classification survey")
    sp.add_argument("--survey", action="store_true")
    sp.add_argument("--samples", type=_positive, default=200000)
    sp.add_argument("--seed", type=int, default=1)
    sp.set_defaults(func=cmd_universes)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CrossingCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (DegenerateProjection, InvalidPolygon) as exc:
        print(f"error: degenerate geometry: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except (GaussCodeError, PolyParseError, TableError, InputError, json.JSONDecodeError,
            KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
