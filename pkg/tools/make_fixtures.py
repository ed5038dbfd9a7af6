"""Rebuild every data file under src/plvknots/data from scratch.

    python tools/make_fixtures.py

Universe fixtures come from the seeded survey; polygon fixtures are built
from seeded searches and the height-lifting linear program.
"""
import random
import sys
from pathlib import Path

from plvknots.diagram import parse_gauss
from plvknots.enumeration import (
    UniverseFixture, enumerate_diagrams, regenerate_fixtures, survey_universes,
)
from plvknots.geometry import (
    InvalidPolygon, DegenerateProjection, PolygonalKnot, Universe, diagram_to_gauss,
    _dump_rows, dump_planar_diagram, dump_polygon, dump_universe, lift, project,
)
from plvknots.invariants import jones

DATA = Path(__file__).resolve().parents[1] / "src" / "plvknots" / "data"
V35 = "-t^-4 + t^-3 + t^-1"
RIGHT_TREFOIL = "t + t^3 - t^4"
# Case-1 five-edge configuration: vertices v2, v1, v3, v4, v; edges 0 and 2 meet virtually
PENTAGRAM = [(55, -5), (-10, 50), (55, 50), (-10, -5), (25, 58)]


def write(path: Path, text: str):
    path.write_text(text)
    print("wrote", path.relative_to(DATA.parents[2]))


def universes():
    for name, data in regenerate_fixtures(survey_universes()).items():
        write(DATA / "universes" / f"{name}.json", _dump_rows(data))
    u = Universe(tuple(PENTAGRAM))
    write(DATA / "universes" / "P5.json", dump_universe(u, name="P5"))


def polygons():
    fx = DATA / "fixtures"
    write(fx / "triangle.knot", dump_polygon(PolygonalKnot(((0, 0, 0), (4, 0, 0), (1, 3, 0)), direction=(0, 0, 1))))
    write(fx / "square.knot", dump_polygon(PolygonalKnot(((0, 0, 0), (2, 0, 0), (2, 2, 0), (0, 2, 0)), direction=(0, 0, 1))))
    rng = random.Random(3)
    while True:
        vs = [(rng.randint(-6, 6), rng.randint(-6, 6), rng.randint(-3, 3)) for _ in range(6)]
        k = PolygonalKnot(tuple(vs), direction=(0, 0, 1))
        try:
            d = project(k)
        except (InvalidPolygon, DegenerateProjection):
            continue
        if d.c_r == 3 and str(jones(diagram_to_gauss(d))) == RIGHT_TREFOIL:
            write(fx / "trefoil.knot", dump_polygon(k))
            break
    heights = [3, -2, 1, 4, -3]
    case1 = PolygonalKnot(tuple((x, y, h) for (x, y), h in zip(PENTAGRAM, heights)),
                          frozenset({(0, 2)}), (0, 0, 1))
    write(fx / "fig4.knot", dump_polygon(case1))
    p5 = UniverseFixture("P5", Universe(tuple(PENTAGRAM)), 5)
    case2 = enumerate_diagrams(p5, max_virtual=2, min_virtual=2, filters=("edge", "virtual-edge"),
                               forced={(0, 2): "virtual"})
    a = next(e for e in case2 if str(jones(e.code)) == V35 and lift(e.diagram) is not None)
    write(fx / "fig6a.knot", dump_polygon(lift(a.diagram)))
    same_virtual = [e for e in case2 if str(jones(e.code)) == "1"
                    and [k for k in e.diagram.kinds] and
                    {x.edges for x, kd in zip(e.diagram.intersections, e.diagram.kinds) if kd == "virtual"}
                    == {x.edges for x, kd in zip(a.diagram.intersections, a.diagram.kinds) if kd == "virtual"}]
    c = same_virtual[0]
    write(fx / "fig6c.pld", dump_planar_diagram(c.diagram))


if __name__ == "__main__":
    which = sys.argv[1:] or ["universes", "polygons"]
    if "universes" in which:
        universes()
    if "polygons" in which:
        polygons()
