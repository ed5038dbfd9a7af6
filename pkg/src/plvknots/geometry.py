"""Polygonal knots in 3-space and their planar PL diagrams.

All coordinates are :class:`fractions.Fraction`; every predicate is a sign
test on exact determinants.  Edge ``i`` joins vertex ``i`` to vertex
``i + 1 (mod n)``.

Projection along a direction ``d`` uses a rational basis ``(u, w)`` of the
plane orthogonal to ``d`` with ``u x w`` a positive multiple of ``d``, so
the picture is what a viewer at ``+infinity * d`` sees, and the strand with
the larger ``p . d`` is the over strand.
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, cmp_to_key
from typing import Iterable, Sequence

from .diagram import GaussCode, Passage

Point2 = tuple[Fraction, Fraction]
Point3 = tuple[Fraction, Fraction, Fraction]

VIRTUAL = "virtual"
OVER_FIRST = "over-first"
OVER_SECOND = "over-second"
KINDS = (VIRTUAL, OVER_FIRST, OVER_SECOND)


class InvalidPolygon(ValueError):
    def __init__(self, violations):
        super().__init__("; ".join(v.message for v in violations))
        self.violations = violations


class DegenerateProjection(ValueError):
    def __init__(self, kind: str, witnesses: tuple, message: str = ""):
        super().__init__(message or f"degenerate projection ({kind}) at {witnesses}")
        self.kind = kind
        self.witnesses = witnesses


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating-point coordinates are not accepted; use 'p/q' strings")
    return Fraction(x)


# -- vector helpers ------------------------------------------------------


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _cross3(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def cross2(a, b) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def _half(v) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def angle_less(a, b) -> bool:
    """Exact comparison of polar angles in [0, 2*pi)."""
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha < hb
    return cross2(a, b) > 0


def _angle_cmp(a, b) -> int:
    return -1 if angle_less(a, b) else (1 if angle_less(b, a) else 0)


def turn_wraps(a, b) -> int:
    """Net number of times the direction passes angle 0 when turning from a to b
    through the exterior angle (always of magnitude < pi)."""
    c = cross2(a, b)
    if c > 0:
        return 1 if angle_less(b, a) else 0
    if c < 0:
        return -1 if angle_less(a, b) else 0
    if _dot(a, b) < 0:
        raise DegenerateProjection("u-turn", (a, b), "a path reverses direction")
    return 0


def turning_number(directions: Sequence) -> int:
    """Exact turning number of the closed path with the given edge directions."""
    m = len(directions)
    return sum(turn_wraps(directions[i], directions[(i + 1) % m]) for i in range(m))


def exterior_angle(a, b) -> float:
    """Signed turn from direction a to direction b, radians, counterclockwise positive.
    For display only."""
    return math.atan2(float(cross2(a, b)), float(_dot(a, b)))


# -- validation in 3-space -----------------------------------------------


@dataclass(frozen=True)
class Violation:
    condition: int
    indices: tuple[int, ...]
    message: str


def _on_segment3(p, a, b) -> bool:
    ab, ap = _sub(b, a), _sub(p, a)
    if any(_cross3(ab, ap)):
        return False
    t = _dot(ap, ab)
    return 0 <= t <= _dot(ab, ab)


def _segments3(p0, p1, q0, q1):
    """Intersection of two closed 3-D segments: None, ('point', P) or ('overlap',)."""
    d1, d2, r = _sub(p1, p0), _sub(q1, q0), _sub(q0, p0)
    n = _cross3(d1, d2)
    nn = _dot(n, n)
    if nn == 0:
        if any(_cross3(r, d1)):
            return None
        dd = _dot(d1, d1)
        s0, s1 = _dot(r, d1) / dd, _dot(_sub(q1, p0), d1) / dd
        lo, hi = max(0, min(s0, s1)), min(1, max(s0, s1))
        if lo > hi:
            return None
        if lo == hi:
            return ("point", tuple(a + lo * b for a, b in zip(p0, d1)))
        return ("overlap",)
    if _dot(r, n) != 0:
        return None
    s = _dot(_cross3(r, d2), n) / nn
    t = _dot(_cross3(r, d1), n) / nn
    if 0 <= s <= 1 and 0 <= t <= 1:
        return ("point", tuple(a + s * b for a, b in zip(p0, d1)))
    return None


def validate_polygon(vertices: Sequence[Sequence]) -> list[Violation]:
    """All violations of the non-degeneracy conditions; empty means a PL knot.

    1. two vertices coincide; 2. a vertex lies on the segment between two
    other vertices; 3. two edges overlap or meet away from a shared vertex.
    """
    pts = [tuple(frac(c) for c in v) for v in vertices]
    n = len(pts)
    out: list[Violation] = []
    if n < 3:
        return [Violation(0, (), f"need at least 3 vertices, got {n}")]
    for i in range(n):
        for j in range(i + 1, n):
            if pts[i] == pts[j]:
                out.append(Violation(1, (i, j), f"v{i} = v{j}"))
    for i in range(n):
        for j in range(n):
            for k in range(j + 1, n):
                if i in (j, k) or pts[j] == pts[k] or pts[i] in (pts[j], pts[k]):
                    continue
                if _on_segment3(pts[i], pts[j], pts[k]):
                    out.append(Violation(2, (i, j, k), f"v{i} lies on segment v{j}v{k}"))
    for i in range(n):
        for j in range(i + 1, n):
            a0, a1 = pts[i], pts[(i + 1) % n]
            b0, b1 = pts[j], pts[(j + 1) % n]
            if a0 == a1 or b0 == b1:
                continue  # a degenerate edge is already a condition-1 violation
            hit = _segments3(a0, a1, b0, b1)
            if hit is None:
                continue
            shared = {a0, a1} & {b0, b1}
            if hit[0] == "overlap" or hit[1] not in shared:
                out.append(Violation(3, (i, j), f"edges e{i} and e{j} meet improperly"))
    return out


# -- planar universes and diagrams ----------------------------------------


@dataclass(frozen=True)
class Intersection:
    edges: tuple[int, int]          # i < j
    params: tuple[Fraction, Fraction]
    point: Point2


def _planar_intersections(points: Sequence[Point2]) -> list[Intersection]:
    n = len(points)
    dirs = [_sub(points[(i + 1) % n], points[i]) for i in range(n)]
    for i, d in enumerate(dirs):
        if d == (0, 0):
            raise DegenerateProjection("edge-parallel", (i,), f"edge e{i} projects to a point")
    found: list[Intersection] = []
    for i in range(n):
        for j in range(i + 1, n):
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            di, dj = dirs[i], dirs[j]
            den = cross2(di, dj)
            if adjacent:
                if den == 0 and _dot(di, dj) < 0:
                    raise DegenerateProjection("adjacent-overlap", (i, j),
                                               f"edges e{i}, e{j} fold back onto each other")
                continue
            r = _sub(points[j], points[i])
            if den == 0:
                if cross2(r, di) != 0:
                    continue
                dd = _dot(di, di)
                s0 = _dot(r, di) / dd
                s1 = _dot(_sub(points[(j + 1) % n], points[i]), di) / dd
                if max(0, min(s0, s1)) <= min(1, max(s0, s1)):
                    raise DegenerateProjection("collinear-overlap", (i, j),
                                               f"edges e{i}, e{j} overlap in the plane")
                continue
            t = cross2(r, dj) / den
            s = cross2(r, di) / den
            if not (0 <= t <= 1 and 0 <= s <= 1):
                continue
            if t in (0, 1) or s in (0, 1):
                raise DegenerateProjection("vertex-on-edge", (i, j),
                                           f"a vertex of e{i} or e{j} lies on the other edge")
            pt = (points[i][0] + t * di[0], points[i][1] + t * di[1])
            found.append(Intersection((i, j), (t, s), pt))
    by_point: dict[Point2, list[tuple[int, int]]] = {}
    for x in found:
        by_point.setdefault(x.point, []).append(x.edges)
    for pt, pairs in by_point.items():
        if len(pairs) > 1:
            raise DegenerateProjection("triple-point", tuple(pairs), f"several crossings at {pt}")
    return found


@dataclass(frozen=True)
class Universe:
    """Planar closed polygon in general position (a shadow)."""
    points: tuple[Point2, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple((frac(x), frac(y)) for x, y in self.points))
        if len(self.points) < 3:
            raise ValueError("a universe needs at least 3 vertices")
        if len(set(self.points)) != len(self.points):
            raise DegenerateProjection("vertex-coincidence", (), "two projected vertices coincide")
        self.intersections  # noqa: B018 -- validate eagerly

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def intersections(self) -> tuple[Intersection, ...]:
        return tuple(_planar_intersections(self.points))

    @cached_property
    def directions(self) -> tuple[Point2, ...]:
        n = self.n
        return tuple(_sub(self.points[(i + 1) % n], self.points[i]) for i in range(n))

    def count_intersections(self) -> int:
        return len(self.intersections)

    def corners(self) -> list[tuple[Point2, Point2]]:
        """(incoming direction, outgoing direction) at each vertex."""
        d = self.directions
        return [(d[i - 1], d[i]) for i in range(self.n)]

    def exterior_angles(self) -> list[float]:
        return [exterior_angle(a, b) for a, b in self.corners()]

    def turning_number(self) -> int:
        return turning_number(self.directions)

    def events(self, start_edge: int = 0, orientation: int = 1) -> list[tuple[int, int]]:
        """(intersection index, edge) in traversal order."""
        along: dict[int, list[tuple[Fraction, int]]] = {i: [] for i in range(self.n)}
        for k, x in enumerate(self.intersections):
            along[x.edges[0]].append((x.params[0], k))
            along[x.edges[1]].append((x.params[1], k))
        out = []
        if orientation > 0:
            edges = [(start_edge + m) % self.n for m in range(self.n)]
        else:
            edges = [(start_edge - m) % self.n for m in range(self.n)]
        for e in edges:
            seq = sorted(along[e])
            if orientation < 0:
                seq.reverse()
            out.extend((k, e) for _, k in seq)
        return out

    def edge_word(self) -> tuple[tuple[int, ...], ...]:
        """For each edge, the edges it crosses in order along it."""
        along: dict[int, list[tuple[Fraction, int]]] = {i: [] for i in range(self.n)}
        for x in self.intersections:
            i, j = x.edges
            along[i].append((x.params[0], j))
            along[j].append((x.params[1], i))
        return tuple(tuple(j for _, j in sorted(along[i])) for i in range(self.n))

    def reflect(self) -> Universe:
        return Universe(tuple((-x, y) for x, y in self.points))


@dataclass(frozen=True)
class PlanarPLDiagram:
    """A universe together with a kind for every intersection."""
    universe: Universe
    kinds: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "kinds", tuple(self.kinds))
        if len(self.kinds) != len(self.universe.intersections):
            raise ValueError("one kind per intersection is required")
        bad = set(self.kinds) - set(KINDS)
        if bad:
            raise ValueError(f"unknown crossing kinds {sorted(bad)}")

    @property
    def intersections(self) -> tuple[Intersection, ...]:
        return self.universe.intersections

    @property
    def real(self) -> list[int]:
        return [k for k, kind in enumerate(self.kinds) if kind != VIRTUAL]

    @property
    def c_v(self) -> int:
        return sum(1 for kind in self.kinds if kind == VIRTUAL)

    @property
    def c_r(self) -> int:
        return len(self.kinds) - self.c_v

    def over_under_edges(self, k: int) -> tuple[int, int]:
        i, j = self.intersections[k].edges
        if self.kinds[k] == OVER_FIRST:
            return i, j
        if self.kinds[k] == OVER_SECOND:
            return j, i
        raise ValueError(f"intersection {k} is virtual")

    def sign(self, k: int) -> int:
        """Right-hand-rule sign of real crossing k: sign of (over x under)."""
        o, u = self.over_under_edges(k)
        d = self.universe.directions
        return 1 if cross2(d[o], d[u]) > 0 else -1

    def count_intersections(self) -> int:
        return len(self.kinds)

    def reflect(self) -> PlanarPLDiagram:
        return PlanarPLDiagram(self.universe.reflect(), self.kinds)

    def switch_all(self) -> PlanarPLDiagram:
        swap = {VIRTUAL: VIRTUAL, OVER_FIRST: OVER_SECOND, OVER_SECOND: OVER_FIRST}
        return PlanarPLDiagram(self.universe, tuple(swap[k] for k in self.kinds))


def count_intersections(d: PlanarPLDiagram | Universe) -> int:
    return d.count_intersections()


def gauss_labels(d: PlanarPLDiagram, start_edge: int = 0, orientation: int = 1) -> dict[int, int]:
    """Intersection index -> crossing id used by :func:`diagram_to_gauss`."""
    labels: dict[int, int] = {}
    for k, _ in d.universe.events(start_edge, orientation):
        if d.kinds[k] != VIRTUAL and k not in labels:
            labels[k] = len(labels) + 1
    return labels


def diagram_to_gauss(d: PlanarPLDiagram, start_edge: int = 0, orientation: int = 1) -> GaussCode:
    """Walk the curve and record each real crossing; virtual ones are skipped."""
    labels = gauss_labels(d, start_edge, orientation)
    out = []
    for k, e in d.universe.events(start_edge, orientation):
        if d.kinds[k] == VIRTUAL:
            continue
        over_edge, _ = d.over_under_edges(k)
        out.append(Passage(e == over_edge, labels[k], d.sign(k)))
    return GaussCode.knot(out)


def planar_state_circuits(d: PlanarPLDiagram, choices: dict[int, str]) -> int:
    """Circuit count of a state, with smoothings read off the plane picture.

    ``choices`` maps real intersection index to 'A' or 'B'.  At each real
    crossing the four rays are sorted counterclockwise; the A-smoothing
    links each over-strand ray to its clockwise neighbour (the regions swept
    by turning the over strand counterclockwise get connected).
    """
    events = [(k, e) for k, e in d.universe.events() if d.kinds[k] != VIRTUAL]
    if not events:
        return 1
    m = len(events)
    arc = [0] * (2 * m)
    for idx in range(m):
        nxt = (idx + 1) % m
        arc[2 * idx + 1] = 2 * nxt
        arc[2 * nxt] = 2 * idx + 1
    where: dict[int, dict[str, int]] = {}
    for idx, (k, e) in enumerate(events):
        over_edge, _ = d.over_under_edges(k)
        role = "o" if e == over_edge else "u"
        where.setdefault(k, {})[role + "i"] = 2 * idx
        where[k][role + "o"] = 2 * idx + 1
    dirs = d.universe.directions
    partner = [-1] * (2 * m)
    for k, slots in where.items():
        o_edge, u_edge = d.over_under_edges(k)
        o, u = dirs[o_edge], dirs[u_edge]
        rays = {"oo": o, "oi": (-o[0], -o[1]), "uo": u, "ui": (-u[0], -u[1])}
        ring = sorted(rays, key=cmp_to_key(lambda a, b: _angle_cmp(rays[a], rays[b])))
        step = -1 if choices[k] == "A" else 1
        for ray in ("oo", "oi"):
            pos = ring.index(ray)
            other = ring[(pos + step) % 4]
            x, y = slots[ray], slots[other]
            partner[x], partner[y] = y, x
    seen = [False] * (2 * m)
    count = 0
    for s in range(2 * m):
        if seen[s]:
            continue
        count += 1
        e = s
        while not seen[e]:
            seen[e] = True
            f = arc[e]
            seen[f] = True
            e = partner[f]
    return count


# -- polygonal knots -----------------------------------------------------


def _pair(p) -> tuple[int, int]:
    i, j = int(p[0]), int(p[1])
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class PolygonalKnot:
    vertices: tuple[Point3, ...]
    virtual_pairs: frozenset[tuple[int, int]] = field(default_factory=frozenset)
    direction: Point3 | None = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(frac(c) for c in v) for v in self.vertices))
        object.__setattr__(self, "virtual_pairs", frozenset(_pair(p) for p in self.virtual_pairs))
        if self.direction is not None:
            object.__setattr__(self, "direction", tuple(frac(c) for c in self.direction))
        n = len(self.vertices)
        for i, j in self.virtual_pairs:
            if not (0 <= i < n and 0 <= j < n) or j - i in (1, n - 1) or i == j:
                raise ValueError(f"virtual pair ({i}, {j}) is not a pair of nonadjacent edges")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def validate(self) -> list[Violation]:
        return validate_polygon(self.vertices)


def projection_basis(direction) -> tuple[Point3, Point3]:
    a, b, c = (frac(x) for x in direction)
    if (a, b, c) == (0, 0, 0):
        raise ValueError("projection direction must be nonzero")
    u = (b, -a, Fraction(0)) if (a, b) != (0, 0) else (Fraction(1), Fraction(0), Fraction(0))
    w = _cross3((a, b, c), u)
    return u, w


def project(k: PolygonalKnot, direction=None) -> PlanarPLDiagram:
    """Orthogonal projection with crossing classification."""
    violations = k.validate()
    if violations:
        raise InvalidPolygon(violations)
    direction = direction if direction is not None else k.direction
    if direction is None:
        raise ValueError("no projection direction given")
    d = tuple(frac(x) for x in direction)
    u, w = projection_basis(d)
    pts = [(_dot(v, u), _dot(v, w)) for v in k.vertices]
    for i in range(k.n):
        if pts[i] == pts[(i + 1) % k.n]:
            raise DegenerateProjection("edge-parallel", (i,), f"edge e{i} is parallel to the direction")
    if len(set(pts)) != len(pts):
        raise DegenerateProjection("vertex-coincidence", (), "two vertices project to the same point")
    universe = Universe(tuple(pts))
    n = k.n
    kinds = []
    realized = set()
    for x in universe.intersections:
        i, j = x.edges
        realized.add((i, j))
        if (i, j) in k.virtual_pairs:
            kinds.append(VIRTUAL)
            continue
        pi = [a + x.params[0] * (b - a) for a, b in zip(k.vertices[i], k.vertices[(i + 1) % n])]
        pj = [a + x.params[1] * (b - a) for a, b in zip(k.vertices[j], k.vertices[(j + 1) % n])]
        hi, hj = _dot(pi, d), _dot(pj, d)
        if hi == hj:
            raise DegenerateProjection("depth-tie", (i, j), f"edges e{i}, e{j} meet in space")
        kinds.append(OVER_FIRST if hi > hj else OVER_SECOND)
    missing = k.virtual_pairs - realized
    if missing:
        raise DegenerateProjection("virtual-mismatch", tuple(sorted(missing)),
                                   f"virtual pairs {sorted(missing)} do not cross in this projection")
    return PlanarPLDiagram(universe, tuple(kinds))


def generic_direction(k: PolygonalKnot, seed: int = 0, budget: int = 2000) -> Point3:
    """First direction (seeded search) for which :func:`project` succeeds."""
    rng = random.Random(seed)
    candidates: list = []
    if k.direction is not None:
        candidates.append(k.direction)
    candidates.append((0, 0, 1))
    tried = 0
    while tried < budget:
        if candidates:
            cand = candidates.pop(0)
        else:
            cand = tuple(rng.randint(-9, 9) for _ in range(3))
            if cand == (0, 0, 0):
                continue
        tried += 1
        try:
            project(k, cand)
        except DegenerateProjection:
            continue
        return tuple(frac(c) for c in cand)
    raise RuntimeError(f"no generic direction found in {budget} attempts")


# -- lifting a planar diagram into space -----------------------------------


def lift(d: PlanarPLDiagram, margin: int = 1) -> PolygonalKnot | None:
    """Heights over the universe's own vertices realizing every real crossing.

    Solves the linear feasibility problem for the vertex heights, then rounds
    to rationals and re-checks exactly.  Returns None if infeasible for these
    planar coordinates (other coordinates of the same universe may still work).
    """
    from scipy.optimize import linprog

    u = d.universe
    n = u.n
    rows, rhs = [], []
    for k in d.real:
        o, w = d.over_under_edges(k)
        x = u.intersections[k]
        so = x.params[0] if x.edges[0] == o else x.params[1]
        sw = x.params[0] if x.edges[0] == w else x.params[1]
        row = [0.0] * (n + 1)
        row[o] -= float(1 - so)
        row[(o + 1) % n] -= float(so)
        row[w] += float(1 - sw)
        row[(w + 1) % n] += float(sw)
        rows.append(row)
        rhs.append(-float(margin))
    if rows:
        # minimize the largest |height| so the coordinates stay small
        for i in range(n):
            for sgn in (1, -1):
                row = [0.0] * (n + 1)
                row[i], row[n] = float(sgn), -1.0
                rows.append(row)
                rhs.append(0.0)
        cost = [0.0] * n + [1.0]
        res = linprog(cost, A_ub=rows, b_ub=rhs, bounds=[(None, None)] * n + [(0, 1000)],
                      method="highs")
        if res.status != 0:
            return None
        heights = list(res.x[:n])
    else:
        heights = [0.0] * n
    virtual = frozenset(x.edges for x, kind in zip(u.intersections, d.kinds) if kind == VIRTUAL)
    for denom in (4, 64, 4096):
        hs = [Fraction(round(h * denom), denom) for h in heights]
        knot = PolygonalKnot(tuple((p[0], p[1], h) for p, h in zip(u.points, hs)), virtual, (0, 0, 1))
        try:
            if project(knot).kinds == d.kinds:
                return knot
        except (InvalidPolygon, DegenerateProjection):
            continue
    return None


# -- file formats --------------------------------------------------------


def _num_out(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def polygon_to_dict(k: PolygonalKnot) -> dict:
    out = {
        "vertices": [[_num_out(c) for c in v] for v in k.vertices],
        "virtual": [list(p) for p in sorted(k.virtual_pairs)],
    }
    if k.direction is not None:
        out["direction"] = [_num_out(c) for c in k.direction]
    return out


def polygon_from_dict(data: dict) -> PolygonalKnot:
    if "vertices" not in data:
        raise ValueError("polygon file needs a 'vertices' field")
    return PolygonalKnot(
        tuple(tuple(frac(c) for c in v) for v in data["vertices"]),
        frozenset(_pair(p) for p in data.get("virtual", [])),
        tuple(frac(c) for c in data["direction"]) if data.get("direction") is not None else None,
    )


def load_polygon(path) -> PolygonalKnot:
    with open(path) as fh:
        return polygon_from_dict(json.load(fh))


def _dump_rows(data: dict) -> str:
    """JSON with one list item per line: diff-friendly and still plain JSON."""
    parts = []
    for key, value in data.items():
        if isinstance(value, list) and value and isinstance(value[0], (list, dict)):
            rows = ",\n".join("  " + json.dumps(v) for v in value)
            parts.append(f' "{key}": [\n{rows}\n ]')
        else:
            parts.append(f' "{key}": {json.dumps(value)}')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def dump_polygon(k: PolygonalKnot) -> str:
    return _dump_rows(polygon_to_dict(k))


def dump_planar_diagram(d: PlanarPLDiagram) -> str:
    return _dump_rows(planar_diagram_to_dict(d))


def dump_universe(u: Universe, **extra) -> str:
    return _dump_rows(universe_to_dict(u, **extra))


def universe_to_dict(u: Universe, **extra) -> dict:
    return {**extra, "points": [[_num_out(x), _num_out(y)] for x, y in u.points],
            "intersections": u.count_intersections()}


def universe_from_dict(data: dict) -> Universe:
    return Universe(tuple((frac(x), frac(y)) for x, y in data["points"]))


def polygon_points(points: Iterable[Sequence]) -> tuple[Point2, ...]:
    return tuple((frac(x), frac(y)) for x, y in points)


def planar_diagram_to_dict(d: PlanarPLDiagram) -> dict:
    """Planar diagram file: the shadow's points plus a kind per crossing edge pair."""
    return {
        "points": [[_num_out(x), _num_out(y)] for x, y in d.universe.points],
        "crossings": [{"edges": list(x.edges), "kind": kind}
                      for x, kind in zip(d.intersections, d.kinds)],
    }


def planar_diagram_from_dict(data: dict) -> PlanarPLDiagram:
    u = Universe(tuple((frac(x), frac(y)) for x, y in data["points"]))
    given = {_pair(c["edges"]): c["kind"] for c in data["crossings"]}
    realized = [x.edges for x in u.intersections]
    if set(given) != set(realized):
        raise ValueError("crossing list does not match the intersections of the points")
    return PlanarPLDiagram(u, tuple(given[e] for e in realized))


def load_planar_diagram(path) -> PlanarPLDiagram:
    with open(path) as fh:
        return planar_diagram_from_dict(json.load(fh))


def load_any(path) -> PlanarPLDiagram:
    """Planar diagram of a polygon file (projected) or of a planar diagram file."""
    with open(path) as fh:
        data = json.load(fh)
    if "points" in data:
        return planar_diagram_from_dict(data)
    k = polygon_from_dict(data)
    return project(k, k.direction if k.direction is not None else generic_direction(k))
