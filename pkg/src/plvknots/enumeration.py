"""Crossing bounds, universe fixtures, diagram enumeration and classification.

An assignment gives every intersection of a universe one of three kinds;
it is encoded as a base-3 index, digit ``k`` (least significant first)
being 0 = virtual, 1 = over-first, 2 = over-second for intersection ``k``.
"""
from __future__ import annotations

import csv
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Iterable, Mapping, Sequence

from .diagram import GaussCode, GaussCodeError, parse_gauss, render_gauss
from .geometry import (
    KINDS, VIRTUAL, DegenerateProjection, PlanarPLDiagram, Universe, cross2,
    diagram_to_gauss, lift, universe_from_dict, universe_to_dict,
)
from .invariants import cabled_jones, jones
from .poly import LaurentPoly, PolyParseError, parse_poly, poly_to_string

# -- bounds --------------------------------------------------------------


def max_crossings(n: int) -> int:
    """Upper bound on the crossings of a diagram with n straight edges."""
    if n < 3:
        raise ValueError("a polygon needs at least 3 edges")
    c = n * (n - 3) // 2
    return c if n % 2 else c - 1


def randell_bound_exact(n: int, cv: int) -> Fraction | None:
    if n < 3 or cv < 0:
        raise ValueError("need n >= 3 and cv >= 0")
    if n < 6 * cv + 1:
        return None
    base = Fraction((n - 1) * (n - 4), 2)
    return base if n % 2 == 0 else base - Fraction(n - 3, 3)


def randell_bound(n: int, cv: int) -> int | None:
    """Crossing bound valid when n >= 6*cv + 1; the odd case is floored."""
    b = randell_bound_exact(n, cv)
    return None if b is None else b.numerator // b.denominator


def randell_bound_is_floored(n: int, cv: int) -> bool:
    b = randell_bound_exact(n, cv)
    return b is not None and b.denominator != 1


def negami_bound(c: int) -> int:
    """Edge-index bound in terms of the crossing index."""
    if c < 0:
        raise ValueError("crossing index must be nonnegative")
    return 2 * c


# -- universe fixtures -----------------------------------------------------


@dataclass(frozen=True)
class UniverseFixture:
    name: str
    universe: Universe
    k: int

    @property
    def n_edges(self) -> int:
        return self.universe.n


def _data_dir():
    return resources.files("plvknots") / "data" / "universes"


def load_fixture(name: str) -> UniverseFixture:
    data = json.loads((_data_dir() / f"{name}.json").read_text())
    u = universe_from_dict(data)
    k = u.count_intersections()
    if k != data["intersections"]:
        raise ValueError(f"fixture {name}: expected {data['intersections']} intersections, found {k}")
    return UniverseFixture(data["name"], u, k)


REPRESENTATIVE_NAMES = ("U7", "U6", "U5a", "U5b", "U5c")


def representative_universes() -> list[UniverseFixture]:
    """The shipped 6-edge universes: one with 7, one with 6, three with 5 intersections."""
    return [load_fixture(n) for n in REPRESENTATIVE_NAMES]


def five_edge_universe() -> UniverseFixture:
    """The 5-edge universe with five intersections (a pentagram)."""
    return load_fixture("P5")


# -- universe survey -------------------------------------------------------


def _orient(p, q, r) -> int:
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _quick_count(pts) -> int | None:
    """Integer crossing count, or None for a touching/collinear (non-generic) sample."""
    n = len(pts)
    for i in range(n):
        if _orient(pts[i - 1], pts[i], pts[(i + 1) % n]) == 0:
            return None
    count = 0
    for i in range(n):
        p, q = pts[i], pts[(i + 1) % n]
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            r, s = pts[j], pts[(j + 1) % n]
            o1, o2, o3, o4 = _orient(p, q, r), _orient(p, q, s), _orient(r, s, p), _orient(r, s, q)
            if 0 in (o1, o2, o3, o4):
                if (min(p[0], q[0]) <= max(r[0], s[0]) and min(r[0], s[0]) <= max(p[0], q[0])
                        and min(p[1], q[1]) <= max(r[1], s[1]) and min(r[1], s[1]) <= max(p[1], q[1])):
                    return None
                continue
            if o1 != o2 and o3 != o4:
                count += 1
    return count


def edge_word_class(u: Universe) -> tuple[tuple[int, ...], ...]:
    """Crossing order along each edge, least over rotations and reversal of the labels.

    Planar reflection leaves it unchanged, so it is a mirror-blind isotopy key."""
    n, word = u.n, u.edge_word()
    best = None
    for r in range(n):
        for rev in (False, True):
            w: list = [None] * n
            for i in range(n):
                m = (-i - 1 + r) % n if rev else (i + r) % n
                seq = word[i][::-1] if rev else word[i]
                w[m] = tuple(((-j - 1 + r) % n if rev else (j + r) % n) for j in seq)
            key = tuple(w)
            if best is None or key < best:
                best = key
    return best


def shadow_class(u: Universe) -> tuple:
    """Signed crossing word of the shadow as a closed plane curve, up to symmetry.

    Two universes with the same key carry the same combinatorial diagrams."""
    d, xs = u.directions, u.intersections
    seq = []
    for k, e in u.events():
        i, j = xs[k].edges
        other = j if e == i else i
        seq.append((k, 1 if cross2(d[e], d[other]) > 0 else -1))
    best = None
    m = len(seq)
    for flip in (1, -1):
        for rev in (False, True):
            s = [(k, c * flip * (-1 if rev else 1)) for k, c in (seq[::-1] if rev else seq)]
            for r in range(max(m, 1)):
                labels: dict[int, int] = {}
                out = []
                for k, c in s[r:] + s[:r]:
                    labels.setdefault(k, len(labels))
                    out.append((labels[k], c))
                key = tuple(out)
                if best is None or key < best:
                    best = key
    return best


def forced_kink(u: Universe) -> bool:
    """Some intersection is met twice in a row along the curve, so every diagram
    on this universe has a removable curl."""
    ev = [k for k, _ in u.events()]
    return any(ev[i] == ev[(i + 1) % len(ev)] for i in range(len(ev)))


@dataclass
class UniverseClass:
    k: int
    edge_word: tuple
    shadow: tuple
    representative: Universe
    frequency: int
    reducible: bool


@dataclass
class SurveyReport:
    n_edges: int
    samples: int
    generic: int
    classes: list[UniverseClass]

    def by_count(self, k: int) -> list[UniverseClass]:
        return [c for c in self.classes if c.k == k]

    def shadow_groups(self, k: int) -> dict[tuple, list[UniverseClass]]:
        out: dict[tuple, list[UniverseClass]] = {}
        for c in self.by_count(k):
            out.setdefault(c.shadow, []).append(c)
        return out

    def lines(self) -> list[str]:
        out = [f"survey edges={self.n_edges} samples={self.samples} generic={self.generic}"]
        for k in sorted({c.k for c in self.classes}, reverse=True):
            cls = self.by_count(k)
            out.append(f"count intersections={k} isotopy_classes={len(cls)} "
                       f"shadow_classes={len(self.shadow_groups(k))} "
                       f"irreducible={sum(1 for c in cls if not c.reducible)}")
            for c in cls:
                pts = ";".join(f"{x},{y}" for x, y in c.representative.points)
                out.append(f"class intersections={k} frequency={c.frequency} "
                           f"reducible={'yes' if c.reducible else 'no'} "
                           f"edge_word={_word_text(c.edge_word)} points={pts}")
        return out


def _word_text(word) -> str:
    return "/".join("".join(str(j) for j in w) or "-" for w in word)


def survey_universes(n_edges: int = 6, samples: int = 200000, grid: int = 40, seed: int = 1,
                     min_intersections: int = 5) -> SurveyReport:
    """Seeded random sampling of integer n-gons, grouped into isotopy classes.

    Isotopy through general position cannot move a vertex across an edge,
    so the order of crossings along every edge is preserved; the classes
    are keyed by that order (up to relabelling symmetries).  Class
    representatives are the first sample seen, which makes the output a
    deterministic function of the arguments.
    """
    rng = random.Random(seed)
    found: dict[tuple, UniverseClass] = {}
    generic = 0
    for _ in range(samples):
        pts = [(rng.randint(-grid, grid), rng.randint(-grid, grid)) for _ in range(n_edges)]
        if len(set(pts)) < n_edges:
            continue
        k = _quick_count(pts)
        if k is None:
            continue
        if k < min_intersections:
            generic += 1
            continue
        try:
            u = Universe(tuple(pts))
        except DegenerateProjection:
            continue
        generic += 1
        key = edge_word_class(u)
        if key in found:
            found[key].frequency += 1
        else:
            found[key] = UniverseClass(u.count_intersections(), key, shadow_class(u), u, 1, forced_kink(u))
    classes = sorted(found.values(), key=lambda c: (-c.k, -c.frequency, c.edge_word))
    return SurveyReport(n_edges, samples, generic, classes)


#: edge-word classes of the shipped fixtures
FIXTURE_CLASSES = {
    "U7": ((2, 3, 4), (4, 3), (0, 5), (5, 0, 1), (1, 0), (3, 2)),
    "U6": ((2, 3), (4, 3), (5, 0), (0, 5, 1), (1,), (3, 2)),
    "U5a": ((), (3, 4), (4, 5), (5, 1), (1, 2), (2, 3)),
    "U5b": ((), (3, 4, 5), (5, 4), (1,), (1, 2), (2, 1)),
    "U5c": ((2, 3), (3, 4), (5, 0), (0, 1), (1,), (2,)),
}


def regenerate_fixtures(report: SurveyReport | None = None) -> dict[str, dict]:
    """Fixture files (as dicts) rebuilt from a survey's class representatives."""
    report = report or survey_universes()
    by_word = {c.edge_word: c for c in report.classes}
    out = {}
    for name, word in FIXTURE_CLASSES.items():
        if word not in by_word:
            raise RuntimeError(f"survey did not meet the class of {name}")
        u = by_word[word].representative
        out[name] = universe_to_dict(u, name=name)
    return out


# -- enumeration -----------------------------------------------------------

_DIGIT_KIND = {0: KINDS[0], 1: KINDS[1], 2: KINDS[2]}
FILTERS = ("kink", "bigon", "edge", "virtual-edge", "lift")


def index_to_kinds(index: int, k: int) -> tuple[str, ...]:
    out = []
    for _ in range(k):
        index, digit = divmod(index, 3)
        out.append(_DIGIT_KIND[digit])
    return tuple(out)


def kinds_to_index(kinds: Sequence[str]) -> int:
    digit = {v: d for d, v in _DIGIT_KIND.items()}
    return sum(digit[kind] * 3 ** i for i, kind in enumerate(kinds))


def has_kink(g: GaussCode) -> bool:
    ps = g.passages
    m = len(ps)
    return any(ps[i].crossing == ps[(i + 1) % m].crossing for i in range(m)) if m > 2 else m == 2


def has_bigon(g: GaussCode) -> bool:
    """Two crossings adjacent along both strands, one strand over at both, opposite signs."""
    ps = g.passages
    m = len(ps)
    if m < 4:
        return False
    adj = {}
    for i in range(m):
        a, b = ps[i], ps[(i + 1) % m]
        if a.crossing != b.crossing:
            adj.setdefault(frozenset((a.crossing, b.crossing)), []).append((a.over, b.over))
    signs = g.signs()
    for pair, hits in adj.items():
        a, b = tuple(pair)
        if signs[a] == signs[b]:
            continue
        if (True, True) in hits and (False, False) in hits:
            return True
    return False


def edge_role_repeat(d: PlanarPLDiagram) -> bool:
    """A straight edge meets two consecutive real crossings in the same role."""
    along: dict[int, list] = {}
    for k in d.real:
        x = d.intersections[k]
        o, _ = d.over_under_edges(k)
        for slot, e in enumerate(x.edges):
            along.setdefault(e, []).append((x.params[slot], e == o))
    for seq in along.values():
        seq.sort()
        if any(a[1] == b[1] for a, b in zip(seq, seq[1:])):
            return True
    return False


def edge_double_virtual(d: PlanarPLDiagram) -> bool:
    seen: dict[int, int] = {}
    for x, kind in zip(d.intersections, d.kinds):
        if kind == VIRTUAL:
            for e in x.edges:
                seen[e] = seen.get(e, 0) + 1
    return any(v > 1 for v in seen.values())


@dataclass(frozen=True)
class EnumeratedDiagram:
    universe: str
    index: int
    diagram: PlanarPLDiagram
    code: GaussCode

    @property
    def c_r(self) -> int:
        return self.diagram.c_r

    @property
    def c_v(self) -> int:
        return self.diagram.c_v


def _keep(d: PlanarPLDiagram, g: GaussCode, filters: Iterable[str]) -> bool:
    for f in filters:
        if f == "kink" and has_kink(g):
            return False
        if f == "bigon" and has_bigon(g):
            return False
        if f == "edge" and edge_role_repeat(d):
            return False
        if f == "virtual-edge" and edge_double_virtual(d):
            return False
        if f == "lift" and lift(d) is None:
            return False
    return True


def enumerate_diagrams(u: UniverseFixture, max_virtual: int, min_real: int = 0,
                       min_virtual: int = 0, filters: Iterable[str] = ("kink", "bigon"),
                       forced: Mapping[tuple[int, int], str] | None = None,
                       start: int = 0, stop: int | None = None) -> list[EnumeratedDiagram]:
    """All assignments in ``[start, stop)`` passing the count limits and filters.

    ``forced`` pins the kind of the intersection between a given edge pair.
    """
    filters = tuple(filters)
    unknown = set(filters) - set(FILTERS)
    if unknown:
        raise ValueError(f"unknown filters {sorted(unknown)}")
    xs = u.universe.intersections
    pins = {}
    for pair, kind in (forced or {}).items():
        pair = tuple(sorted(pair))
        hits = [k for k, x in enumerate(xs) if x.edges == pair]
        if not hits:
            raise ValueError(f"edges {pair} do not cross in {u.name}")
        pins[hits[0]] = kind
    k = len(xs)
    stop = 3 ** k if stop is None else min(stop, 3 ** k)
    out = []
    for index in range(start, stop):
        kinds = index_to_kinds(index, k)
        if any(kinds[i] != kind for i, kind in pins.items()):
            continue
        cv = sum(1 for x in kinds if x == VIRTUAL)
        if not min_virtual <= cv <= max_virtual or k - cv < min_real:
            continue
        d = PlanarPLDiagram(u.universe, kinds)
        g = diagram_to_gauss(d)
        if _keep(d, g, filters):
            out.append(EnumeratedDiagram(u.name, index, d, g))
    return out


# -- knot tables ---------------------------------------------------------


class TableError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class TableRow:
    name: str
    gauss: GaussCode | None
    jones: LaurentPoly | None
    cabled: LaurentPoly | None


@dataclass
class KnotTable:
    rows: list[TableRow] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.rows)

    def names_for(self, j: LaurentPoly, c: LaurentPoly) -> list[str]:
        keys = {(str(j), str(c)), (str(j.invert()), str(c.invert()))}
        out = []
        for r in self.rows:
            if r.jones is None:
                continue
            rj = str(r.jones)
            if r.cabled is None:
                if any(rj == kj for kj, _ in keys):
                    out.append(r.name)
            elif (rj, str(r.cabled)) in keys:
                out.append(r.name)
        return out


TABLE_HEADER = ["name", "gauss", "jones", "cabled_jones"]


def load_table(path, cap: int = 64) -> KnotTable:
    """Tab-separated table; rows with only a Gauss code get their invariants computed."""
    rows: list[TableRow] = []
    names: set[str] = set()
    with open(path, newline="") as fh:
        reader = csv.reader(fh, delimiter="\t")
        header = next(reader, None)
        if header != TABLE_HEADER:
            raise TableError(f"expected header {'<TAB>'.join(TABLE_HEADER)}", 1)
        for lineno, rec in enumerate(reader, start=2):
            if not rec or all(not x.strip() for x in rec):
                continue
            rec = (rec + [""] * 4)[:4]
            name, gtext, jtext, ctext = (x.strip() for x in rec)
            if not name:
                raise TableError("missing name", lineno)
            if name in names:
                raise TableError(f"duplicate name {name!r}", lineno)
            names.add(name)
            try:
                g = parse_gauss(gtext) if gtext else None
                j = parse_poly(jtext, "t") if jtext else None
                c = parse_poly(ctext, "t") if ctext else None
            except (GaussCodeError, PolyParseError) as exc:
                raise TableError(str(exc), lineno) from None
            if g is not None:
                if j is None:
                    j = jones(g, cap=cap)
                if c is None:
                    c = cabled_jones(g, cap=cap)
            rows.append(TableRow(name, g, j, c))
    return KnotTable(rows)


# -- classification --------------------------------------------------------


def _invariants(code_text: str, cap: int) -> tuple[str, str]:
    g = parse_gauss(code_text)
    return poly_to_string(jones(g, cap=cap)), poly_to_string(cabled_jones(g, cap=cap))


def _invariant_batch(args) -> list[tuple[str, str, str]]:
    codes, cap = args
    return [(c, *_invariants(c, cap)) for c in codes]


def compute_invariants(codes: Iterable[str], cap: int = 64, jobs: int = 1) -> dict[str, tuple[str, str]]:
    """Jones and cabled Jones strings for canonical code strings; parallel when jobs > 1."""
    todo = sorted(set(codes))
    if jobs <= 1 or len(todo) < 2:
        return {c: _invariants(c, cap) for c in todo}
    chunks = [todo[i::jobs * 4] for i in range(jobs * 4)]
    out = {}
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for batch in pool.map(_invariant_batch, [(ch, cap) for ch in chunks if ch]):
            for c, j, cj in batch:
                out[c] = (j, cj)
    return out


@dataclass
class Group:
    jones: str
    cabled: str
    members: list[EnumeratedDiagram]
    mirror: str            # 'self', 'paired' (both mirror keys met) or 'single'
    names: list[str] = field(default_factory=list)

    @property
    def representative(self) -> EnumeratedDiagram:
        return min(self.members, key=_member_order)


def _member_order(m: EnumeratedDiagram):
    return (m.c_r, m.c_v, m.universe, m.index)


@dataclass
class ClassificationReport:
    groups: list[Group]
    total: int

    def jones_values(self) -> set[str]:
        out = set()
        for g in self.groups:
            out.add(g.jones)
            out.add(poly_to_string(parse_poly(g.jones, "t").invert()))
        return out


def _mirror_key(j: str, c: str) -> tuple[str, str]:
    return (poly_to_string(parse_poly(j, "t").invert()), poly_to_string(parse_poly(c, "t").invert()))


def classify(diagrams: Sequence[EnumeratedDiagram], table: KnotTable | None = None,
             cap: int = 64, jobs: int = 1) -> ClassificationReport:
    """Group by (Jones, cabled Jones); a group absorbs its mirror (t -> 1/t) group."""
    canon = {id(d): render_gauss(d.code.canonical()) for d in diagrams}
    inv = compute_invariants(canon.values(), cap=cap, jobs=jobs)
    raw: dict[tuple[str, str], list[EnumeratedDiagram]] = {}
    for d in diagrams:
        raw.setdefault(inv[canon[id(d)]], []).append(d)
    groups = []
    done = set()
    for key in sorted(raw):
        if key in done:
            continue
        mkey = _mirror_key(*key)
        members = list(raw[key])
        if mkey == key:
            status = "self"
        elif mkey in raw:
            status = "paired"
            members += raw[mkey]
            done.add(mkey)
        else:
            status = "single"
        done.add(key)
        j, c = min(key, mkey)
        names = []
        if table is not None:
            names = table.names_for(parse_poly(j, "t"), parse_poly(c, "t"))
        groups.append(Group(j, c, sorted(members, key=_member_order), status, names))
    groups.sort(key=lambda g: (_member_order(g.representative)[:2], g.jones, g.cabled))
    return ClassificationReport(groups, len(diagrams))


def is_unknot_group(g: Group) -> bool:
    return g.jones == "1" and g.cabled == poly_to_string(cabled_jones(GaussCode()))


def report_lines(report: ClassificationReport, header: Mapping[str, object] | None = None,
                 universes: Sequence[tuple[str, int, int]] = (),
                 realizable: Mapping[int, int] | None = None) -> list[str]:
    """Line-oriented key=value records; identical input gives identical text."""
    out = []
    if header:
        out.append("report " + " ".join(f"{k}={v}" for k, v in header.items()))
    for name, k, kept in universes:
        out.append(f"universe name={name} intersections={k} assignments={3 ** k} kept={kept}")
    for n, g in enumerate(report.groups, start=1):
        r = g.representative
        fields = [
            f"group id={n}",
            f"jones={g.jones}",
            f"cabled={g.cabled}",
            f"members={len(g.members)}",
            f"mirror={g.mirror}",
            f"unknot={'yes' if is_unknot_group(g) else 'no'}",
            f"real={r.c_r}",
            f"virtual={r.c_v}",
            f"universe={r.universe}",
            f"assignment={r.index}",
            f"gauss={render_gauss(r.code) or '-'}",
        ]
        if realizable is not None:
            fields.append(f"liftable={realizable.get(n - 1, 0)}")
        if g.names:
            fields.append("names=" + ",".join(g.names))
        out.append(" ".join(fields))
    out.append(f"summary groups={len(report.groups)} diagrams={report.total}")
    return out
