"""Ice-model partition sum on PL universes.

The universe of a planar PL diagram is cut at its real crossings into arcs;
virtual crossings and corners are passed straight through.  An arrow
covering orients every arc so that each real crossing sees two arcs coming
in and two going out.  A splitting joins each incoming ray to an adjacent
outgoing ray; it is an A-split when it agrees with the A-smoothing of the
crossing.  Summing ``A^(sum i(v)) * prod_circuits z^(angle)`` and putting
``z^(2 pi k) = (-A^2)^k`` gives ``d`` times the bracket whenever every
circuit has turning number +1 or -1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cmp_to_key

from .geometry import (
    PlanarPLDiagram, _angle_cmp, exterior_angle, turning_number,
)
from .invariants import DEFAULT_CAP, CrossingCapExceeded
from .poly import LOOP, LaurentPoly


class IceConsistencyError(RuntimeError):
    pass


@dataclass(frozen=True)
class _Arc:
    start: int                 # event index the arc leaves
    end: int                   # event index the arc reaches
    directions: tuple          # edge directions along the forward sense
    corners: tuple[int, ...]   # corner (vertex) indices passed, forward sense


@dataclass(frozen=True)
class ArrowCovering:
    """orientation[j] = +1 when arc j is traversed along the curve's own direction."""
    orientation: tuple[int, ...]


@dataclass(frozen=True)
class Splitting:
    vertex: int                          # real intersection index
    pairs: tuple[tuple[str, str], ...]   # (incoming ray, outgoing ray)
    i: int                               # +1 for an A-split, -1 for a B-split
    corners: tuple[tuple, tuple]         # (travel in, travel out) directions per new corner

    @property
    def thetas(self) -> tuple[float, float]:
        return tuple(exterior_angle(a, b) for a, b in self.corners)


@dataclass(frozen=True)
class WeightTerm:
    """One term ``A^a_power z^(theta)`` with the angle kept as exact direction pairs."""
    a_power: int
    corners: tuple[tuple, ...]

    @property
    def theta(self) -> float:
        return sum(exterior_angle(a, b) for a, b in self.corners)


@dataclass(frozen=True)
class IceResult:
    bracket: LaurentPoly | None
    total: LaurentPoly
    coverings: int
    flagged: tuple[tuple[int, int], ...]   # (covering index, turning number) for |k| != 1


class IceModel:
    """Arc structure of a planar PL diagram, shared by all ice-model operations."""

    def __init__(self, d: PlanarPLDiagram):
        self.diagram = d
        u = d.universe
        self.events = [(k, e) for k, e in u.events() if d.kinds[k] != "virtual"]
        params = {}
        for k, x in enumerate(u.intersections):
            params[(k, x.edges[0])] = x.params[0]
            params[(k, x.edges[1])] = x.params[1]
        self._params = params
        self.arcs = self._build_arcs()
        self.slot: dict[int, dict[str, tuple[int, int]]] = {}
        # ray -> (arc index, +1 if the arc leaves the vertex along the forward sense)
        for idx, (k, e) in enumerate(self.events):
            over_edge, _ = d.over_under_edges(k)
            role = "o" if e == over_edge else "u"
            m = len(self.events)
            self.slot.setdefault(k, {})[role + "o"] = (idx, 1)
            self.slot[k][role + "i"] = ((idx - 1) % m, -1)

    def _build_arcs(self) -> list[_Arc]:
        u = self.diagram.universe
        n, dirs = u.n, u.directions
        m = len(self.events)
        if m == 0:
            return [_Arc(-1, -1, tuple(dirs), tuple(range(n)))]
        arcs = []
        for j in range(m):
            (k0, e0), (k1, e1) = self.events[j], self.events[(j + 1) % m]
            p0, p1 = self._params[(k0, e0)], self._params[(k1, e1)]
            if e0 == e1 and p1 > p0:
                edges = [e0]
            else:
                edges = [e0]
                e = e0
                while True:
                    e = (e + 1) % n
                    edges.append(e)
                    if e == e1:
                        break
            corners = tuple(e for e in edges[1:])
            arcs.append(_Arc(j, (j + 1) % m, tuple(dirs[e] for e in edges), corners))
        return arcs

    # -- coverings ---------------------------------------------------------

    def _ins(self, k: int, orient) -> dict[str, bool]:
        out = {}
        for ray, (arc, leaves) in self.slot[k].items():
            o = orient[arc]
            out[ray] = (o == -1) if leaves == 1 else (o == 1)
        return out

    def coverings(self) -> list[ArrowCovering]:
        m = len(self.arcs)
        touching: dict[int, list[int]] = {}
        for k, rays in self.slot.items():
            last = max(arc for arc, _ in rays.values())
            touching.setdefault(last, []).append(k)
        found: list[ArrowCovering] = []
        orient = [0] * m

        def rec(j: int):
            if j == m:
                found.append(ArrowCovering(tuple(orient)))
                return
            for o in (1, -1):
                orient[j] = o
                if all(sum(self._ins(k, orient).values()) == 2 for k in touching.get(j, ())):
                    rec(j + 1)
            orient[j] = 0

        rec(0)
        return found

    # -- splittings --------------------------------------------------------

    def rays(self, k: int) -> dict[str, tuple]:
        o_edge, u_edge = self.diagram.over_under_edges(k)
        dirs = self.diagram.universe.directions
        o, u = dirs[o_edge], dirs[u_edge]
        return {"oo": o, "oi": (-o[0], -o[1]), "uo": u, "ui": (-u[0], -u[1])}

    def ring(self, k: int) -> list[str]:
        rays = self.rays(k)
        return sorted(rays, key=cmp_to_key(lambda a, b: _angle_cmp(rays[a], rays[b])))

    def a_pairs(self, k: int) -> frozenset:
        ring = self.ring(k)
        out = set()
        for ray in ("oo", "oi"):
            p = ring.index(ray)
            out.add(frozenset((ray, ring[(p - 1) % 4])))
        return frozenset(out)

    def splittings_at(self, covering: ArrowCovering, k: int) -> list[Splitting]:
        if k not in self.slot:
            raise ValueError(f"intersection {k} is not a 4-valent vertex")
        ins = self._ins(k, covering.orientation)
        if sum(ins.values()) != 2:
            raise ValueError(f"covering is not two-in/two-out at intersection {k}")
        ring = self.ring(k)
        rays = self.rays(k)
        a_pairs = self.a_pairs(k)
        out = []
        for shift in (0, 1):
            pairing = [(ring[shift], ring[shift + 1]), (ring[(shift + 2) % 4], ring[(shift + 3) % 4])]
            if any(ins[x] == ins[y] for x, y in pairing):
                continue
            directed = tuple((x, y) if ins[x] else (y, x) for x, y in pairing)
            tag = 1 if frozenset(frozenset(p) for p in pairing) == a_pairs else -1
            corners = tuple(((-rays[a][0], -rays[a][1]), rays[b]) for a, b in directed)
            out.append(Splitting(k, directed, tag, corners))
        return out

    # -- circuits ------------------------------------------------------------

    def _circuits(self, covering: ArrowCovering, choice: dict[int, Splitting]) -> list[int]:
        """Turning numbers of the oriented circuits of a covering plus splittings."""
        if not self.events:
            o = covering.orientation[0]
            dirs = self.arcs[0].directions
            seq = dirs if o > 0 else [(-x, -y) for x, y in reversed(dirs)]
            return [turning_number(seq)]
        m = len(self.arcs)
        # for each (vertex, incoming ray) the outgoing ray; then ray -> arc
        ray_of_end: dict[tuple[int, int], tuple[int, str]] = {}
        for k, rays in self.slot.items():
            for ray, (arc, leaves) in rays.items():
                ray_of_end[(arc, leaves)] = (k, ray)
        seen = [False] * m
        result = []
        for start in range(m):
            if seen[start]:
                continue
            seq = []
            a = start
            while not seen[a]:
                seen[a] = True
                o = covering.orientation[a]
                dirs = self.arcs[a].directions
                seq.extend(dirs if o > 0 else [(-x, -y) for x, y in reversed(dirs)])
                # the arc's head vertex: forward sense ends at its 'arriving' slot
                k, ray = ray_of_end[(a, -1)] if o > 0 else ray_of_end[(a, 1)]
                nxt_ray = dict(choice[k].pairs)[ray]
                a, _ = self.slot[k][nxt_ray]
            result.append(turning_number(seq))
        return result

    def vertex_weight(self, covering: ArrowCovering, vertex) -> list[WeightTerm]:
        """``('corner', i)`` gives z^theta; ``('crossing', k)`` sums over its splittings."""
        kind, idx = vertex
        if kind == "corner":
            u = self.diagram.universe
            a, b = u.corners()[idx]
            for arc_idx, arc in enumerate(self.arcs):
                if idx in arc.corners:
                    if covering.orientation[arc_idx] < 0:
                        a, b = (-b[0], -b[1]), (-a[0], -a[1])
                    break
            else:
                raise ValueError(f"corner {idx} not found on any arc")
            return [WeightTerm(0, ((a, b),))]
        if kind == "crossing":
            return [WeightTerm(s.i, s.corners) for s in self.splittings_at(covering, idx)]
        raise ValueError(f"unknown vertex kind {kind!r}")

    def partition(self, cap: int | None = None) -> IceResult:
        cap = DEFAULT_CAP if cap is None else cap
        if len(self.slot) > cap:
            raise CrossingCapExceeded(f"{len(self.slot)} real crossings exceeds the cap of {cap}")
        minus_a2 = LaurentPoly.monomial(-1, 2)
        total = LaurentPoly.zero("A")
        flagged = []
        covs = self.coverings()
        vertices = sorted(self.slot)
        for ci, cov in enumerate(covs):
            options = [self.splittings_at(cov, k) for k in vertices]
            for combo in itertools.product(*options):
                choice = dict(zip(vertices, combo))
                term = LaurentPoly.monomial(1, sum(s.i for s in combo))
                for k in self._circuits(cov, choice):
                    if abs(k) != 1:
                        flagged.append((ci, k))
                    term = term * minus_a2 ** k
                total = total + term
        try:
            bracket = total.divmod_exact(LOOP)
        except ValueError:
            if not flagged:
                raise IceConsistencyError("ice sum is not divisible by the loop value") from None
            bracket = None
        return IceResult(bracket, total, len(covs), tuple(flagged))


def enumerate_arrow_coverings(u: PlanarPLDiagram) -> list[ArrowCovering]:
    return IceModel(u).coverings()


def splittings(u: PlanarPLDiagram, a: ArrowCovering, v: int) -> list[Splitting]:
    return IceModel(u).splittings_at(a, v)


def vertex_weight(u: PlanarPLDiagram, v, a: ArrowCovering) -> list[WeightTerm]:
    return IceModel(u).vertex_weight(a, v)


def ice_bracket(u: PlanarPLDiagram, cap: int | None = None) -> IceResult:
    return IceModel(u).partition(cap)
