"""Kauffman bracket, writhe, Jones polynomial and 2-cabled Jones for Gauss codes.

Smoothing convention.  At a crossing label the four half-edges

    oi: over strand arriving    oo: over strand leaving
    ui: under strand arriving   uo: under strand leaving

For a positive crossing the A-smoothing is the orientation-respecting one,
joining ui with oo and oi with uo; the B-smoothing joins oi-ui and oo-uo.
For a negative crossing the roles of the two pairings are exchanged.  In
the plane this is the same as opening the channel between the two regions
swept when the over strand turns counterclockwise (checked against the
geometric walk in :mod:`plvknots.geometry`).

The bracket is ``sum_S A^(a-b) d^(|S|-1)`` with ``d = -A^2 - A^-2``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Mapping

from .diagram import GaussCode, Passage
from .poly import LOOP, LaurentPoly, substitute_A_to_t

DEFAULT_CAP = int(os.environ.get("PLVKNOTS_CAP", "24"))


class CrossingCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class State:
    choices: Mapping[int, str]

    def __post_init__(self):
        bad = {v for v in self.choices.values()} - {"A", "B"}
        if bad:
            raise ValueError(f"smoothing choices must be 'A' or 'B', got {sorted(bad)}")

    @property
    def a(self) -> int:
        return sum(1 for v in self.choices.values() if v == "A")

    @property
    def b(self) -> int:
        return sum(1 for v in self.choices.values() if v == "B")

    @classmethod
    def from_index(cls, g: GaussCode, index: int) -> State:
        """Bit k of ``index`` (crossings in id order) set means B at that crossing."""
        return cls({c: "B" if index >> k & 1 else "A" for k, c in enumerate(g.crossings)})


@dataclass(frozen=True)
class StateResult:
    circuits: int
    weight: LaurentPoly


def writhe(g: GaussCode) -> int:
    return sum(g.signs().values())


# -- half-edge model -----------------------------------------------------


@dataclass
class _Ends:
    """Half-edges of a code: passage p owns ends 2p (arriving) and 2p+1 (leaving)."""
    arc: list[int]
    crossing_ends: dict[int, tuple[int, int, int, int]]  # id -> oi, oo, ui, uo
    sign: dict[int, int]
    free_loops: int
    end_crossing: list[int] = field(default_factory=list)


def _ends(g: GaussCode) -> _Ends:
    flat: list[Passage] = []
    arc: list[int] = []
    free = 0
    for comp in g.components:
        if not comp:
            free += 1
            continue
        base = len(flat)
        flat.extend(comp)
        arc.extend([0, 0] * len(comp))
        m = len(comp)
        for k in range(m):
            p, q = base + k, base + (k + 1) % m
            arc[2 * p + 1] = 2 * q
            arc[2 * q] = 2 * p + 1
    over: dict[int, int] = {}
    under: dict[int, int] = {}
    sign: dict[int, int] = {}
    for idx, p in enumerate(flat):
        (over if p.over else under)[p.crossing] = idx
        sign[p.crossing] = p.sign
    cends = {c: (2 * over[c], 2 * over[c] + 1, 2 * under[c], 2 * under[c] + 1) for c in over}
    end_crossing = [0] * len(arc)
    for c, es in cends.items():
        for e in es:
            end_crossing[e] = c
    return _Ends(arc, cends, sign, free, end_crossing)


def _smoothing_pairs(ends: tuple[int, int, int, int], sign: int, choice: str):
    oi, oo, ui, uo = ends
    oriented = ((oi, uo), (ui, oo))
    unoriented = ((oi, ui), (oo, uo))
    if (choice == "A") == (sign > 0):
        return oriented
    return unoriented


def state_circuits(g: GaussCode, s: State) -> int:
    """Number of closed circuits after smoothing every crossing as in ``s``."""
    if set(s.choices) != set(g.crossings):
        raise ValueError("state does not cover exactly the crossings of the code")
    model = _ends(g)
    partner = [-1] * len(model.arc)
    for c, es in model.crossing_ends.items():
        for x, y in _smoothing_pairs(es, model.sign[c], s.choices[c]):
            partner[x], partner[y] = y, x
    seen = [False] * len(model.arc)
    count = model.free_loops
    for start in range(len(model.arc)):
        if seen[start]:
            continue
        count += 1
        e = start
        while not seen[e]:
            seen[e] = True
            f = model.arc[e]
            seen[f] = True
            e = partner[f]
    return count


def state_result(g: GaussCode, s: State) -> StateResult:
    k = state_circuits(g, s)
    return StateResult(k, LaurentPoly.monomial(1, s.a - s.b) * LOOP ** (k - 1))


def state_sum(g: GaussCode, start: int = 0, stop: int | None = None) -> LaurentPoly:
    """Brute-force sum over the state indices ``start <= i < stop``.

    Disjoint index ranges can be evaluated separately and added.
    """
    n = g.n_crossings
    stop = 2 ** n if stop is None else stop
    by_exponent: dict[tuple[int, int], int] = {}
    for i in range(start, stop):
        s = State.from_index(g, i)
        key = (s.a - s.b, state_circuits(g, s) - 1)
        by_exponent[key] = by_exponent.get(key, 0) + 1
    total = LaurentPoly.zero("A")
    for (ab, loops), mult in sorted(by_exponent.items()):
        total = total + LaurentPoly.monomial(mult, ab) * LOOP ** loops
    return total


def bracket_by_states(g: GaussCode) -> LaurentPoly:
    return state_sum(g)


# -- frontier state sum --------------------------------------------------


def _order(model: _Ends) -> list[int]:
    """Greedy elimination order keeping the set of open half-edges small."""
    remaining = set(model.crossing_ends)
    done: set[int] = set()
    order: list[int] = []
    frontier: set[int] = set()
    arc, ec = model.arc, model.end_crossing
    while remaining:
        best_key, best = None, None
        for c in remaining:
            es = model.crossing_ends[c]
            inside = sum(1 for e in es if e in frontier)
            new = sum(1 for e in es if e not in frontier and ec[arc[e]] != c)
            key = (new - inside, -inside, c)
            if best_key is None or key < best_key:
                best_key, best = key, c
        c = best
        es = model.crossing_ends[c]
        for e in es:
            if e in frontier:
                frontier.discard(e)
            elif ec[arc[e]] != c:
                frontier.add(arc[e])
        remaining.discard(c)
        done.add(c)
        order.append(c)
    return order


def _frontier_sum(model: _Ends, fixed: Mapping[int, str] | None = None) -> LaurentPoly:
    """Sum over states of A^(a-b) d^|S|, by eliminating crossings one at a time.

    The partial state keeps, for every half-edge on the boundary of the
    processed region, the half-edge at the other end of its path.
    Polynomials are packed into big integers (Kronecker substitution).
    """
    n = len(model.crossing_ends)
    ends_total = len(model.arc)
    max_loops = ends_total // 2 + model.free_loops + 1
    bits = n + max_loops + 8
    offset = n + 2 * max_loops + 2
    # value: sum c_e X^(e + offset), X = 2^bits
    sh1, sh2 = bits, 2 * bits

    start = 1 << (offset * bits)
    for _ in range(model.free_loops):
        start = -(start << sh2) - (start >> sh2)
    states: dict[tuple[int, ...], int] = {(): start}
    frontier: list[int] = []
    arc, ec = model.arc, model.end_crossing
    fixed = fixed or {}

    for c in _order(model):
        es = model.crossing_ends[c]
        fset = set(frontier)
        fresh = [arc[e] for e in es if e not in fset and ec[arc[e]] != c]
        new_frontier = [f for f in frontier if f not in es] + fresh
        choices = [fixed[c]] if c in fixed else ["A", "B"]
        options = [(1 if ch == "A" else -1, _smoothing_pairs(es, model.sign[c], ch)) for ch in choices]
        nxt: dict[tuple[int, ...], int] = {}
        for key, val in states.items():
            base = dict(zip(frontier, key))
            for e in es:
                if e not in fset:
                    o = arc[e]
                    base[e] = o
                    base.setdefault(o, e)
            for step, pairs in options:
                p = dict(base)
                loops = 0
                for x, y in pairs:
                    px = p.pop(x)
                    if px == y:
                        del p[y]
                        loops += 1
                    else:
                        py = p.pop(y)
                        p[px] = py
                        p[py] = px
                v = val << sh1 if step > 0 else val >> sh1
                for _ in range(loops):
                    v = -(v << sh2) - (v >> sh2)
                k = tuple(p[f] for f in new_frontier)
                nxt[k] = nxt.get(k, 0) + v
        states = nxt
        frontier = new_frontier
    (total,) = states.values()
    return _unpack(total, bits, offset)


def _unpack(value: int, bits: int, offset: int) -> LaurentPoly:
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    terms = {}
    k = 0
    while value:
        digit = value & mask
        if digit >= half:
            digit -= 1 << bits
        value = (value - digit) >> bits
        if digit:
            terms[4 * (k - offset)] = digit
        k += 1
    return LaurentPoly(terms, "A")


def _check_cap(n: int, cap: int | None):
    cap = DEFAULT_CAP if cap is None else cap
    if n > cap:
        raise CrossingCapExceeded(f"{n} crossings exceeds the cap of {cap}")


def kauffman_bracket(g: GaussCode, cap: int | None = None,
                     fixed: Mapping[int, str] | None = None) -> LaurentPoly:
    """Bracket polynomial in A.  ``fixed`` pins the smoothing at some crossings,
    so a partition of the state space can be summed piecewise."""
    _check_cap(g.n_crossings, cap)
    model = _ends(g)
    if not model.crossing_ends:
        return LOOP ** (model.free_loops - 1)
    return _frontier_sum(model, fixed).divmod_exact(LOOP)


def jones(g: GaussCode, cap: int | None = None) -> LaurentPoly:
    w = writhe(g)
    normalizer = LaurentPoly.monomial(-1 if w % 2 else 1, -3 * w)
    return substitute_A_to_t(normalizer * kauffman_bracket(g, cap))


# -- cabling -------------------------------------------------------------


def cable2(g: GaussCode) -> GaussCode:
    """Writhe-corrected blackboard 2-parallel of a knot code.

    Component 0 is the left-hand copy, component 1 the right-hand copy.
    Every crossing c becomes the four crossings (over copy X, under copy Y)
    with c's sign; a positive crossing is met by an over copy as (X,L),(X,R)
    and by an under copy as (R,Y),(L,Y), a negative one in the opposite
    orders.  |w| full twists between the copies (two crossings of sign
    -sign(w) each) reset the linking number of the copies to zero.
    """
    ps = g.passages
    ids: dict[tuple[int, int, int], int] = {}

    def cid(c: int, x: int, y: int) -> int:
        key = (c, x, y)
        if key not in ids:
            ids[key] = len(ids) + 1
        return ids[key]

    left: list[Passage] = []
    right: list[Passage] = []
    w = writhe(g)
    eps = -1 if w > 0 else 1
    for _ in range(abs(w)):
        a, b = len(ids) + 1, len(ids) + 2
        ids[("twist", a)] = a
        ids[("twist", b)] = b
        if eps > 0:
            left += [Passage(True, a, 1), Passage(False, b, 1)]
            right += [Passage(False, a, 1), Passage(True, b, 1)]
        else:
            left += [Passage(False, a, -1), Passage(True, b, -1)]
            right += [Passage(True, a, -1), Passage(False, b, -1)]
    L, R = 0, 1
    for p in ps:
        s = p.sign
        for copy, out in ((L, left), (R, right)):
            if p.over:
                seq = (L, R) if s > 0 else (R, L)
                out += [Passage(True, cid(p.crossing, copy, y), s) for y in seq]
            else:
                seq = (R, L) if s > 0 else (L, R)
                out += [Passage(False, cid(p.crossing, x, copy), s) for x in seq]
    return GaussCode((tuple(left), tuple(right)))


def cabled_jones(g: GaussCode, cap: int | None = None) -> LaurentPoly:
    cab = cable2(g)
    _check_cap(cab.n_crossings, cap)
    return jones(cab, cap=cab.n_crossings)
