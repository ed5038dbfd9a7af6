"""Signed Gauss codes for virtual knot (and link) diagrams.

A code is a tuple of cyclic components; each component is a sequence of
passages ``O3+`` / ``U3+`` (role, crossing id, crossing sign).  Virtual
crossings are never recorded.  Knots have one component; link codes (used
for cables) separate components with ``|``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class GaussCodeError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, order=True)
class Passage:
    over: bool
    crossing: int
    sign: int

    def __str__(self) -> str:
        return f"{'O' if self.over else 'U'}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussCode:
    components: tuple[tuple[Passage, ...], ...] = ((),)

    def __post_init__(self):
        comps = tuple(tuple(c) for c in self.components)
        if not comps:
            raise GaussCodeError("a code needs at least one component")
        object.__setattr__(self, "components", comps)
        seen: dict[int, list[Passage]] = {}
        for comp in comps:
            for p in comp:
                if p.sign not in (1, -1):
                    raise GaussCodeError(f"crossing {p.crossing} has sign {p.sign}")
                if p.crossing < 1:
                    raise GaussCodeError(f"crossing id {p.crossing} must be >= 1")
                seen.setdefault(p.crossing, []).append(p)
        for cid, ps in seen.items():
            if len(ps) != 2:
                raise GaussCodeError(f"crossing {cid} appears {len(ps)} times (expected 2)")
            if ps[0].over == ps[1].over:
                role = "Over" if ps[0].over else "Under"
                raise GaussCodeError(f"crossing {cid} has two {role} passages")
            if ps[0].sign != ps[1].sign:
                raise GaussCodeError(f"crossing {cid} has mismatched signs")

    @classmethod
    def knot(cls, passages: Iterable[Passage]) -> GaussCode:
        return cls((tuple(passages),))

    @property
    def is_knot(self) -> bool:
        return len(self.components) == 1

    @property
    def passages(self) -> tuple[Passage, ...]:
        if not self.is_knot:
            raise GaussCodeError("passages is only defined for one-component codes")
        return self.components[0]

    @property
    def crossings(self) -> list[int]:
        return sorted({p.crossing for comp in self.components for p in comp})

    @property
    def n_crossings(self) -> int:
        return sum(len(c) for c in self.components) // 2

    def signs(self) -> dict[int, int]:
        return {p.crossing: p.sign for comp in self.components for p in comp}

    def __str__(self) -> str:
        return render_gauss(self)

    def canonical(self) -> GaussCode:
        """Least rotation (per component) after relabelling ids by first appearance."""
        best = None
        comps = self.components
        orders = [list(range(len(comps)))]
        if len(comps) > 1:
            from itertools import permutations
            orders = [list(p) for p in permutations(range(len(comps)))]
        for order in orders:
            for rots in _rotation_choices([comps[i] for i in order]):
                labels: dict[int, int] = {}
                out = []
                for comp in rots:
                    row = []
                    for p in comp:
                        if p.crossing not in labels:
                            labels[p.crossing] = len(labels) + 1
                        row.append((labels[p.crossing], 0 if p.over else 1, p.sign))
                    out.append(tuple(row))
                key = tuple(out)
                if best is None or key < best:
                    best = key
        return GaussCode(tuple(tuple(Passage(r == 0, c, s) for c, r, s in comp) for comp in best))

    def same_diagram(self, other: GaussCode) -> bool:
        return self.canonical() == other.canonical()


def _rotation_choices(comps: Sequence[tuple[Passage, ...]]):
    if not comps:
        yield []
        return
    first, rest = comps[0], comps[1:]
    rots = [first[i:] + first[:i] for i in range(len(first))] or [first]
    for r in rots:
        for tail in _rotation_choices(rest):
            yield [r] + tail


def render_gauss(g: GaussCode) -> str:
    return "|".join("".join(str(p) for p in comp) for comp in g.components)


_ITEM = re.compile(r"([OU])(\d+)([+-])")


def parse_gauss(text: str) -> GaussCode:
    """Parse ``O1+U2+...``; commas and whitespace between items are ignored.

    ``|`` separates the components of a link code.
    """
    comps: list[list[Passage]] = [[]]
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n,":
            i += 1
            continue
        if ch == "|":
            comps.append([])
            i += 1
            continue
        m = _ITEM.match(text, i)
        if m is None:
            raise GaussCodeError(f"syntax error near {text[i:i + 8]!r}", i)
        comps[-1].append(Passage(m.group(1) == "O", int(m.group(2)), 1 if m.group(3) == "+" else -1))
        i = m.end()
    return GaussCode(tuple(tuple(c) for c in comps))


def _map(g: GaussCode, flip_role: bool, flip_sign: bool) -> GaussCode:
    return GaussCode(tuple(
        tuple(Passage(p.over ^ flip_role, p.crossing, -p.sign if flip_sign else p.sign) for p in comp)
        for comp in g.components
    ))


def vertical_mirror(g: GaussCode) -> GaussCode:
    """Switch over and under strands at every real crossing."""
    return _map(g, True, True)


def horizontal_mirror(g: GaussCode) -> GaussCode:
    """Reflect the diagram in a line of the plane: over/under kept, signs negated."""
    return _map(g, False, True)


def _fresh(g: GaussCode, k: int = 1) -> list[int]:
    top = max(g.crossings, default=0)
    return [top + 1 + i for i in range(k)]


def insert_kink(g: GaussCode, position: int, kind: str = "A+") -> GaussCode:
    """Insert a Reidemeister-I curl at ``position`` of a knot code.

    ``A+`` adds ``O n+ U n+`` (writhe +1), ``A-`` adds ``U n- O n-``.
    """
    ps = list(g.passages)
    if not 0 <= position <= len(ps):
        raise IndexError(f"position {position} out of range 0..{len(ps)}")
    (c,) = _fresh(g)
    if kind == "A+":
        block = [Passage(True, c, 1), Passage(False, c, 1)]
    elif kind == "A-":
        block = [Passage(False, c, -1), Passage(True, c, -1)]
    else:
        raise ValueError(f"unknown kink kind {kind!r}")
    return GaussCode.knot(ps[:position] + block + ps[position:])


def insert_r2(g: GaussCode, position1: int, position2: int) -> GaussCode:
    """Insert a cancelling Reidemeister-II pair: ``O a O b`` at position1, ``U b U a`` at position2."""
    ps = list(g.passages)
    for pos in (position1, position2):
        if not 0 <= pos <= len(ps):
            raise IndexError(f"position {pos} out of range 0..{len(ps)}")
    a, b = _fresh(g, 2)
    over = [Passage(True, a, 1), Passage(True, b, -1)]
    under = [Passage(False, b, -1), Passage(False, a, 1)]
    if position1 <= position2:
        out = ps[:position1] + over + ps[position1:position2] + under + ps[position2:]
    else:
        out = ps[:position2] + under + ps[position2:position1] + over + ps[position1:]
    return GaussCode.knot(out)


def random_code(rng, n_crossings: int) -> GaussCode:
    """Uniformly shuffled passages with random roles and signs (any such code is a virtual knot)."""
    slots = [c for c in range(1, n_crossings + 1) for _ in range(2)]
    rng.shuffle(slots)
    first_over = {c: rng.random() < 0.5 for c in range(1, n_crossings + 1)}
    sign = {c: rng.choice((1, -1)) for c in range(1, n_crossings + 1)}
    seen: set[int] = set()
    out = []
    for c in slots:
        over = first_over[c] if c not in seen else not first_over[c]
        seen.add(c)
        out.append(Passage(over, c, sign[c]))
    return GaussCode.knot(out)
