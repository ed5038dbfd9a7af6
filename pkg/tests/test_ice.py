import itertools
import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from plvknots.enumeration import five_edge_universe
from plvknots.geometry import (
    VIRTUAL, DegenerateProjection, PlanarPLDiagram, PolygonalKnot, Universe, diagram_to_gauss,
    load_any, project,
)
from plvknots.ice import (
    ArrowCovering, IceModel, enumerate_arrow_coverings, ice_bracket, splittings, vertex_weight,
)
from plvknots.invariants import kauffman_bracket
from plvknots.poly import LOOP

from conftest import GEOMETRIC_FIXTURES, fixture_path

BOWTIE = Universe(((0, 0), (2, 2), (2, 0), (0, 2)))


def test_triangle_has_two_coverings():
    d = load_any(fixture_path("triangle.knot"))
    assert len(enumerate_arrow_coverings(d)) == 2


def test_bowtie_has_four_coverings():
    d = PlanarPLDiagram(BOWTIE, ("over-first",))
    covs = enumerate_arrow_coverings(d)
    assert len(covs) == 4
    # brute force: every orientation of the two arcs is two-in/two-out here
    assert sorted(c.orientation for c in covs) == sorted(itertools.product((1, -1), repeat=2))


def test_virtual_only_shadow_has_two_coverings():
    fx = five_edge_universe()
    d = PlanarPLDiagram(fx.universe, (VIRTUAL,) * 5)
    assert len(enumerate_arrow_coverings(d)) == 2
    res = ice_bracket(d)
    # the pentagram's turning number is 2: the sum is flagged, never normalized
    assert res.bracket is None
    assert {k for _, k in res.flagged} == {2, -2}


def _local_coverings(model, k):
    """The six two-in/two-out patterns at vertex k as (partial) coverings."""
    slots = model.slot[k]
    assert len({arc for arc, _ in slots.values()}) == 4
    for ins in itertools.combinations(sorted(slots), 2):
        orient = [1] * len(model.arcs)
        for ray, (arc, leaves) in slots.items():
            incoming = ray in ins
            orient[arc] = (-1 if incoming else 1) if leaves == 1 else (1 if incoming else -1)
        yield set(ins), ArrowCovering(tuple(orient))


def test_six_local_coverings_give_eight_splittings():
    d = load_any(fixture_path("trefoil.knot"))
    model = IceModel(d)
    for k in model.slot:
        counts = []
        for ins, cov in _local_coverings(model, k):
            splits = model.splittings_at(cov, k)
            counts.append(len(splits))
            ring = model.ring(k)
            alternating = ins in ({ring[0], ring[2]}, {ring[1], ring[3]})
            assert len(splits) == (2 if alternating else 1)
            for s in splits:
                # each incoming ray is joined to an outgoing one
                assert {a for a, _ in s.pairs} == ins
                assert {b for _, b in s.pairs} == set(ring) - ins
        assert sorted(counts) == [1, 1, 1, 1, 2, 2] and sum(counts) == 8


def test_alternating_splittings_are_one_a_one_b():
    d = load_any(fixture_path("trefoil.knot"))
    model = IceModel(d)
    k = next(iter(model.slot))
    for ins, cov in _local_coverings(model, k):
        splits = model.splittings_at(cov, k)
        if len(splits) == 2:
            assert sorted(s.i for s in splits) == [-1, 1]


def test_splittings_reject_non_vertex():
    d = load_any(fixture_path("trefoil.knot"))
    cov = enumerate_arrow_coverings(d)[0]
    with pytest.raises(ValueError):
        splittings(d, cov, 99)


def test_square_corner_weights():
    d = load_any(fixture_path("square.knot"))
    ccw, cw = sorted(enumerate_arrow_coverings(d), key=lambda c: -c.orientation[0])
    assert d.universe.turning_number() == 1
    (term,) = vertex_weight(d, ("corner", 1), ccw)
    assert term.a_power == 0 and math.isclose(term.theta, math.pi / 2)
    (term,) = vertex_weight(d, ("corner", 1), cw)
    assert math.isclose(term.theta, -math.pi / 2)


def test_single_splitting_weight():
    d = load_any(fixture_path("trefoil.knot"))
    model = IceModel(d)
    k = next(iter(model.slot))
    for ins, cov in _local_coverings(model, k):
        if len(model.splittings_at(cov, k)) == 1:
            (term,) = model.vertex_weight(cov, ("crossing", k))
            assert term.a_power in (1, -1)
            assert len(term.corners) == 2


@pytest.mark.parametrize("name", ["triangle.knot", "square.knot"])
def test_unknot_polygons(name):
    d = load_any(fixture_path(name))
    res = ice_bracket(d)
    assert res.total == LOOP          # both orientations of one embedded circuit
    assert res.bracket == 1 and res.flagged == ()


@pytest.mark.parametrize("name", GEOMETRIC_FIXTURES)
def test_ice_agrees_or_flags(name):
    d = load_any(fixture_path(name))
    res = ice_bracket(d)
    if res.flagged:
        assert all(abs(k) != 1 for _, k in res.flagged)
    else:
        assert res.bracket == kauffman_bracket(diagram_to_gauss(d))


def test_trefoil_matches_bracket():
    d = load_any(fixture_path("trefoil.knot"))
    res = ice_bracket(d)
    assert res.flagged == ()
    assert res.bracket == kauffman_bracket(diagram_to_gauss(d))


points = st.lists(st.tuples(st.integers(-15, 15), st.integers(-15, 15), st.integers(-5, 5)),
                  min_size=4, max_size=7, unique=True)


@settings(max_examples=100, deadline=None)
@given(points)
def test_random_polygons(vs):
    k = PolygonalKnot(vs)
    assume(k.validate() == [])
    try:
        d = project(k, (0, 0, 1))
    except DegenerateProjection:
        assume(False)
    assume(d.c_r <= 6)
    res = ice_bracket(d)
    if not res.flagged:
        assert res.bracket == kauffman_bracket(diagram_to_gauss(d))
