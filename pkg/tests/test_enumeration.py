from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from plvknots.diagram import GaussCode, parse_gauss, vertical_mirror
from plvknots.enumeration import (
    FIXTURE_CLASSES, EnumeratedDiagram, TableError, classify, edge_word_class, enumerate_diagrams,
    five_edge_universe, has_bigon, has_kink, index_to_kinds, kinds_to_index, load_table,
    max_crossings, negami_bound, randell_bound, randell_bound_exact, randell_bound_is_floored,
    representative_universes, report_lines,
)
from plvknots.geometry import PlanarPLDiagram, VIRTUAL, diagram_to_gauss
from plvknots.invariants import cabled_jones, jones
from plvknots.poly import poly_to_string

TREFOIL = "O1+U2+O3+U1+O2+U3+"


def test_max_crossings():
    assert [max_crossings(n) for n in (3, 4, 5, 6, 7)] == [0, 1, 5, 8, 14]
    with pytest.raises(ValueError):
        max_crossings(2)


def test_randell_bound():
    assert randell_bound(6, 0) == 5
    assert randell_bound(9, 1) == 18
    assert randell_bound(6, 1) is None
    assert randell_bound(7, 1) == 7 and randell_bound_exact(7, 1) == Fraction(23, 3)
    assert randell_bound_is_floored(7, 1) and not randell_bound_is_floored(9, 1)


def test_negami_bound():
    assert [negami_bound(c) for c in (0, 3, 8)] == [0, 6, 16]


def test_assignment_index_round_trip():
    for i in range(3 ** 5):
        assert kinds_to_index(index_to_kinds(i, 5)) == i


def test_representatives():
    fxs = representative_universes()
    assert len(fxs) == 5
    assert sorted(fx.k for fx in fxs) == [5, 5, 5, 6, 7]
    for fx in fxs:
        assert fx.universe.n == 6
        assert fx.k <= max_crossings(6)
        assert edge_word_class(fx.universe) == FIXTURE_CLASSES[fx.name]
        assert edge_word_class(fx.universe.reflect()) == FIXTURE_CLASSES[fx.name]


def test_kink_and_bigon_detection():
    assert has_kink(parse_gauss("O1+U1+"))
    assert not has_kink(parse_gauss(TREFOIL))
    assert has_bigon(parse_gauss("O1+O2-U2-U1+"))
    assert not has_bigon(parse_gauss("O1+O2+U2+U1+"))   # same signs: not a cancelling pair
    assert not has_bigon(parse_gauss(TREFOIL))


def test_case_one_leaves_a_mirror_pair():
    fx = five_edge_universe()
    ds = enumerate_diagrams(fx, max_virtual=1, min_real=4, forced={(0, 2): VIRTUAL},
                            filters=("edge",))
    assert len(ds) == 2
    a, b = ds
    assert a.diagram.switch_all() == b.diagram
    assert vertical_mirror(a.code).same_diagram(b.code)
    (group,) = classify(ds).groups
    assert group.mirror == "paired" and len(group.members) == 2


def test_enumeration_limits():
    fx = five_edge_universe()
    ds = enumerate_diagrams(fx, max_virtual=1, min_real=4, filters=())
    assert 0 < len(ds) <= 3 ** 5
    assert all(d.c_v <= 1 and d.c_r >= 4 for d in ds)
    with pytest.raises(ValueError):
        enumerate_diagrams(fx, max_virtual=1, filters=("nope",))


def test_partitioned_enumeration():
    fx = representative_universes()[1]
    whole = enumerate_diagrams(fx, max_virtual=2)
    cut = 3 ** fx.k // 3
    parts = enumerate_diagrams(fx, max_virtual=2, stop=cut) + enumerate_diagrams(fx, max_virtual=2, start=cut)
    assert [d.index for d in parts] == [d.index for d in whole]
    r1, r2 = classify(whole), classify(list(reversed(parts)))
    assert report_lines(r1) == report_lines(r2)


def test_group_keys_are_basepoint_independent():
    fx = five_edge_universe()
    for d in enumerate_diagrams(fx, max_virtual=2, filters=()):
        g0 = d.code
        key = (jones(g0), cabled_jones(g0, cap=64))
        for e in (1, 3):
            for o in (1, -1):
                g = diagram_to_gauss(d.diagram, start_edge=e, orientation=o)
                assert (jones(g), cabled_jones(g, cap=64)) == key


def _fake(code, index=0):
    fx = five_edge_universe()
    d = PlanarPLDiagram(fx.universe, (VIRTUAL,) * fx.k)
    return EnumeratedDiagram("test", index, d, parse_gauss(code))


def test_classify_groups():
    r = classify([_fake(TREFOIL, 0), _fake(TREFOIL, 1)])
    assert len(r.groups) == 1 and len(r.groups[0].members) == 2
    r = classify([_fake(TREFOIL, 0), _fake(str(vertical_mirror(parse_gauss(TREFOIL))), 1)])
    (g,) = r.groups
    assert g.mirror == "paired" and len(g.members) == 2
    assert "-t^-4 + t^-3 + t^-1" in r.jones_values()


def _write(tmp_path, rows):
    p = tmp_path / "table.tsv"
    p.write_text("name\tgauss\tjones\tcabled_jones\n" + "".join("\t".join(r) + "\n" for r in rows))
    return p


def test_load_table(tmp_path):
    t = load_table(_write(tmp_path, [["3_1", "", "-t^-4 + t^-3 + t^-1", ""],
                                     ["0_1", "", "1", ""]]))
    assert len(t) == 2


def test_table_duplicate_name(tmp_path):
    with pytest.raises(TableError) as e:
        load_table(_write(tmp_path, [["a", "", "1", ""], ["b", "", "1", ""], ["a", "", "1", ""]]))
    assert e.value.line == 4


def test_table_bad_polynomial(tmp_path):
    with pytest.raises(TableError) as e:
        load_table(_write(tmp_path, [["a", "", "t^^", ""]]))
    assert e.value.line == 2


def test_table_gauss_only_row(tmp_path):
    t = load_table(_write(tmp_path, [["3_1", TREFOIL, "", ""]]))
    row = t.rows[0]
    g = parse_gauss(TREFOIL)
    assert row.jones == jones(g) and row.cabled == cabled_jones(g, cap=64)


def test_table_names_attach(tmp_path):
    t = load_table(_write(tmp_path, [["3_1", TREFOIL, "", ""], ["other", "", "1", ""]]))
    left = str(vertical_mirror(parse_gauss(TREFOIL)))
    r = classify([_fake(left)], table=t)
    assert r.groups[0].names == ["3_1"]


def test_classify_job_independence():
    fx = five_edge_universe()
    ds = enumerate_diagrams(fx, max_virtual=2, filters=("edge", "virtual-edge"))
    assert report_lines(classify(ds, jobs=1)) == report_lines(classify(ds, jobs=2))


@settings(max_examples=20, deadline=None)
@given(st.permutations(range(8)))
def test_classify_order_independence(perm):
    codes = [TREFOIL, "O1-U2-O3-U1-O2-U3-", "O1+U1+", "", "O1+U2-O3-U1+O2-U3-",
             "O1-U2+O2+U1-", TREFOIL, "U1-O2+U3-O1-U2+O3-"]
    items = [_fake(codes[i], i) for i in range(8)]
    base = report_lines(classify(items))
    assert report_lines(classify([items[i] for i in perm])) == base


def test_six_edge_counts_within_bound():
    for fx in representative_universes():
        for d in enumerate_diagrams(fx, max_virtual=3):
            assert d.c_r + d.c_v <= max_crossings(6)
