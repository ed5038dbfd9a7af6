import json
import subprocess
import sys

import pytest

from plvknots.cli import main

from conftest import fixture_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariant_kink(capsys):
    code, out, _ = run(capsys, "invariant", "--gauss", "O1+U1+")
    assert code == 0
    assert "writhe: 1" in out and "bracket: -A^3" in out and "jones: 1" in out


def test_invariant_empty(capsys):
    code, out, _ = run(capsys, "invariant", "--gauss", "")
    assert code == 0 and "jones: 1" in out


def test_invariant_polygon(capsys):
    code, out, _ = run(capsys, "invariant", "--polygon", str(fixture_path("fig6a.knot")))
    assert code == 0 and "jones: -t^-4 + t^-3 + t^-1" in out


def test_invariant_cable_structured(capsys):
    code, out, _ = run(capsys, "invariant", "--gauss", "", "--cable", "--format", "structured")
    assert code == 0
    assert out.startswith("invariant ") and "cabled_jones=-t^(-1/2) - t^(1/2)" in out


def test_invariant_entry_point():
    res = subprocess.run([sys.executable, "-m", "plvknots.cli", "invariant", "--gauss", "O1+U1+"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "bracket: -A^3" in res.stdout


def test_parse_error_exit(capsys):
    code, _, err = run(capsys, "invariant", "--gauss", "O1+U1-")
    assert code == 2 and "sign" in err


def test_missing_file_exit(capsys):
    code, _, err = run(capsys, "ice", "--polygon", "/nonexistent.knot")
    assert code == 2 and "no such file" in err


def test_cap_exit(capsys):
    code, _, _ = run(capsys, "invariant", "--gauss", "O1+U2+O3+U1+O2+U3+", "--cap", "2")
    assert code == 3


def test_degenerate_exit(capsys, tmp_path):
    p = tmp_path / "flat.knot"
    p.write_text(json.dumps({"vertices": [[0, 0, 0], [4, 0, 0], [1, 3, 0]], "virtual": []}))
    code, _, err = run(capsys, "project", "--polygon", str(p), "--direction", "1,0,0")
    assert code == 4 and "degenerate" in err


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--edges", "6")
    assert code == 0 and "max crossings: 8" in out and "randell bound: 5" in out
    code, out, _ = run(capsys, "bounds", "--edges", "7", "--virtual", "1", "--crossings", "3",
                       "--format", "structured")
    assert out.strip() == ("bounds edges=7 virtual=1 max_crossings=14 randell_bound=7 "
                           "randell_floored=yes negami_bound=6")


def test_ice_square(capsys):
    code, out, _ = run(capsys, "ice", "--polygon", str(fixture_path("square.knot")))
    assert code == 0
    assert "ice bracket: 1" in out and "kauffman bracket: 1" in out and "verdict: MATCH" in out


def test_ice_flags(capsys):
    code, out, _ = run(capsys, "ice", "--polygon", str(fixture_path("fig6a.knot")),
                       "--format", "structured")
    assert code == 0
    assert "verdict=MISMATCH" in out and "flag turning_numbers=" in out


def test_project_trefoil(capsys):
    code, out, _ = run(capsys, "project", "--polygon", str(fixture_path("trefoil.knot")),
                       "--format", "structured")
    assert code == 0
    fields = dict(kv.split("=", 1) for kv in out.split()[1:])
    assert fields["real"] == "3" and len(fields["gauss"]) == 18


def test_enumerate_five_edges(capsys):
    code, out, _ = run(capsys, "enumerate", "--edges", "5", "--max-virtual", "2",
                       "--format", "structured")
    assert code == 0
    groups = [line for line in out.splitlines() if line.startswith("group ")]
    values = {line.split(" jones=")[1].split(" cabled=")[0] for line in groups}
    assert values == {"-t^-4 + t^-3 + t^-1", "1"}


def test_enumerate_five_edges_jobs_stable(capsys):
    outs = []
    for jobs in ("1", "2"):
        code, out, _ = run(capsys, "enumerate", "--edges", "5", "--max-virtual", "2",
                           "--format", "structured", "--jobs", jobs)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_enumerate_table(capsys, tmp_path):
    p = tmp_path / "t.tsv"
    p.write_text("name\tgauss\tjones\tcabled_jones\n"
                 "3.5\tO1-U2-U3-U1-O2-O3-\t\t\n")
    code, out, _ = run(capsys, "enumerate", "--edges", "5", "--max-virtual", "2",
                       "--table", str(p), "--format", "structured")
    assert code == 0 and "names=3.5" in out


def test_enumerate_bad_edges(capsys):
    code, _, _ = run(capsys, "enumerate", "--edges", "9")
    assert code == 2


def test_universes_listing(capsys):
    code, out, _ = run(capsys, "universes")
    assert code == 0
    assert [line.split()[1] for line in out.splitlines()] == [
        "name=U7", "name=U6", "name=U5a", "name=U5b", "name=U5c"]
