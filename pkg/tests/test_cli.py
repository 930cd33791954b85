from __future__ import annotations

from fractions import Fraction as F
from pathlib import Path

import pytest

from scavenger import cli
from scavenger.cycles import is_5cycle
from scavenger.hunts import read_certificate, verify_certificate
from scavenger.qcore import dist_sq, parse_point

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = cli.dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- vertex files -----------------------------------------------------------------


def test_parse_vertex_file_reference():
    vf = cli.parse_vertex_file(DATA / "t22_vertices.txt")
    assert vf.t == 22
    assert len(vf.points) == 29
    assert not vf.warnings


def test_parse_vertex_file_deduplicates_with_warning(tmp_path):
    f = tmp_path / "dup.txt"
    f.write_text("t=22\n0 0 0\n1 2 3\n0 0 0\n")
    vf = cli.parse_vertex_file(f)
    assert len(vf.points) == 2
    assert len(vf.warnings) == 1
    assert "line 4" in vf.warnings[0] and "line 2" in vf.warnings[0]


def test_parse_vertex_file_zero_denominator(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("t=22\n1/0 0 0\n")
    with pytest.raises(ValueError, match="line 2, column 1"):
        cli.parse_vertex_file(f)


def test_parse_vertex_file_column_of_bad_token(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("t=22\n1 x 3\n")
    with pytest.raises(ValueError, match="line 2, column 3"):
        cli.parse_vertex_file(f)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("0 0 0\n", "header"),
        ("t=22\n", "no points"),
        ("t=0\n0 0 0\n", "positive"),
        ("t=x\n0 0 0\n", "line 1"),
        ("t=22\n1 2\n", "three coordinates"),
    ],
)
def test_parse_vertex_file_errors(tmp_path, text, fragment):
    f = tmp_path / "bad.txt"
    f.write_text(text)
    with pytest.raises(ValueError, match=fragment):
        cli.parse_vertex_file(f)


def test_parse_vertex_file_unreadable():
    with pytest.raises(ValueError, match="cannot read"):
        cli.parse_vertex_file("/nonexistent/file.txt")


def test_write_vertex_file_roundtrip(tmp_path):
    f = tmp_path / "out.txt"
    pts = [parse_point("1/3 -2 0"), parse_point("5 5 5")]
    cli.write_vertex_file(f, F(22), pts)
    vf = cli.parse_vertex_file(f)
    assert vf.t == 22
    assert list(vf.points) == pts


def test_runconfig_validation():
    with pytest.raises(ValueError):
        cli.RunConfig(workers=0)
    with pytest.raises(ValueError):
        cli.RunConfig(height=0)
    with pytest.raises(ValueError):
        cli.RunConfig(cap=0)
    with pytest.raises(ValueError):
        cli.RunConfig(box=F(0))


# --- verify ------------------------------------------------------------------------


def test_verify_vertex_file(capsys):
    code, out, _ = run(capsys, "verify", str(DATA / "t22_vertices.txt"))
    assert code == 0
    assert "CHECK distinct-points PASS 29 distinct points" in out
    assert "CHECK triangle-free PASS" in out
    assert "CHECK chromatic PASS no proper 3-coloring exists" in out
    assert out.rstrip().endswith("VERDICT PASS")


def test_verify_certificate_pass(capsys):
    code, out, _ = run(capsys, "verify", str(DATA / "t66_order25.cert"))
    assert code == 0
    assert "VERDICT PASS" in out


def test_verify_uncorrected_table_fails(capsys):
    code, out, _ = run(capsys, "verify", str(DATA / "t34_order25_uncorrected.cert"))
    assert code == 1
    assert "v0-X4=41" in out
    assert "v3-X4=41" in out
    assert "VERDICT FAIL" in out


def test_verify_device_warns(capsys):
    code, out, _ = run(capsys, "verify", str(DATA / "t30_device.cert"))
    assert code == 2
    assert "CHECK radius WARN" in out
    assert "539/30" in out
    assert "VERDICT PASS-WITH-WARNINGS" in out


def test_verify_duplicate_rows_warn(capsys, tmp_path):
    f = tmp_path / "dup.txt"
    rows = (DATA / "t22_vertices.txt").read_text().splitlines()
    f.write_text("\n".join(rows + [rows[-1]]) + "\n")
    code, out, _ = run(capsys, "verify", str(f))
    assert code == 2
    assert "CHECK file-duplicates WARN 1 duplicate rows dropped" in out


def test_verify_malformed_file(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("t=22\nnot a point\n")
    code, _, err = run(capsys, "verify", str(f))
    assert code == 64
    assert "error:" in err


def test_unknown_subcommand_usage_exit():
    with pytest.raises(SystemExit) as info:
        cli.dispatch(["frobnicate"])
    assert info.value.code == 64


# --- solve-legendre ----------------------------------------------------------------


def test_solve_legendre_unsolvable_reason(capsys):
    code, out, _ = run(capsys, "solve-legendre", "1", "1", "-3")
    assert code == 1
    assert out == "unsolvable: -ab = -1 not a QR of 3\n"


def test_solve_legendre_definite(capsys):
    code, out, _ = run(capsys, "solve-legendre", "2", "3", "5")
    assert code == 1
    assert "definite" in out


def test_solve_legendre_solution_verified(capsys):
    code, out, _ = run(capsys, "solve-legendre", "1", "1", "-2")
    assert code == 0
    x, y, z = map(int, out.split(":")[1].split())
    assert x * x + y * y - 2 * z * z == 0
    assert (x, y, z) != (0, 0, 0)


def test_solve_legendre_zero_coefficient(capsys):
    code, _, err = run(capsys, "solve-legendre", "0", "1", "-1")
    assert code == 64
    assert "zero coefficient" in err


# --- scan-d ------------------------------------------------------------------------


def test_scan_d_with_witnesses(capsys):
    code, out, _ = run(capsys, "scan-d", "30", "--bound", "100")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "d=26"
    assert lines[1].startswith("triangle base_sq=30 legs_sq=26:")
    assert lines[2].startswith("triangle base_sq=26 legs_sq=30:")
    # witness triangles are exact
    for line, base, legs in ((lines[1], 30, 26), (lines[2], 26, 30)):
        body = line.split(":", 1)[1].strip()
        pts = [parse_point(chunk.strip("() ")) for chunk in body.split(") (")]
        assert dist_sq(pts[0], pts[1]) == base
        assert dist_sq(pts[0], pts[2]) == legs
        assert dist_sq(pts[1], pts[2]) == legs


def test_scan_d_rational_fallback(capsys):
    code, out, _ = run(capsys, "scan-d", "58")
    assert code == 0
    assert out.splitlines()[0] == "d=314/9"


def test_scan_d_exhausted(capsys):
    code, out, _ = run(capsys, "scan-d", "10", "--bound", "2")
    assert code == 1
    assert "no admissible d" in out


def test_scan_d_worker_env_override(capsys, monkeypatch):
    code, base, _ = run(capsys, "scan-d", "30", "--bound", "40")
    monkeypatch.setenv("SCAVENGER_WORKERS", "2")
    code2, env_out, _ = run(capsys, "scan-d", "30", "--bound", "40")
    assert code == code2 == 0
    assert base == env_out


def test_bad_worker_env(capsys, monkeypatch):
    monkeypatch.setenv("SCAVENGER_WORKERS", "soon")
    code, _, err = run(capsys, "scan-d", "30", "--bound", "40")
    assert code == 64
    assert "SCAVENGER_WORKERS" in err


# --- cycle finders -----------------------------------------------------------------


def test_find_cycle_output_is_valid(capsys, tmp_path):
    out_path = tmp_path / "cycle.txt"
    code, out, _ = run(capsys, "find-cycle", "22", "--out", str(out_path))
    assert code == 0
    pts = [parse_point(line) for line in out.splitlines()]
    assert is_5cycle(pts, 22)
    vf = cli.parse_vertex_file(out_path)
    assert vf.t == 22
    assert list(vf.points) == pts


def test_find_cycle_exhausted(capsys):
    # height 8 excludes every denominator-3 vector; integer-only 5-cycles
    # cannot exist at this distance
    code, out, _ = run(capsys, "find-cycle", "22", "--height", "8")
    assert code == 1
    assert "no 5-cycle" in out


def test_find_symmetric_cycle(capsys):
    code, out, _ = run(capsys, "find-symmetric-cycle", "30")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "d=26"
    pts = [parse_point(line) for line in lines[1:]]
    assert is_5cycle(pts, 30)
    assert dist_sq(pts[0], pts[2]) == 26
    assert dist_sq(pts[4], pts[2]) == 26


def test_find_symmetric_cycle_fixed_d(capsys):
    code, out, _ = run(capsys, "find-symmetric-cycle", "30", "--d", "26")
    assert code == 0
    assert out.splitlines()[0] == "d=26"


def test_find_cycle_rejects_non_integer_t(capsys):
    code, _, err = run(capsys, "find-cycle", "22/3")
    assert code == 64
    assert "integer" in err


# --- param-circle ------------------------------------------------------------------


@pytest.fixture()
def foci_file(tmp_path):
    f = tmp_path / "foci.txt"
    f.write_text("t=30\n5 2 1\n-1 -2 5\n")
    return f


def test_param_circle_exact_focal_distances(capsys, foci_file):
    code, out, _ = run(capsys, "param-circle", str(foci_file), "--count", "12")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 12
    a, b = parse_point("5 2 1"), parse_point("-1 -2 5")
    for line in lines:
        _, coords = line.split(" ", 1)
        p = parse_point(coords)
        assert dist_sq(p, a) == 30
        assert dist_sq(p, b) == 30


def test_param_circle_explicit_params(capsys, foci_file):
    code, out, _ = run(capsys, "param-circle", str(foci_file), "--params", "23/11")
    assert code == 0
    assert out == "s=23/11 -8/21 52/21 40/21\n"


def test_param_circle_arity(capsys):
    code, _, err = run(capsys, "param-circle", str(DATA / "t22_seed.txt"))
    assert code == 64
    assert "exactly 2 points" in err


# --- hunts -------------------------------------------------------------------------


def test_hunt_greedy_end_to_end(capsys, tmp_path):
    out_path = tmp_path / "greedy.cert"
    code, out, _ = run(
        capsys, "hunt-greedy", str(DATA / "t22_seed.txt"), "--out", str(out_path)
    )
    assert code == 0
    assert out.startswith("HUNT PASS order=53")
    assert "VERDICT PASS" in out
    report = verify_certificate(read_certificate(out_path))
    assert report.verdict == "PASS"


def test_hunt_greedy_cap_failure(capsys):
    code, out, _ = run(capsys, "hunt-greedy", str(DATA / "t22_seed.txt"), "--cap", "10")
    assert code == 1
    assert out.startswith("HUNT FAIL order=10")


def test_hunt_greedy_rejects_bad_seed(capsys, tmp_path):
    f = tmp_path / "seed.txt"
    f.write_text("t=22\n0 0 0\n1 0 0\n2 0 0\n3 0 0\n4 0 0\n")
    code, _, err = run(capsys, "hunt-greedy", str(f))
    assert code == 64
    assert "5-cycle" in err


def test_hunt_grotzsch_type_exhausts_small_height(capsys, tmp_path):
    f = tmp_path / "cycle34.txt"
    f.write_text("t=34\n0 0 0\n-5 0 3\n-8 5 3\n-4 2 0\n-4 -3 3\n")
    code, out, _ = run(capsys, "hunt-grotzsch-type", str(f), "--height", "1")
    assert code == 1
    assert "HUNT FAIL" in out


def test_hunt_grotzsch_type_requires_five_points(capsys):
    code, _, err = run(capsys, "hunt-grotzsch-type", str(DATA / "t22_vertices.txt"))
    assert code == 64
    assert "5 points" in err


def test_hunt_grotzsch_subgraph_small_height_fails(capsys):
    code, out, _ = run(capsys, "hunt-grotzsch-subgraph", "30", "--height", "4")
    assert code == 1
    assert out.splitlines()[0] == "cycle d=26"
    assert "HUNT FAIL" in out
