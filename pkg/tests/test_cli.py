import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from gptlab.catalog import NAMES
from gptlab.cli import main

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(main, list(args), catch_exceptions=False)


def test_classical_bit_all_checks_pass(runner):
    res = run(runner, "check", "--catalog", "classical_bit", "--all")
    assert res.exit_code == 0
    rep = json.loads(res.stdout)
    assert rep["schema"] == "gptlab-report/1"
    assert rep["checks"]["determinism"]["satisfies_id"] is True
    assert set(rep["outcome"].values()) == {"pass"}
    assert all(row["match"] for row in rep["expected_vs_actual"])


def test_anu_bit_determinism_fails_with_witness(runner):
    res = run(runner, "check", "--catalog", "anu_bit", "--determinism")
    assert res.exit_code == 1
    rep = json.loads(res.stdout)
    det = rep["checks"]["determinism"]
    assert det["condition_i"] is False and det["satisfies_id"] is False
    assert sorted(det["witnesses"]["condition_i"]) == [["-1", "1"], ["1", "1"]]
    assert rep["expected_vs_actual"] == [
        {"claim": "satisfies_id", "expected": False, "actual": False, "match": True}]


@pytest.mark.parametrize("name", NAMES)
def test_reports_match_golden_files(runner, tmp_path, name):
    out = tmp_path / f"{name}.json"
    run(runner, "check", "--catalog", name, "--all", "--seed", "0", "-o", str(out))
    assert out.read_bytes() == (GOLDEN / f"{name}.report.json").read_bytes()


def test_expected_table_matches_for_every_entry():
    for path in sorted(GOLDEN.glob("*.report.json")):
        rep = json.loads(path.read_text())
        assert rep["expected_vs_actual"], path.name
        assert all(row["match"] for row in rep["expected_vs_actual"]), path.name


def test_seed_is_recorded(runner):
    rep = json.loads(run(runner, "check", "--catalog", "nu_bit", "--seed", "41").stdout)
    assert rep["seed"] == 41


def test_several_systems_write_a_directory(runner, tmp_path):
    res = run(runner, "classify", "--catalog", "classical_bit", "--catalog", "octagon_anu", "-o", str(tmp_path / "out"))
    assert res.exit_code == 0
    files = sorted(p.name for p in (tmp_path / "out").iterdir())
    assert files == ["classical_bit.report.json", "octagon_anu.report.json"]
    rep = json.loads((tmp_path / "out" / "octagon_anu.report.json").read_text())
    claims = {row["claim"]: row["actual"] for row in rep["expected_vs_actual"]}
    assert claims["class"] == "other" and claims["companion.class"] == "aNU"


def test_export_and_reimport(runner, tmp_path):
    path = tmp_path / "nu.json"
    assert run(runner, "catalog", "export", "nu_bit", "-o", str(path)).exit_code == 0
    doc = json.loads(path.read_text())
    assert doc["dim"] == 1 and doc["name"] == "nu_bit"
    res = run(runner, "check", "--input", str(path))
    assert res.exit_code == 0
    assert json.loads(res.stdout)["checks"]["classify"]["class"] == "NU"


def test_catalog_list(runner):
    res = run(runner, "catalog", "list")
    assert res.exit_code == 0
    assert [line.split()[0] for line in res.stdout.splitlines()] == list(NAMES)


@pytest.mark.parametrize("content", [
    "{not json",
    '{"dim": 1, "states": [["-1", "1"], ["1", "1"]]}',
    '{"dim": 1, "states": [["-1", "1"]], "effects": [["0.5", "x"]]}',
    '{"dim": 1, "states": [["-1", "1", "0"]], "effects": [["0", "0"]]}',
    '{"dim": "two", "states": [], "effects": []}',
], ids=["syntax", "missing_effects", "bad_scalar", "wrong_length", "bad_dim"])
def test_parse_errors_exit_2(runner, tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    assert run(runner, "check", "--input", str(path)).exit_code == 2


def test_missing_file_exits_2(runner, tmp_path):
    assert run(runner, "check", "--input", str(tmp_path / "absent.json")).exit_code == 2


def test_engine_error_exits_3(runner, tmp_path):
    assert run(runner, "render", "--catalog", "pill", "--body", "states", "--plane", "z=5",
               "-o", str(tmp_path / "x.svg")).exit_code == 3


def test_failed_validation_exits_1(runner, tmp_path):
    # effects reach probability 3/2 on the pure states
    doc = {"dim": 1, "states": [["-1", "1"], ["1", "1"]],
           "effects": [["0", "0"], ["0", "1"], ["3/4", "3/4"], ["-3/4", "1/4"]]}
    path = tmp_path / "sys.json"
    path.write_text(json.dumps(doc))
    res = run(runner, "check", "--input", str(path))
    assert res.exit_code == 1
    assert json.loads(res.stdout)["outcome"]["validate"] == "fail"


def test_render_octagon_lens_section(runner, tmp_path):
    out = tmp_path / "fig.svg"
    res = run(runner, "render", "--catalog", "octagon_anu", "--plane", "z=1/2", "-o", str(out))
    assert res.exit_code == 0
    svg = out.read_text()
    assert svg.startswith("<svg") and "<path" in svg
    # the two replaced corners carry no label; the six kept ones do
    labels = {t.split(">")[1].split("<")[0] for t in svg.splitlines() if "<text" in t and "font-size=\"12\"" in t}
    assert labels == {"e1", "e2", "e4", "e5", "e6", "e8"}


def test_render_requires_plane_for_three_coordinates(runner, tmp_path):
    res = run(runner, "render", "--catalog", "pill", "--body", "states", "-o", str(tmp_path / "p.svg"))
    assert res.exit_code == 3


def test_gpm_structure_file(runner, tmp_path):
    good = {"elements": ["0", "a", "b", "u"], "zero": 0, "unit": 3,
            "sum_table": [[0, 0, 0], [0, 1, 1], [1, 0, 1], [0, 2, 2], [2, 0, 2], [0, 3, 3], [3, 0, 3],
                          [1, 2, 3], [2, 1, 3]]}
    path = tmp_path / "s.json"
    path.write_text(json.dumps(good))
    res = run(runner, "gpm", "--input", str(path))
    assert res.exit_code == 0
    doc = json.loads(res.stdout)
    assert doc["axioms"]["ok"] and len(doc["measures"]) == 2
    bad = dict(good, sum_table=good["sum_table"][:-1] + [[2, 1, 1]])  # b + a != a + b
    path.write_text(json.dumps(bad))
    assert run(runner, "gpm", "--input", str(path)).exit_code == 1


def test_gpm_catalog(runner):
    res = run(runner, "gpm", "--catalog", "classical_bit")
    assert res.exit_code == 0
    assert len(json.loads(res.stdout)["measures"]) == 2


def test_tolerance_recorded_for_arc_systems(runner):
    res = run(runner, "check", "--catalog", "anu_bit", "--determinism", "--tol", "1e-8")
    rep = json.loads(res.stdout)
    assert rep["tolerance"] == 1e-8
    assert rep["system"]["effects"]["tol"] == 1e-8
