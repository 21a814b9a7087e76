import json

import pytest

from conwaygroupoids.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv, "--json")
    return code, json.loads(out)


def test_catalog_list(capsys):
    code, doc = run_json(capsys, "catalog", "list")
    assert code == 0
    labels = {e["label"] for e in doc["results"]["designs"]}
    assert {"pg23", "boolean:3", "symplectic:2", "quadratic:2:0", "pairs:4"} <= labels
    assert len(doc["results"]["design_families"]) + len(
        doc["results"]["pliable_families"]
    ) >= 7


def test_design_build_and_check_round_trip(tmp_path, capsys):
    code, out = run_cli(capsys, "design", "build", "boolean:3")
    assert code == 0
    design = json.loads(out)
    assert design["n"] == 8 and len(design["blocks"]) == 14
    path = tmp_path / "boolean3.json"
    path.write_text(out)
    code, doc = run_json(capsys, "design", "check", str(path))
    assert code == 0
    assert doc["results"]["lambda"] == 3
    assert doc["results"]["supersimple"] is True


def test_groupoid_compute_pg23(capsys):
    code, doc = run_json(capsys, "groupoid", "compute", "pg23")
    assert code == 0
    results = doc["results"]
    assert results["hole_stabilizer_order"] == 95040
    assert results["groupoid_size"] == 1235520
    assert results["classification"] == "primitive"
    assert results["transitivity_degree"] == 5
    assert doc["inputs"]["hash"]


def test_groupoid_compute_with_base(capsys):
    code, doc = run_json(capsys, "groupoid", "compute", "boolean:2", "--base", "2")
    assert code == 0
    assert doc["results"]["base_point"] == 2
    assert doc["results"]["hole_stabilizer_order"] == 1


def test_groupoid_law_sweep(capsys):
    code, doc = run_json(capsys, "groupoid", "verify-section4", "quadratic:2:0")
    assert code == 0
    assert doc["results"]["all_applicable_hold"] is True


def test_m13_signed_and_dual(capsys):
    code, doc = run_json(capsys, "m13", "signed")
    assert code == 0
    assert doc["results"]["hole_stabilizer_order"] == 190080
    code, doc = run_json(capsys, "m13", "dual")
    assert code == 0
    assert doc["results"]["hole_stabilizer_order"] == 95040


def test_pliable_commands(capsys, tmp_path):
    code, doc = run_json(capsys, "pliable", "paley6")
    assert code == 0
    assert doc["results"]["groupoid_size"] == 60
    code, doc = run_json(capsys, "pliable", "affine:2")
    assert code == 0
    assert doc["results"]["groupoid_size"] == 18
    assert doc["results"]["primitivity_criterion"]["sharp_witness"] is True
    table = tmp_path / "c5.json"
    table.write_text(json.dumps([[(a + b) % 5 for b in range(5)] for a in range(5)]))
    code, doc = run_json(capsys, "pliable", f"group:{table}")
    assert code == 0
    assert doc["results"]["groupoid_size"] == 5
    code, doc = run_json(capsys, "pliable", "design:pg23")
    assert code == 0
    assert doc["results"]["groupoid_size"] == 1235520


def test_code_analyze(capsys):
    code, doc = run_json(capsys, "code", "analyze", "pg23", "--field", "3")
    assert code == 0
    results = doc["results"]
    assert results["dimension"] == 7
    assert results["min_distance"] == 4
    assert results["covering_radius"] == 3
    assert results["uniformly_packed"] is True
    assert results["completely_regular"] is False


def test_code_golay_chain(capsys):
    code, doc = run_json(capsys, "code", "golay-chain")
    assert code == 0
    assert doc["results"]["punctured"] == [11, 6, 5]
    assert doc["results"]["is_perfect"] is True


def test_verify_single_criterion(capsys):
    code, doc = run_json(capsys, "verify-all", "--criteria", "1,2")
    assert code == 0
    assert doc["results"]["passed"] is True
    assert [r["criterion"] for r in doc["results"]["results"]] == [1, 2]


def test_unknown_design_is_usage_error(capsys):
    code = main(["design", "check", "nonsense:9"])
    assert code == 2


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_reports_are_byte_stable(capsys):
    _, first = run_cli(capsys, "groupoid", "compute", "pg23", "--json")
    _, second = run_cli(capsys, "groupoid", "compute", "pg23", "--json")
    assert first == second
