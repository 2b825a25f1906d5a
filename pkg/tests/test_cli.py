import json
import os

import pytest

from detindex.cli import main

MANIFEST_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "manifests")
SURFACE = os.path.join(MANIFEST_DIR, "surface-232.json")


def write_manifest(tmp_path, doc, name="m.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_alg_index_on_shipped_manifest(capsys):
    code, out, _ = run_cli(capsys, "alg-index", SURFACE)
    assert code == 0
    report = json.loads(out)
    assert report["result"]["alg_index"] == 5
    assert report["provenance"]["ordering"] == "anti-graded reverse lexicographic"


def test_hom_index_on_shipped_manifest(capsys):
    code, out, _ = run_cli(capsys, "hom-index", SURFACE)
    assert code == 0
    assert json.loads(out)["result"]["omega_quotient_dim"] == 6


def test_oracle_flag_reports_agreement(capsys):
    code, out, _ = run_cli(capsys, "alg-index", SURFACE, "--oracle")
    assert code == 0
    oracle = json.loads(out)["provenance"]["oracle"]
    assert oracle["agrees"] is True
    assert oracle["stabilized"] is True
    assert oracle["value"] == 5


def test_modular_precheck(capsys):
    code, out, _ = run_cli(capsys, "alg-index", SURFACE, "--field", "p:32003")
    assert code == 0
    pre = json.loads(out)["provenance"]["modular_precheck"]
    assert pre["characteristic"] == 32003
    assert pre["value"] == 5
    assert pre["agrees_with_rational"] is True


def test_report_round_trip_is_byte_stable(tmp_path, capsys):
    out1 = str(tmp_path / "report1.json")
    out2 = str(tmp_path / "report2.json")
    code, _, _ = run_cli(capsys, "alg-index", SURFACE, "--output", out1)
    assert code == 0
    # feeding the emitted report back in reproduces it byte for byte
    code, _, _ = run_cli(capsys, "alg-index", out1, "--output", out2)
    assert code == 0
    with open(out1, "rb") as fh1, open(out2, "rb") as fh2:
        assert fh1.read() == fh2.read()


def test_check_command(capsys):
    code, out, _ = run_cli(capsys, "check", SURFACE)
    assert code == 0
    result = json.loads(out)["result"]
    assert result["type"] == [2, 3, 2]
    assert result["smoothable"] is True
    assert result["isolated"] is True
    assert result["stratum_dims"] == [0, 2]
    assert result["dim"] == 2


def test_minors_command_defaults_to_t(capsys):
    code, out, _ = run_cli(capsys, "minors", SURFACE)
    assert code == 0
    result = json.loads(out)["result"]
    assert result["size"] == 2
    assert len(result["minors"]) == 3


def test_colength_command_with_explicit_ideal(tmp_path, capsys):
    path = write_manifest(tmp_path, {
        "variables": ["x", "y"],
        "ideal": ["x^2", "y^3"],
    })
    code, out, _ = run_cli(capsys, "colength", path, "--oracle")
    assert code == 0
    assert json.loads(out)["result"]["colength"] == 6


def test_colength_infinite_is_not_an_error(tmp_path, capsys):
    path = write_manifest(tmp_path, {
        "variables": ["x", "y"],
        "ideal": ["x*y"],
    })
    code, out, _ = run_cli(capsys, "colength", path)
    assert code == 0
    assert json.loads(out)["result"]["colength"] == "INFINITE"


def test_infinite_index_exits_two(tmp_path, capsys):
    path = write_manifest(tmp_path, {
        "variables": ["x", "y"],
        "matrix": [["x^2"]],
        "t": 1,
        "form": ["0", "1"],
    })
    code, out, _ = run_cli(capsys, "alg-index", path)
    assert code == 2
    assert json.loads(out)["result"]["alg_index"] == "INFINITE"


def test_icis_command(tmp_path, capsys):
    path = write_manifest(tmp_path, {
        "variables": ["x", "y", "z"],
        "matrix": [["x^2 + y^2 + z^2"]],
        "t": 1,
        "form": ["0", "0", "1"],
    })
    code, out, _ = run_cli(capsys, "icis", path, "--oracle")
    assert code == 0
    assert json.loads(out)["result"]["icis_index"] == 2


def test_gmvs_command(tmp_path, capsys):
    path = write_manifest(tmp_path, {
        "variables": ["x", "y", "z"],
        "matrix": [["z", "y", "x"], ["0", "x", "y"]],
        "t": 2,
        "form": ["1", "0", "1"],
    })
    code, out, _ = run_cli(capsys, "gmvs", path)
    assert code == 0
    assert json.loads(out)["result"]["gmvs_index"] == 4


def test_tables_command(capsys):
    code, out, _ = run_cli(capsys, "tables", "--type", "2,3,2")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["nmat"] == [[1, -1], [0, 1]]
    assert result["mmat"] == [[1, 1], [0, 1]]
    assert result["chi_bar_hyperplane"] == 1


def test_convert_command(tmp_path, capsys):
    path = write_manifest(tmp_path, {
        "type": [2, 3, 2],
        "N": 6,
        "radial": [1, 3],
        "chi": [1, 4],
        "chi_sing": 1,
    })
    code, out, _ = run_cli(capsys, "convert", path)
    assert code == 0
    result = json.loads(out)["result"]
    assert result["radial_roundtrip"] == 3
    assert set(result["ph_index"]) == {"1", "2", "3"}
    assert result["isolated"]["chi_sing"] == 1
    # the reduced and stratified formulas agree on this data
    assert result["isolated"]["ph_index"] == result["ph_index"]
    assert result["isolated"]["phn_index"] == result["phn_index"]


def test_validation_error_names_field(tmp_path, capsys):
    path = write_manifest(tmp_path, {
        "variables": ["x", "y"],
        "matrix": [["x", "y"], ["y"]],
        "t": 1,
    })
    code, _, err = run_cli(capsys, "check", path)
    assert code == 1
    assert "matrix" in err


def test_unknown_variable_in_entry_names_field(tmp_path, capsys):
    path = write_manifest(tmp_path, {
        "variables": ["x", "y"],
        "matrix": [["x + q"]],
        "t": 1,
    })
    code, _, err = run_cli(capsys, "check", path)
    assert code == 1
    assert "matrix" in err and "q" in err


def test_missing_form_names_field(capsys, tmp_path):
    path = write_manifest(tmp_path, {
        "variables": ["x", "y"],
        "matrix": [["x^2 + y^2"]],
        "t": 1,
    })
    code, _, err = run_cli(capsys, "alg-index", path)
    assert code == 1
    assert "form" in err


def test_shipped_manifests_validate_against_schema():
    jsonschema = pytest.importorskip("jsonschema")
    with open(os.path.join(MANIFEST_DIR, "manifest.schema.json")) as fh:
        schema = json.load(fh)
    for name in os.listdir(MANIFEST_DIR):
        if name.endswith(".json") and name != "manifest.schema.json":
            with open(os.path.join(MANIFEST_DIR, name)) as fh:
                jsonschema.validate(json.load(fh), schema)
