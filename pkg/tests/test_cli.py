import csv
import io
import json

import pytest

from bohrkit.cli import build_parser, main, read_config, validate, UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_radius_generalized(capsys):
    code, out, _ = run(capsys, "radius", '{"theorem":"generalized","p":1,"phi":"monomial","Phi":"zero"}')
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(1 / 3, abs=1e-9)


def test_radius_prior(capsys):
    code, out, _ = run(capsys, "radius", '{"theorem":"prior","name":"R_N","N":1}')
    assert code == 0 and json.loads(out)["value"] == pytest.approx(0.236067977, abs=1e-9)


def test_radius_published_closed_form(capsys):
    code, out, _ = run(capsys, "radius", '{"theorem":"prior","name":"refined-I(i)(a)","a":0.5}')
    assert code == 0 and json.loads(out)["value"] == pytest.approx(0.4)


def test_radius_degenerate_exit_2(capsys):
    code, _, err = run(capsys, "radius", '{"theorem":"fbeta","beta":0.0}')
    assert code == 2 and "collapses to 0" in err


def test_radius_precondition_exit_1(capsys):
    cfg = {"theorem": "fbeta", "beta": 0.1, "phi": {"kind": "custom_table", "values": [0, 1, 0.5]}}
    code, _, err = run(capsys, "radius", json.dumps(cfg))
    assert code == 1 and "beta/(2(1-beta))" in err


def test_schema_rejects_before_solving(capsys):
    for bad in ('{"theorem":"nope"}', '{"theorem":"harmonic"}', '{"theorem":"generalized","p":-1}', "[1,2]", "{not json"):
        code, out, err = run(capsys, "radius", bad)
        assert code == 1 and out == "" and err


def test_usage_error_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["radius", "--format", "xml"])
    assert exc.value.code == 1


def test_param_overrides(capsys):
    code, out, _ = run(capsys, "radius", "--param", "theorem=harmonic", "--param", "beta=0.3", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert float(rows[0]["value"]) == pytest.approx(0.1019473856, abs=1e-9)


def test_config_file_and_nested_params(tmp_path, capsys):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"theorem": "prior", "params": {"name": "R_prime_N", "N": 1}}))
    code, out, _ = run(capsys, "radius", str(path))
    assert code == 0 and json.loads(out)["value"] == pytest.approx(1 / 3, abs=1e-12)


def test_table1_csv_header_and_exit(capsys):
    code, out, err = run(capsys, "table1", "--format", "csv")
    lines = out.strip().split("\n")
    assert lines[0] == "row,beta,computed,paper,delta,mode"
    assert len(lines) == 37
    assert lines[1].endswith(",paper-printed")
    # four printed cells differ from the exact roots by 5.2e-4 to 8.0e-4
    assert code == 1 and "exceeds" in err
    code, _, _ = run(capsys, "table1", "--tol", "1e-3")
    assert code == 0


def test_table1_verified_flags_discrepancy(capsys):
    code, out, _ = run(capsys, "--mode", "verified-series", "table1")
    obj = json.loads(out)
    assert code == 0 and "R2" in obj["discrepancy"]
    r2 = [r for r in obj["records"] if r["row"] == "R2"]
    assert all(r["delta"] > 0.05 for r in r2)


def test_table1_markdown(capsys):
    code, out, _ = run(capsys, "table1", "--format", "md", "--tol", "1e-3")
    assert code == 0 and out.startswith("| row | beta |")


def test_eval_refined(capsys):
    cfg = '{"f":{"kind":"blaschke_point","a":0.5},"instance":"refined-I(i)(a)","r":0.4}'
    code, out, _ = run(capsys, "eval", cfg)
    assert code == 0 and json.loads(out)["value"] == pytest.approx(1.0, abs=1e-12)


def test_curve_harmonic_monotone(capsys):
    code, out, _ = run(capsys, "curve", '{"theorem":"harmonic","beta":0.3,"m":1,"N":1,"r_min":0,"r_max":0.6}', "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    vals = [float(r["value"]) for r in rows]
    assert code == 0 and len(rows) == 61
    assert all(b >= a for a, b in zip(vals, vals[1:]))
    assert {float(r["bound"]) for r in rows} == {0.3}


def test_sharpness_commands(capsys):
    code, out, _ = run(capsys, "sharpness", '{"instance":"classical"}')
    assert code == 0 and json.loads(out)["verdict"] == "sharp-confirmed"
    code, out, _ = run(capsys, "sharpness", '{"instance":"refined-I(ii)"}')
    assert code == 0 and json.loads(out)["verdict"] == "inconclusive"
    code, _, err = run(capsys, "sharpness", '{"instance":"classical","family":"f_beta"}')
    assert code == 1 and "family" in err


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--seed", "42", "--format", "json")
    assert code == 0 and json.loads(out)["fail"] == 0


def test_output_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["table1", "--tol", "1e-3", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()
    values = json.loads(a.read_text())["records"]
    # repr floats carry full precision
    assert all(len(repr(r["computed"]).replace("0.", "", 1)) >= 9 for r in values)


def test_read_config_errors(tmp_path):
    with pytest.raises(UsageError):
        read_config(str(tmp_path / "missing.json"), [])
    with pytest.raises(UsageError):
        read_config(None, ["novalue"])
    assert read_config(None, ["x=1.5", "name=R_N"]) == {"x": 1.5, "name": "R_N"}


def test_validate_table1_schema():
    validate({"mode": "paper-printed"}, "table1")
    with pytest.raises(UsageError):
        validate({"mode": "other"}, "table1")


def test_parser_lists_all_commands():
    text = build_parser().format_help()
    for name in ("radius", "table1", "sharpness", "verify", "curve", "eval"):
        assert name in text
