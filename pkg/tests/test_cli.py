import json

import pytest

from archspread.cli import main


@pytest.fixture
def bundle_path(tmp_path):
    path = tmp_path / "bundle.json"
    assert main(["synth", "--sets", "3", "--n", "8", "--seed", "42", "-o", str(path)]) == 0
    return path


def test_synth_writes_parseable_bundle(bundle_path):
    doc = json.loads(bundle_path.read_text())
    assert len(doc["sets"]) == 3
    assert all(len(s["solutions"]) == 8 for s in doc["sets"])


def test_synth_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["synth", "--sets", "2", "--n", "5", "--seed", "7"]
    assert main(args + ["-o", str(a)]) == 0
    assert main(args + ["-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_validate_accepts_synth_output(bundle_path, capsys):
    assert main(["validate", str(bundle_path)]) == 0
    assert "ok:" in capsys.readouterr().out


def test_validate_rejects_broken_bundle(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"name": "x", "sets": [{"label": "s"}]}')
    assert main(["validate", str(path)]) == 1


def test_missing_file_is_data_error(tmp_path):
    assert main(["indicators", str(tmp_path / "nope.json")]) == 1


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as excinfo:
        main(["indicators", "x.json", "--format", "yaml"])
    assert excinfo.value.code == 2


def test_indicators_json_report(bundle_path, tmp_path):
    out = tmp_path / "report.json"
    assert main(["indicators", str(bundle_path), "-o", str(out)]) == 0
    report = json.loads(out.read_text())
    assert len(report["sets"]) == 3
    for row in report["sets"]:
        assert 0.0 <= row["mas"] <= 1.0
    assert "correlation" in report


def test_indicators_csv_report(bundle_path, tmp_path):
    out = tmp_path / "report.csv"
    assert main(["indicators", str(bundle_path), "--format", "csv", "-o", str(out)]) == 0
    summary = out.with_name("report_summary.csv")
    assert summary.exists()
    assert summary.read_text().startswith("label,n,o,ms,mas")


def test_w_pred_flag_changes_distances(bundle_path, tmp_path):
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    assert main(["indicators", str(bundle_path), "--w-pred", "1.0", "-o", str(out_a)]) == 0
    assert main(["indicators", str(bundle_path), "--w-pred", "0.0", "-o", str(out_b)]) == 0
    assert out_a.read_text() != out_b.read_text()


def test_per_set_maxd_flag(bundle_path, tmp_path):
    out = tmp_path / "per.json"
    assert main(["indicators", str(bundle_path), "--per-set-maxd", "-o", str(out)]) == 0
    report = json.loads(out.read_text())
    assert all(0.0 <= row["mas"] <= 1.0 for row in report["sets"])


def test_mas_allpairs_flag_not_below_default(bundle_path, tmp_path):
    out_default = tmp_path / "d.json"
    out_allpairs = tmp_path / "p.json"
    assert main(["indicators", str(bundle_path), "-o", str(out_default)]) == 0
    assert main(["indicators", str(bundle_path), "--mas-allpairs", "-o", str(out_allpairs)]) == 0
    default = json.loads(out_default.read_text())["sets"]
    allpairs = json.loads(out_allpairs.read_text())["sets"]
    for d, p in zip(default, allpairs):
        assert p["mas"] >= d["mas"] - 1e-12


def test_mds_command_with_svg(bundle_path, tmp_path):
    out = tmp_path / "proj.json"
    svg = tmp_path / "scatter.svg"
    assert main(["mds", str(bundle_path), "-o", str(out), "--svg", str(svg)]) == 0
    report = json.loads(out.read_text())
    assert set(report["projections"]) == {"set0", "set1", "set2"}
    assert svg.read_text().startswith("<svg")


def test_compare_reports_everything(bundle_path, tmp_path):
    out = tmp_path / "cmp.json"
    assert main(["compare", str(bundle_path), "-o", str(out)]) == 0
    report = json.loads(out.read_text())
    assert {"sets", "correlation", "projections"} <= set(report)


def test_compare_byte_identical_across_runs(bundle_path, tmp_path):
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    assert main(["compare", str(bundle_path), "-o", str(out_a)]) == 0
    assert main(["compare", str(bundle_path), "-o", str(out_b)]) == 0
    assert out_a.read_bytes() == out_b.read_bytes()
