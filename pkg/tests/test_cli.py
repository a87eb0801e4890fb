import json
import subprocess
import sys
from pathlib import Path

from qhsa.cli import main

FIXTURE_DIR = Path(__file__).parent.parent / "src" / "qhsa" / "fixtures"


def fx(name):
    return str(FIXTURE_DIR / name)


def run_json(tmp_path, *argv):
    out = tmp_path / "report.json"
    code = main([*argv, "--format", "json", "--output", str(out)])
    return code, json.loads(out.read_text())


# -- check ---------------------------------------------------------------------


def test_check_passes_on_every_positive_fixture(tmp_path):
    for name in ("trivial", "ext", "h2", "h2r", "h2ext"):
        code, doc = run_json(tmp_path, "check", fx(f"{name}.qhsa"))
        assert code == 0
        assert doc["overall"] == "pass"
        assert doc["fixture"] == name


def test_check_fails_with_witness_on_broken_pentagon(tmp_path):
    code, doc = run_json(tmp_path, "check", fx("h2-broken-pentagon.qhsa"))
    assert code == 1
    assert doc["overall"] == "fail"
    entries = {e["check_id"]: e for e in doc["entries"]}
    assert entries["eq.fii"]["status"] == "fail"
    assert entries["eq.fii"]["witness"]["difference"]


def test_check_exit_codes_cover_the_contract(tmp_path):
    assert main(["check", fx("h2.qhsa")]) == 0
    assert main(["check", fx("h2-broken-antipode.qhsa")]) == 1
    assert main(["check", str(tmp_path / "missing.qhsa")]) == 2
    bad = tmp_path / "bad.qhsa"
    bad.write_text("{not json")
    assert main(["check", str(bad)]) == 2


def test_suite_selection(tmp_path):
    code, doc = run_json(
        tmp_path, "check", fx("h2-broken-antipode.qhsa"), "--suites", "algebra,structure"
    )
    assert code == 0  # the damage is invisible to the validation layers
    suites = {e["suite"] for e in doc["entries"]}
    assert suites == {"algebra", "structure"}
    assert main(["check", fx("h2.qhsa"), "--suites", "nonsense"]) == 2


def test_triangular_suite_is_opt_in(tmp_path):
    code, doc = run_json(tmp_path, "check", fx("h2r.qhsa"), "--suites", "triangular")
    assert code == 1  # h2r is quasi-triangular but not triangular
    code, doc = run_json(tmp_path, "check", fx("ext.qhsa"), "--suites", "triangular")
    assert code == 0


def test_quasi_triangular_suites_skip_without_r(tmp_path):
    code, doc = run_json(tmp_path, "check", fx("h2.qhsa"))
    assert code == 0
    skipped = {e["check_id"] for e in doc["entries"] if e["status"] == "skipped"}
    assert "eq.7" in skipped and "eq.6i" in skipped


def test_text_format(capsys):
    assert main(["check", fx("ext.qhsa")]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "overall: PASS" in out


def test_validate_subcommand(tmp_path):
    code, doc = run_json(tmp_path, "validate", fx("h2ext.qhsa"))
    assert code == 0
    assert {e["suite"] for e in doc["entries"]} == {"algebra", "structure"}


def test_report_determinism(tmp_path):
    _, first = run_json(tmp_path, "check", fx("h2ext.qhsa"))
    _, second = run_json(tmp_path, "check", fx("h2ext.qhsa"))
    first.pop("wall_time_seconds")
    second.pop("wall_time_seconds")
    assert json.dumps(first) == json.dumps(second)


def test_fixture_dir_env_override(tmp_path, monkeypatch):
    custom = tmp_path / "fixtures"
    custom.mkdir()
    (custom / "mine.qhsa").write_text(Path(fx("h2.qhsa")).read_text())
    monkeypatch.setenv("QHSA_FIXTURE_DIR", str(custom))
    assert main(["check", "mine.qhsa"]) == 0


def test_bundled_fixture_resolution(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(["check", "h2.qhsa"]) == 0


# -- transform --------------------------------------------------------------------


def test_opposite_of_h2_reproduces_the_document(tmp_path):
    out = tmp_path / "h2-op.qhsa"
    code = main(["transform", fx("h2.qhsa"), "opposite", "--output", str(out)])
    assert code == 0
    assert out.read_bytes() == Path(fx("h2.qhsa")).read_bytes()


def test_prime_of_ext_reproduces_the_document(tmp_path):
    out = tmp_path / "ext-prime.qhsa"
    code = main(["transform", fx("ext.qhsa"), "prime", "--output", str(out)])
    assert code == 0
    assert out.read_bytes() == Path(fx("ext.qhsa")).read_bytes()


def test_twist_h2_with_bundled_twistor(tmp_path):
    out = tmp_path / "h2-twisted.qhsa"
    code = main(
        ["transform", fx("h2.qhsa"), "twist", "--twistor", fx("f-e11.twist"), "--output", str(out)]
    )
    assert code == 0
    assert main(["check", str(out)]) == 0


def test_twist_rejects_invalid_twistor(tmp_path):
    bad = tmp_path / "bad.twist"
    bad.write_text(
        json.dumps(
            {
                "name": "bad",
                "field": {"kind": "rational"},
                "dimension": 2,
                "element": [[1, 1, "1"]],
            }
        )
    )
    out = tmp_path / "out.qhsa"
    code = main(["transform", fx("h2.qhsa"), "twist", "--twistor", str(bad), "--output", str(out)])
    assert code == 1
    assert not out.exists()


def test_tensor_transform_reproduces_h2ext(tmp_path):
    out = tmp_path / "product.qhsa"
    code = main(
        ["transform", fx("h2.qhsa"), "tensor", "--other", fx("ext.qhsa"), "--output", str(out)]
    )
    assert code == 0
    ours = json.loads(out.read_text())
    bundled = json.loads(Path(fx("h2ext.qhsa")).read_text())
    ours.pop("name")
    bundled.pop("name")
    assert ours == bundled


def test_tensor_field_mismatch_is_an_input_error(tmp_path):
    out = tmp_path / "nope.qhsa"
    code = main(
        ["transform", fx("h2.qhsa"), "tensor", "--other", fx("h2r.qhsa"), "--output", str(out)]
    )
    assert code == 2


# -- drinfeld ----------------------------------------------------------------------


def test_drinfeld_verify_and_emit(tmp_path):
    twist_out = tmp_path / "h2-fd.twist"
    report_out = tmp_path / "report.json"
    code = main(
        [
            "drinfeld",
            fx("h2.qhsa"),
            "--verify",
            "--emit-twist",
            str(twist_out),
            "--format",
            "json",
            "--output",
            str(report_out),
        ]
    )
    assert code == 0
    doc = json.loads(report_out.read_text())
    assert doc["overall"] == "pass"
    twist = json.loads(twist_out.read_text())
    assert twist["element"] == [
        [0, 0, "1"],
        [0, 1, "1"],
        [1, 0, "1"],
        [1, 1, "-1"],
    ]
    assert twist["normalization"] == {"eps_alpha": "1", "eps_beta": "1"}


def test_drinfeld_on_hopf_fixture_is_trivial(tmp_path):
    twist_out = tmp_path / "ext-fd.twist"
    code = main(["drinfeld", fx("ext.qhsa"), "--verify", "--emit-twist", str(twist_out)])
    assert code == 0
    twist = json.loads(twist_out.read_text())
    assert twist["element"] == [[0, 0, "1"]]


def test_drinfeld_without_verify_reports_construction_only(tmp_path):
    code, doc = run_json(tmp_path, "drinfeld", fx("trivial.qhsa"))
    assert code == 0
    ids = {e["check_id"] for e in doc["entries"]}
    assert "drinfeld.fd-inverse" in ids
    assert "thm3.phi" not in ids


def test_drinfeld_refuses_broken_structures(tmp_path):
    code = main(["drinfeld", fx("h2-broken-pentagon.qhsa"), "--output", str(tmp_path / "r.txt")])
    assert code == 1


# -- entry point --------------------------------------------------------------------


def test_console_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "qhsa.cli", "check", fx("h2.qhsa")],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "overall: PASS" in result.stdout
