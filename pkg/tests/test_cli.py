import json
import subprocess
import sys
from pathlib import Path

from linearcat.cli import main

MODELS = Path(__file__).resolve().parent.parent / "models"

FAST = ["--depth", "4", "--max-size", "2", "--max-units", "1"]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_word_reports_cancellation(capsys):
    code, out, _ = run(capsys, "word", "(_+0)")
    assert code == 0
    assert "length:      1" in out
    assert "runit+" in out


def test_word_core_split(capsys):
    code, out, _ = run(capsys, "word", "(1*(_+_))")
    assert code == 0
    assert "core:        _ + _" in out
    assert "(*, 1, left)" in out


def test_word_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "word", "((")
    assert code == 2
    assert "parse error" in err


def test_word_long_word_exit_3(capsys):
    code, out, err = run(capsys, "word", "(_+(_+_))")
    assert code == 3
    assert "length <= 2" in err


def test_word_structured(capsys):
    code, out, _ = run(capsys, "word", "(_+0)", "--format", "structured")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert doc["cancellation"] == "runit+[_]"
    assert doc["attachments"] == [{"op": "+", "unit_word": "0", "side": "right"}]


def test_check_bundled_pointed_sets(capsys):
    code, out, _ = run(capsys, "check", "--model",
                       str(MODELS / "pointed_sets_3.json"), *FAST)
    assert code == 0
    assert "0 failed" in out


def test_check_structured_output_is_stable(capsys):
    args = ["check", "--model", str(MODELS / "pointed_sets_3.json"),
            "--format", "structured"] + FAST
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    doc = json.loads(out1)
    assert doc["schema_version"] == 1
    assert doc["summary"]["failed"] == 0
    assert out1 == out2


def test_check_monoids_reports_lineariser(capsys):
    code, out, _ = run(capsys, "check", "--model",
                       str(MODELS / "commutative_monoids_3.json"),
                       "--format", "structured", *FAST)
    assert code == 0
    doc = json.loads(out)
    lin = next(r for r in doc["reports"] if r["law"] == "lineariser")
    assert lin["details"]["lineariser"] is True


def test_check_faulty_model_exit_1(capsys):
    code, out, _ = run(capsys, "check", "--model",
                       str(MODELS / "pointed_sets_3_faulty.json"),
                       "--format", "structured", *FAST)
    assert code == 1
    doc = json.loads(out)
    failing = [r for r in doc["reports"] if not r["passed"]]
    assert failing
    assert any("counterexample" in r for r in failing)


def test_check_malformed_model_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "check", "--model", str(bad))
    assert code == 2
    assert "model error" in err


def test_central_monoids_table(capsys):
    code, out, _ = run(capsys, "central", "M1_2", "M1_2", "--model",
                       str(MODELS / "commutative_monoids_3.json"))
    assert code == 0
    assert "2 central morphism(s)" in out
    assert "addition table" in out


def test_central_pointed_sets_witness(capsys):
    code, out, _ = run(capsys, "central", "P2", "P2", "--model",
                       str(MODELS / "pointed_sets_3.json"))
    assert code == 0
    assert "no lineariser" in out
    assert "P2" in out


def test_central_structured(capsys):
    code, out, _ = run(capsys, "central", "M1_2", "M1_2", "--model",
                       str(MODELS / "commutative_monoids_3.json"),
                       "--format", "structured")
    assert code == 0
    doc = json.loads(out)
    assert doc["lineariser"] is True
    assert len(doc["addition_table"]) == len(doc["central"]) == 2


def test_central_bad_object_exit_2(capsys):
    code, _, err = run(capsys, "central", "P9", "P2", "--model",
                       str(MODELS / "pointed_sets_3.json"))
    assert code == 2
    assert "object error" in err


def test_bad_numeric_flags_exit_2(capsys):
    code, _, err = run(capsys, "check", "--model",
                       str(MODELS / "pointed_sets_3.json"), "--depth", "0")
    assert code == 2
    assert "--depth" in err


def test_coherence_subcommand(capsys):
    code, out, _ = run(capsys, "coherence", "--model",
                       str(MODELS / "pointed_sets_3.json"), *FAST)
    assert code == 0
    assert "coherence-identity-matrix/n=3" in out


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "linearcat.cli", "word", "(_+0)"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "runit+" in proc.stdout
