"""Command-line interface: exit codes, documents, and determinism."""

import json
import subprocess
import sys

from zhuforge.cli import main

LATTICE = "lattice_rank1_norm4"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_bundled_presentations(capsys):
    for name in ("virasoro_c_minus2", "w3_c_minus2", LATTICE):
        code, out, _ = run(capsys, "validate", "--input", name)
        assert code == 0
        doc = json.loads(out)
        assert doc["valid"] is True and doc["issues"] == []


def test_validate_reports_issues_with_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "name": "bad",
        "generators": [{"symbol": "w", "weight": 2}],
        "relations": [{"i": 0, "j": 0, "k": 2, "value": []}],
    }))
    code, out, _ = run(capsys, "validate", "--input", str(bad))
    assert code == 1
    doc = json.loads(out)
    assert doc["valid"] is False and doc["issues"]
    # Non-validate commands refuse to run on an invalid presentation.
    code, _, err = run(capsys, "complete", "--input", str(bad))
    assert code == 1 and "invalid presentation" in err


def test_unknown_input_exits_3(capsys):
    code, _, err = run(capsys, "complete", "--input", "no_such_thing")
    assert code == 3
    assert "no such file or bundled presentation" in err


def test_unparseable_file_exits_3(capsys, tmp_path):
    bad = tmp_path / "broken.json"
    bad.write_text("{ not json")
    code, _, err = run(capsys, "validate", "--input", str(bad))
    assert code == 3 and "error" in err


def test_complete_text_output(capsys):
    code, out, _ = run(capsys, "complete", "--input", "virasoro_c_minus2",
                       "--format", "text")
    assert code == 0
    assert "R(w,w,1) = 2*w(-1)" in out
    assert "R(w,w,3) = -1" in out


def test_nf_json_output(capsys):
    code, out, _ = run(capsys, "nf", "w(0)w(-3)1", "--input",
                       "virasoro_c_minus2")
    assert code == 0
    doc = json.loads(out)
    assert doc["rendered"] == "3*w(-4)"
    assert doc["strategy"] == "leftmost"


def test_nf_rejects_garbage_expression(capsys):
    code, _, err = run(capsys, "nf", "w(-2)q(1)", "--input",
                       "virasoro_c_minus2")
    assert code == 3 and "error" in err


def test_singular_verdicts(capsys):
    code, out, _ = run(capsys, "singular", "--input", "w3_c_minus2")
    assert code == 0
    doc = json.loads(out)
    assert doc["degenerate"] is False and doc["defects"] == []

    code, out, _ = run(capsys, "singular", "--input", LATTICE)
    assert code == 0
    doc = json.loads(out)
    assert doc["degenerate"] is True and len(doc["defects"]) == 2


def test_zhu_complete_and_partial(capsys):
    code, out, _ = run(capsys, "zhu", "--input", "w3_c_minus2")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "complete"
    assert len(doc["extra_relations"]) == 1

    code, out, _ = run(capsys, "zhu", "--input", LATTICE,
                       "--mode-depth", "0")
    assert code == 2
    doc = json.loads(out)
    assert doc["status"] == "partial"
    assert "max_mode_depth" in doc["partial_reason"]


def test_zhu_seed_selection(capsys):
    # The lattice presentation has no stored singular vectors, so
    # restricting to them leaves nothing to close over.
    code, out, _ = run(capsys, "zhu", "--input", LATTICE,
                       "--seeds", "singular-only")
    assert code == 0
    doc = json.loads(out)
    assert doc["extra_relations"] == [] and doc["provenance"] == []

    code, out, _ = run(capsys, "zhu", "--input", LATTICE,
                       "--seeds", "c1-only")
    assert code == 0
    assert len(json.loads(out)["extra_relations"]) == 5


def test_quotient_exit_codes(capsys):
    code, out, _ = run(capsys, "quotient", "--input", LATTICE)
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == 7 and doc["status"] == "stabilized-at-degree-6"

    code, out, _ = run(capsys, "quotient", "--input", "w3_c_minus2")
    assert code == 2
    doc = json.loads(out)
    assert doc["dimension"] == "unbounded-at-bound"


def test_output_flag_writes_identical_bytes(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        code, out, _ = run(capsys, "zhu", "--input", "w3_c_minus2",
                           "--output", str(path))
        assert code == 0 and out == ""
    first, second = a.read_bytes(), b.read_bytes()
    assert first == second
    assert first.endswith(b"\n")
    json.loads(first)


def test_strategy_flag_changes_nothing_on_confluent_input(capsys):
    docs = []
    for strat in ("leftmost", "rightmost"):
        code, out, _ = run(capsys, "complete", "--input", "w3_c_minus2",
                           "--strategy", strat)
        assert code == 0
        docs.append(json.loads(out))
    assert docs[0] == docs[1]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zhuforge.cli", "nf", "w(1)w(-1)1",
         "--input", "virasoro_c_minus2", "--format", "text"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "2*w(-1)" in proc.stdout
