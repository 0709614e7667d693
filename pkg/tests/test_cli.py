import json
import os

import pytest

from gaussperiods.cli import main

REFS = os.path.join(os.path.dirname(__file__), "..", "references")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly_text(capsys):
    code, out, _ = run(capsys, "poly", "--aux-prime", "7", "--degree", "3")
    assert code == 0
    assert out.strip() == "3, 7^2: 1, 1, -2, -1"


def test_poly_coeffs(capsys):
    code, out, _ = run(capsys, "poly", "--aux-prime", "13", "--degree", "4",
                       "--format", "coeffs")
    assert code == 0
    assert out.strip() == "1,1,2,-4,3"


def test_poly_json(capsys):
    code, out, _ = run(capsys, "poly", "--aux-prime", "89", "--degree", "11",
                       "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["degree"] == 11 and d["q"] == 89 and d["ell"] == 3
    assert d["coeffs"][:3] == ["1", "1", "-40"]
    assert d["disc_base"] == 89 and d["disc_exp"] == 10 and d["disc_sign"] == 1


def test_poly_domain_errors(capsys):
    code, _, err = run(capsys, "poly", "--aux-prime", "12", "--degree", "3")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "poly", "--aux-prime", "13", "--degree", "5")
    assert code == 2 and "error" in err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--aux-prime", "29", "--degree", "7",
                       "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["f"] == 4 and d["g"] == 2
    assert d["poly_disc"] == "171903939769"
    assert d["field_disc"] == "29^6"
    assert d["index_k"] == "17"
    assert d["n_real"] == 7 and d["n_pairs"] == 0
    assert d["monogenic"] is False


def test_analyze_text_skips_sturm_above_policy(capsys, monkeypatch):
    monkeypatch.setenv("GAUSSPERIOD_STURM_MAX_E", "10")
    code, out, _ = run(capsys, "analyze", "--aux-prime", "2221",
                       "--degree", "37")
    assert code == 0
    assert "n_real: not computed" in out
    code, out, _ = run(capsys, "analyze", "--aux-prime", "2221",
                       "--degree", "37", "--force-sturm")
    assert code == 0
    assert "n_real: 37" in out


def test_table_text(capsys):
    code, out, _ = run(capsys, "table", "--degree", "2", "--count", "8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "2, 5^1"
    assert len(lines) == 8


def test_table_range_skips_composites(capsys):
    code, out, _ = run(capsys, "table", "--degree-range", "2..7",
                       "--count", "2", "--format", "json")
    assert code == 0
    degrees = [json.loads(line)["degree"] for line in out.strip().splitlines()]
    assert degrees == [2, 2, 3, 3, 5, 5, 7, 7]


def test_table_polys_jobs_invariant(capsys):
    code, out1, _ = run(capsys, "table", "--degree", "3", "--count", "3",
                        "--polys", "--format", "json")
    assert code == 0
    code, out2, _ = run(capsys, "table", "--degree", "3", "--count", "3",
                        "--polys", "--format", "json", "--jobs", "2")
    assert code == 0
    assert out1 == out2
    rec = json.loads(out1.splitlines()[0])
    assert rec["coeffs"] == ["1", "1", "-2", "-1"]
    assert rec["monogenic"] is True


def test_table_usage_errors(capsys):
    code, _, err = run(capsys, "table", "--degree-range", "5")
    assert code == 2 and "a..b" in err
    code, _, err = run(capsys, "table", "--degree-range", "9..3")
    assert code == 2
    code, _, err = run(capsys, "table", "--degree", "9")
    assert code == 2
    code, out, _ = run(capsys, "table", "--degree", "9", "--count", "2",
                       "--allow-composite")
    assert code == 0
    assert out.splitlines()[0] == "9, 19^8"


def test_verify_match(capsys):
    code, out, _ = run(capsys, "verify", "--reference",
                       os.path.join(REFS, "table1.jsonl"))
    assert code == 0
    assert out.count("MATCH") == 72 and "MISMATCH" not in out


def test_verify_grid_mode(capsys):
    code, out, _ = run(capsys, "verify", "--reference",
                       os.path.join(REFS, "table1.jsonl"),
                       "--degree-range", "2..23", "--count", "8")
    assert code == 0
    assert out.count("MATCH") == 72


def test_verify_mismatch(capsys, tmp_path):
    ref = tmp_path / "ref.jsonl"
    lines = open(os.path.join(REFS, "table1.jsonl")).read().splitlines()
    rec = json.loads(lines[0])
    rec["disc_exp"] = 9
    lines[0] = json.dumps(rec)
    ref.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "verify", "--reference", str(ref))
    assert code == 1
    assert "MISMATCH" in out


def test_verify_corrupt_reference(capsys, tmp_path):
    ref = tmp_path / "ref.jsonl"
    ref.write_text("{not json\n")
    code, _, err = run(capsys, "verify", "--reference", str(ref))
    assert code == 2 and "bad record" in err


def test_verify_missing_reference(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "--reference",
                       str(tmp_path / "nope.jsonl"))
    assert code == 2 and "error" in err
