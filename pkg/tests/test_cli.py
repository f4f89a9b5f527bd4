"""Command-line interface: exit codes, output formats, determinism."""

import json

import pytest

from doublerep import cli

from .conftest import DATUM_JSON, INVALID_DATUM_JSON


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def datum_file(write_json):
    def _make(key):
        return write_json(f"datum_{key}.json", DATUM_JSON[key])
    return _make


# ---------------------------------------------------------------------------
# datum / weights


def test_datum_check_text(capsys, datum_file):
    code, out, _ = run(capsys, "datum", "check", datum_file("B"))
    assert code == 0
    assert "nilpotent" in out
    assert "n = 2" in out.replace(":", " =") or "2" in out


def test_datum_check_json(capsys, datum_file):
    code, out, _ = run(capsys, "datum", "check", datum_file("C"), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "non-nilpotent"
    assert payload["simple_counts"] == {"1": 4, "2": 12}


def test_datum_check_invalid_exits_2(capsys, write_json):
    path = write_json("bad.json", INVALID_DATUM_JSON)
    code, _, err = run(capsys, "datum", "check", path)
    assert code == 2
    assert "invalid datum" in err


def test_malformed_json_exits_2(capsys, tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    code, _, err = run(capsys, "datum", "check", str(p))
    assert code == 2


def test_weights_list(capsys, datum_file):
    code, out, _ = run(capsys, "weights", "list", datum_file("B"), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] == 16
    assert len(payload["classes"]["1"]) == 4
    assert len(payload["classes"]["2"]) == 12


# ---------------------------------------------------------------------------
# module build / verify / analyze / compare


def build_module(capsys, tmp_path, datum_path, *spec):
    out_path = str(tmp_path / f"mod_{abs(hash(spec)) % 10 ** 8}.json")
    code, _, _ = run(capsys, "module", "build", datum_path, *spec, "--out", out_path)
    assert code == 0
    return out_path


def test_module_build_stdout_json(capsys, datum_file):
    code, out, _ = run(capsys, "module", "build", datum_file("B"),
                       "--family", "verma", "--lambda", "0;0")
    assert code == 0
    payload = json.loads(out)
    assert payload["dim"] == 2


def test_module_build_verify_round_trip(capsys, tmp_path, datum_file):
    datum_path = datum_file("B")
    path = build_module(capsys, tmp_path, datum_path,
                        "--family", "projective", "--l", "1", "--lambda", "0;0")
    code, out, _ = run(capsys, "module", "verify", path)
    assert code == 0
    assert "relations: all hold" in out


def test_module_verify_rejects_tampering(capsys, tmp_path, datum_file):
    datum_path = datum_file("B")
    path = build_module(capsys, tmp_path, datum_path,
                        "--family", "t1", "--l", "1", "--lambda", "0;0")
    obj = json.loads(open(path).read())
    obj["matrices"]["x"][0][1] = {"order": 1, "coeffs": ["7"]}
    bad = tmp_path / "tampered.json"
    bad.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "module", "verify", str(bad))
    assert code == 1
    assert "FAIL" in out or "fail" in out


def test_module_build_weight_class_mismatch_exits_2(capsys, datum_file):
    code, _, err = run(capsys, "module", "build", datum_file("C"),
                       "--family", "t1", "--l", "1", "--lambda", "0;1")
    assert code == 2
    assert "class" in err


def test_module_build_omega_power(capsys, tmp_path, datum_file):
    datum_path = datum_file("B")
    path = build_module(capsys, tmp_path, datum_path,
                        "--family", "omega_power", "--l", "1",
                        "--lambda", "0;0", "--s", "1")
    obj = json.loads(open(path).read())
    assert obj["dim"] == 3  # 2n - l


def test_module_analyze(capsys, tmp_path, datum_file):
    datum_path = datum_file("B")
    path = build_module(capsys, tmp_path, datum_path,
                        "--family", "string_tt", "--l", "1",
                        "--lambda", "0;0", "--t", "2")
    code, out, _ = run(capsys, "module", "analyze", path)
    assert code == 0
    assert "family: T_2(" in out
    assert "end_local_dim: 1" in out
    code, out, _ = run(capsys, "module", "analyze", path, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["end_local_dim"] == 1
    assert payload["family"].startswith("T_2(")


def test_module_analyze_outside_grid(capsys, tmp_path, datum_file):
    datum_path = datum_file("B")
    path = build_module(capsys, tmp_path, datum_path,
                        "--family", "string_tt", "--l", "1",
                        "--lambda", "0;0", "--t", "4")
    code, out, _ = run(capsys, "module", "analyze", path, "--max-t", "2")
    assert code == 0
    assert cli.OUTSIDE in out


def test_module_compare(capsys, tmp_path, datum_file):
    datum_path = datum_file("B")
    a = build_module(capsys, tmp_path, datum_path,
                     "--family", "band_m1", "--l", "1", "--lambda", "0;0",
                     "--eta", "2")
    b = build_module(capsys, tmp_path, datum_path,
                     "--family", "band_mt", "--l", "1", "--lambda", "0;0",
                     "--eta", "2", "--t", "1")
    c = build_module(capsys, tmp_path, datum_path,
                     "--family", "band_m1", "--l", "1", "--lambda", "0;0",
                     "--eta", "3")
    code, out, _ = run(capsys, "module", "compare", a, b)
    assert code == 0 and "yes" in out
    code, out, _ = run(capsys, "module", "compare", a, c)
    assert code == 0 and "no" in out


# ---------------------------------------------------------------------------
# ar check


def test_ar_check_ok(capsys, datum_file):
    code, out, err = run(capsys, "ar", "check", datum_file("B"),
                         "--lemma", "4.9", "--max-t", "2")
    assert code == 0
    assert "satisfy all" in out
    assert "wall time" in err  # timing goes to stderr, not stdout


def test_ar_check_wrong_family_for_datum(capsys, datum_file):
    code, _, err = run(capsys, "ar", "check", datum_file("B"), "--lemma", "4.28")
    assert code == 2
    assert "m" in err


def test_ar_check_restricted_weight(capsys, datum_file):
    code, out, _ = run(capsys, "ar", "check", datum_file("C"),
                       "--lemma", "4.5", "--l", "1", "--lambda", "0;0",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] >= 1
    assert payload["ok"] == payload["total"]


# ---------------------------------------------------------------------------
# classify


def classify_json(capsys, path, *extra):
    code, out, err = run(capsys, "classify", path, "--format", "json", *extra)
    return code, out, err


def test_classify_summary(capsys, datum_file):
    code, out, _ = classify_json(capsys, datum_file("A"),
                                 "--max-t", "2", "--max-s", "2",
                                 "--etas", "1,-1,2,0,inf")
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["all_end_local_one"] is True
    assert payload["summary"]["all_relations_ok"] is True
    assert payload["pairwise"]["min_sum_end_local"] >= 2
    assert payload["truncated"] is False
    assert payload["pairwise"]["isomorphic_pairs"] == []
    families = {e["family"] for e in payload["entries"]}
    assert {"V", "P", "W", "Omega"} <= families
    assert "M" not in families and "T" not in families


def test_classify_deterministic_across_jobs(capsys, datum_file):
    path = datum_file("B")
    code1, out1, _ = classify_json(capsys, path, "--seed", "5")
    code2, out2, _ = classify_json(capsys, path, "--seed", "5", "--jobs", "2")
    assert code1 == code2 == 0
    assert out1 == out2


def test_classify_budget_truncation(capsys, datum_file):
    code, out, _ = classify_json(capsys, datum_file("B"), "--budget", "24")
    assert code == 0
    payload = json.loads(out)
    assert payload["truncated"] is True
    assert payload["summary"]["total_dim"] <= 24
    assert payload["entries"]  # partial manifest still present


def test_classify_text_contains_counts(capsys, datum_file):
    code, out, _ = run(capsys, "classify", datum_file("A"),
                       "--max-t", "1", "--max-s", "1", "--etas", "1")
    assert code == 0
    assert "modules" in out
    assert "pairwise" in out or "distinct" in out
