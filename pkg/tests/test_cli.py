"""Command line behavior: report shape, exactness envelopes, determinism,
exit codes, and the error paths for malformed or out-of-scope input.
"""
import hashlib
import json

import pytest

from quiverlab.cli import main
from conftest import GENTLE_TWO_LOOP_DOC


KRONECKER_DOC = json.dumps(
    {
        "vertices": [1, 2],
        "arrows": [
            {"id": "a", "from": 1, "to": 2},
            {"id": "b", "from": 1, "to": 2},
        ],
    }
)

KRONECKER3_DOC = json.dumps(
    {
        "vertices": [1, 2],
        "arrows": [{"id": f"a{i}", "from": 1, "to": 2} for i in range(3)],
    }
)

CYCLE_DOC = json.dumps(
    {
        "vertices": [1, 2, 3],
        "arrows": [
            {"id": "a", "from": 1, "to": 2},
            {"id": "b", "from": 2, "to": 3},
            {"id": "c", "from": 3, "to": 1},
        ],
    }
)

PHI_GENTLE_DOC = '[["-1", "2"], ["-2", "3"]]'


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, text):
    target = tmp_path / name
    target.write_text(text, encoding="utf-8")
    return str(target)


# --- classify ----------------------------------------------------------------

def test_classify_table_output(tmp_path, capsys):
    path = write(tmp_path, "kron.json", KRONECKER_DOC)
    code, out, err = run(capsys, "classify", path)
    assert code == 0
    assert err == ""
    assert "kind: affine" in out
    assert "radical_vector: 1, 1" in out
    assert "x^2 - 2x + 1" in out
    assert "warnings: (none)" in out


def test_classify_json_shape_and_digest(tmp_path, capsys):
    path = write(tmp_path, "kron.json", KRONECKER_DOC)
    code, out, _ = run(capsys, "classify", path, "--json")
    assert code == 0
    doc = json.loads(out)
    expected_digest = hashlib.sha256(KRONECKER_DOC.encode()).hexdigest()
    assert doc["command"] == "classify"
    assert doc["input_digest"] == expected_digest
    assert doc["warnings"] == []
    result = doc["result"]
    assert result["kind"] == "affine"
    assert result["radical_vector"] == {"exact": True, "value": [1, 1]}
    assert result["cartan_matrix"] == {"exact": True, "value": [["1", "0"], ["2", "1"]]}
    assert result["coxeter_matrix"]["value"] == [["3", "-2"], ["2", "-1"]]
    profile = result["cyclotomic_profile"]
    assert profile["is_cyclotomic"] is True
    assert profile["periodic"] is False
    assert profile["witness"] == {"exact": True, "value": [1, 2]}


def test_classify_deterministic_bytes(tmp_path, capsys):
    path = write(tmp_path, "kron.json", KRONECKER_DOC)
    _, first, _ = run(capsys, "classify", path, "--json")
    _, second, _ = run(capsys, "classify", path, "--json")
    assert first == second


def test_classify_cyclic_warns_but_succeeds(tmp_path, capsys):
    path = write(tmp_path, "cycle.json", CYCLE_DOC)
    code, out, _ = run(capsys, "classify", path, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["kind"] == "affine"
    assert doc["result"]["cartan_matrix"] is None
    assert doc["result"]["cyclotomic_profile"] is None
    assert any("oriented cycle" in w for w in doc["warnings"])


def test_classify_malformed_file_fails(tmp_path, capsys):
    path = write(tmp_path, "bad.json", "{oops")
    code, out, err = run(capsys, "classify", path)
    assert code == 1
    assert "error:" in err


def test_classify_missing_file_fails(tmp_path, capsys):
    code, _, err = run(capsys, "classify", str(tmp_path / "absent.json"))
    assert code == 1
    assert "error:" in err


# --- canonical -----------------------------------------------------------------

def test_canonical_json_shape(capsys):
    code, out, _ = run(capsys, "canonical", "--weights", "2,3,5", "--json")
    assert code == 0
    doc = json.loads(out)
    result = doc["result"]
    assert result["delta"] == {"exact": True, "value": -1}
    assert result["p"] == {"exact": True, "value": 30}
    assert result["verdict"]["kind"] == "serre-cyclotomic"
    assert result["verdict"]["m"] == 30
    assert result["entropy_slope"] == {"exact": True, "value": "1"}
    assert result["algebra_dim"] == {"exact": True, "value": 32}
    assert result["coxeter_check"]["passed"] is True
    assert result["lambdas"] == {"exact": True, "value": ["1"]}


def test_canonical_default_lambdas(capsys):
    code, out, _ = run(capsys, "canonical", "--weights", "2,2,2,2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["lambdas"]["value"] == ["1", "2"]
    assert doc["result"]["verdict"]["kind"] == "fractionally-calabi-yau"


def test_canonical_explicit_lambdas(capsys):
    code, out, _ = run(capsys, "canonical", "--weights", "2,2,2", "--lambdas", "1/2", "--json")
    assert code == 0
    assert json.loads(out)["result"]["lambdas"]["value"] == ["1/2"]


def test_canonical_rejects_bad_weights(capsys):
    code, _, err = run(capsys, "canonical", "--weights", "2,x")
    assert code == 1
    assert "error:" in err
    code, _, err = run(capsys, "canonical", "--weights", "2")
    assert code == 1


# --- trivext ---------------------------------------------------------------------

def test_trivext_quiver_input(tmp_path, capsys):
    path = write(tmp_path, "kron.json", KRONECKER_DOC)
    code, out, _ = run(capsys, "trivext", path, "--json")
    assert code == 0
    doc = json.loads(out)
    result = doc["result"]
    assert result["base_dim"] == {"exact": True, "value": 4}
    assert result["extension_dim"] == {"exact": True, "value": 8}
    assert len(result["simples"]) == 2
    first = result["simples"][0]
    assert first["trace"]["betti"][:3] == [4, 8, 12]
    assert first["trace"]["truncated_by"] == "steps-exhausted"
    assert first["estimate"] == {"kind": "finite", "degree": 2}
    assert result["global_estimate"] == {"kind": "finite", "degree": 2}


def test_trivext_gentle_input(tmp_path, capsys):
    path = write(tmp_path, "gentle.json", GENTLE_TWO_LOOP_DOC)
    code, out, _ = run(capsys, "trivext", path, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["base_dim"]["value"] == 8
    assert doc["result"]["extension_dim"]["value"] == 16


def test_trivext_dimension_cap_warning(tmp_path, capsys):
    path = write(tmp_path, "kron.json", KRONECKER_DOC)
    code, out, _ = run(capsys, "trivext", path, "--dim-cap", "30", "--json")
    assert code == 0
    doc = json.loads(out)
    assert any("dimension cap" in w for w in doc["warnings"])
    assert all(
        s["trace"]["truncated_by"] == "dimension-cap" for s in doc["result"]["simples"]
    )


def test_trivext_threads_env_is_deterministic(tmp_path, capsys, monkeypatch):
    path = write(tmp_path, "kron.json", KRONECKER_DOC)
    _, baseline, _ = run(capsys, "trivext", path, "--json")
    monkeypatch.setenv("QUIVERLAB_THREADS", "4")
    _, threaded, _ = run(capsys, "trivext", path, "--json")
    assert baseline == threaded


# --- entropy ----------------------------------------------------------------------

def test_entropy_zero_is_exact(tmp_path, capsys):
    path = write(tmp_path, "kron.json", KRONECKER_DOC)
    code, out, _ = run(capsys, "entropy", path, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["h0"] == {"exact": True, "value": "0"}
    assert doc["result"]["growth"] == {"kind": "polynomial", "degree": 1}
    assert len(doc["result"]["trace"]["value"]) == 60


def test_entropy_positive_is_tolerance_bounded(tmp_path, capsys):
    path = write(tmp_path, "kron3.json", KRONECKER3_DOC)
    code, out, _ = run(capsys, "entropy", path, "--json")
    assert code == 0
    doc = json.loads(out)
    h0 = doc["result"]["h0"]
    assert h0["exact"] is False
    assert abs(h0["value"] - 1.9248473) < 1e-4
    assert h0["tol"] == 1e-4
    assert doc["result"]["growth"] == {"kind": "exponential"}


def test_entropy_few_iterations_skips_growth(tmp_path, capsys):
    path = write(tmp_path, "kron.json", KRONECKER_DOC)
    code, out, _ = run(capsys, "entropy", path, "--iterations", "5", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["growth"] is None
    assert any("growth fit skipped" in w for w in doc["warnings"])


def test_entropy_cyclic_fails_with_hint(tmp_path, capsys):
    path = write(tmp_path, "cycle.json", CYCLE_DOC)
    code, _, err = run(capsys, "entropy", path)
    assert code == 1
    assert "classify" in err


# --- check-coxeter ------------------------------------------------------------------

def test_check_coxeter_passes_gentle_matrix(tmp_path, capsys):
    path = write(tmp_path, "phi.json", PHI_GENTLE_DOC)
    code, out, _ = run(capsys, "check-coxeter", path, "--json")
    assert code == 0
    doc = json.loads(out)
    report = doc["result"]["report"]
    assert report["cyclotomic"] is True
    assert report["passed"] is True
    assert (report["n"], report["l"]) == (1, 2)
    assert doc["result"]["size"] == {"exact": True, "value": [2, 2]}


def test_check_coxeter_bounds_warning(tmp_path, capsys):
    # A5 Coxeter matrix has witness n=3; n_max=2 leaves it unverified
    from quiverlab import cartan_path_algebra, coxeter_matrix
    from conftest import path_quiver

    phi = coxeter_matrix(cartan_path_algebra(path_quiver(5)))
    doc = json.dumps([[str(x) for x in row] for row in phi.entries()])
    path = write(tmp_path, "phi5.json", doc)
    code, out, _ = run(capsys, "check-coxeter", path, "--n-max", "2", "--json")
    assert code == 0
    parsed = json.loads(out)
    assert parsed["result"]["report"]["passed"] is None
    assert any("bounds" in w for w in parsed["warnings"])


def test_check_coxeter_rejects_numeric_entries(tmp_path, capsys):
    path = write(tmp_path, "phi.json", "[[1, 2], [3, 4]]")
    code, _, err = run(capsys, "check-coxeter", path)
    assert code == 1
    assert "error:" in err


def test_check_coxeter_rejects_singular(tmp_path, capsys):
    path = write(tmp_path, "phi.json", '[["1", "2"], ["2", "4"]]')
    code, _, err = run(capsys, "check-coxeter", path)
    assert code == 1


# --- parser level ---------------------------------------------------------------------

def test_unknown_command_exits_with_usage():
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2


def test_missing_required_flag_exits_with_usage():
    with pytest.raises(SystemExit) as info:
        main(["canonical"])
    assert info.value.code == 2
