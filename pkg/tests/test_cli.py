import json

import pytest

from q2rep.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_small_range(capsys):
    code, out, _ = run(capsys, "verify", "--p", "1..2")
    assert code == 0
    assert "graded-jacobi" in out and "pass" in out


def test_verify_includes_degenerate_p1(capsys):
    code, out, _ = run(capsys, "verify", "--p", "1")
    assert code == 0


def test_malformed_range_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--p", "nonsense"])
    assert exc.value.code == 2


def test_bad_realization_choice_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["check-realization", "--which", "9"])
    assert exc.value.code == 2


def test_check_realization(capsys):
    for which in ("1", "2", "3"):
        code, out, _ = run(capsys, "check-realization", "--which", which, "--p", "1..4")
        assert code == 0
        assert "32/32" in out


def test_spectrum_moszkowski_example(capsys):
    code, out, _ = run(
        capsys, "spectrum", "--model", "moszkowski", "--p", "2", "--c", "0", "--V", "1"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["closed_form_match"] is True
    values = sorted(round(e["float"], 9) for e in payload["eigenvalues"])
    assert values == [0, 2, 2, 4]


def test_spectrum_jc_example(capsys):
    code, out, _ = run(
        capsys, "spectrum", "--model", "jc", "--p", "1", "--omega", "1", "--g", "1/10"
    )
    assert code == 0
    payload = json.loads(out)
    values = sorted(round(e["float"], 9) for e in payload["eigenvalues"])
    assert values == [0, 1.1]
    assert payload["closed_form_match"] is True


def test_spectrum_sphaleron_51(capsys):
    code, out, _ = run(
        capsys, "spectrum", "--model", "sphaleron", "--case", "51", "--p", "1", "--k2", "1/4"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["convention"] == "lambda = -eig(Delta)"
    values = sorted(round(e["float"], 9) for e in payload["eigenvalues"])
    assert values == [-1, 1]


def test_spectrum_moszkowski_degenerate_coupling(capsys):
    # V = 0 decouples the pairs; labels must still attach and match
    code, out, _ = run(
        capsys, "spectrum", "--model", "moszkowski", "--p", "2", "--c", "3/5", "--V", "0"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["closed_form_match"] is True
    values = sorted(round(e["float"], 9) for e in payload["eigenvalues"])
    assert values == [-0.6, 0, 0, 0.6]


def test_spectrum_sphaleron_needs_case(capsys):
    code, _, err = run(capsys, "spectrum", "--model", "sphaleron", "--p", "2")
    assert code == 3
    assert "case" in err


def test_constraint_violation_exit_code(capsys):
    code, _, err = run(
        capsys,
        "spectrum", "--model", "jc", "--p", "3",
        "--omega", "1", "--omega0", "1", "--g", "1/10",
    )
    assert code == 3
    assert "detuning" in err


def test_float_input_rejected():
    with pytest.raises(SystemExit) as exc:
        main(["spectrum", "--model", "moszkowski", "--p", "2", "--c", "0.5", "--V", "1"])
    assert exc.value.code == 2


def test_rep_export_shape(capsys):
    code, out, _ = run(
        capsys, "rep", "--p", "2", "--basis", "lambda_chi", "--generator", "b+"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["generator"] == "e10_0"
    assert len(payload["entries"]) == 4
    assert payload["entries"][1][0] == {"rat": "2", "irr": "0"}  # b+ Lam_0 = 2 Lam_1 at p=2


def test_sweep_lists_payloads(capsys):
    code, out, _ = run(
        capsys, "sweep", "--model", "moszkowski", "--p", "1..3", "--c", "1", "--V", "1/2"
    )
    assert code == 0
    payload = json.loads(out)
    assert [pl["p"] for pl in payload] == [1, 2, 3]


def test_output_is_byte_stable(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for path in (a, b):
        code, _, _ = run(
            capsys,
            "spectrum", "--model", "moszkowski", "--p", "3",
            "--c", "2/3", "--V", "1/7", "--out", str(path),
        )
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_csv_format(capsys):
    code, out, _ = run(
        capsys,
        "spectrum", "--model", "jc", "--p", "2", "--omega", "1", "--g", "1/3",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "model,p,params,block,label,exact,float"
    assert len(lines) == 1 + 4
