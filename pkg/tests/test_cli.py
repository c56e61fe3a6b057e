import json

import numpy as np
import pytest

from korenblum.certifier import certificate_from_json
from korenblum.cli import SWEEP_HEADER, main
from korenblum.refuter import witness_from_json

CONST1 = '{"kind":"constant","level":1}'
STEP05 = '{"kind":"step","R":0.5}'


def run_cli(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    captured = capsys.readouterr()
    return exc.value.code, captured.out, captured.err


class TestNorm:
    def test_monomial_norm(self, capsys):
        code, out, _ = run_cli(
            capsys, "norm", "--poly", "0,1", "--p", "2", "--weight", CONST1
        )
        assert code == 0
        payload = json.loads(out)
        assert abs(payload["norm"] - np.sqrt(0.5)) <= 1e-9
        assert payload["weight"] == {"kind": "constant", "level": 1.0}

    def test_human_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "norm", "--poly", "0,1", "--p", "2", "--weight", CONST1,
            "--output", "human",
        )
        assert code == 0
        assert out.strip() == "0.707106781187"

    def test_poly_json_form(self, capsys):
        code, out, _ = run_cli(
            capsys, "norm", "--poly", '{"coeffs": [[0,0],[1,0]]}', "--p", "2",
            "--weight", CONST1,
        )
        assert code == 0
        assert abs(json.loads(out)["norm"] - np.sqrt(0.5)) <= 1e-9


class TestMeans:
    def test_monotone_profile(self, capsys):
        code, out, _ = run_cli(
            capsys, "means", "--poly", "1,1", "--p", "1", "--grid", "16"
        )
        assert code == 0
        payload = json.loads(out)
        values = payload["values"]
        assert len(values) == 16
        assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))

    def test_csv_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "means", "--poly", "0,0,1", "--p", "1", "--grid", "16",
            "--output", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "r,mean"
        assert len(lines) == 17


class TestCertify:
    def test_constant_weight(self, capsys):
        code, out, _ = run_cli(capsys, "certify", "--weight", CONST1)
        assert code == 0
        cert, w = certificate_from_json(json.loads(out))
        assert cert.margin > 0
        assert cert.c == pytest.approx(0.18682104186142803, rel=1e-12)

    def test_no_certificate_exit_code(self, capsys):
        spec = '{"kind":"table","r":[0.0, 1e-7, 2e-7],"w":[1.0, 1.0, 0.0]}'
        code, out, err = run_cli(capsys, "certify", "--weight", spec)
        assert code == 1
        assert "NoCertificate" in json.loads(out)["reason"]
        assert err.strip()


class TestRefute:
    def test_witness_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "refute", "--p", "0.5", "--c", "0.9", "--weight", CONST1
        )
        assert code == 0
        witness = witness_from_json(json.loads(out))
        assert witness.n == 5
        assert witness.gap > 1e-6

    def test_no_witness_exit_code(self, capsys):
        code, out, err = run_cli(
            capsys, "refute", "--p", "0.5", "--c", "0.2", "--weight", STEP05
        )
        assert code == 1
        assert json.loads(out)["found"] is False
        assert "ZeroNearOrigin" in err

    def test_forced_n(self, capsys):
        code, out, _ = run_cli(
            capsys, "refute", "--p", "0.5", "--c", "0.9", "--weight", CONST1,
            "--n", "7",
        )
        assert code == 0
        assert json.loads(out)["n"] == 7


class TestBound:
    def test_p2(self, capsys):
        code, out, _ = run_cli(capsys, "bound", "--p", "2", "--weight", CONST1)
        assert code == 0
        payload = json.loads(out)
        assert payload["c_star"] == pytest.approx(np.sqrt(0.5), abs=1e-9)
        assert payload["witness_c"] > payload["c_star"]


class TestVerify:
    def test_two_polys(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--poly", "0,0.5", "--poly", "0,1",
            "--p", "2", "--c", "0.5", "--weight", CONST1,
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["dominates"] is True
        assert payload["principle_holds"] is True

    def test_one_poly_rejected(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--poly", "0,1", "--p", "2", "--c", "0.5",
            "--weight", CONST1,
        )
        assert code == 2
        assert "two --poly" in err

    def test_random_sweep_no_violations(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--p", "2", "--c", "0.18", "--weight", CONST1,
            "--seed", "7", "--count", "8",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["violations"] == []
        assert payload["conclusive"] >= 1


class TestSweep:
    def test_csv_shape(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--p", "0.5,1,2", "--weight", CONST1
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == SWEEP_HEADER
        assert len(lines) == 4
        half, one, two = (line.split(",") for line in lines[1:])
        assert half[1] == "" and half[3] in ("true", "false") and half[4] == "ok"
        assert one[1] != "" and one[3] == "" and one[4] == "ok"
        assert two[1] == one[1]  # certified radius does not depend on p
        assert float(half[2]) == pytest.approx(0.64, abs=1e-9)

    def test_json_rows(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--p", "2", "--weight", CONST1, "--output", "json"
        )
        assert code == 0
        rows = json.loads(out)["rows"]
        assert rows[0]["c_star_upper"] == pytest.approx(np.sqrt(0.5), abs=1e-9)


class TestDeterminismAndErrors:
    def test_byte_identical_reports(self, capsys):
        args = ("verify", "--p", "2", "--c", "0.18", "--weight", CONST1,
                "--seed", "3", "--count", "5")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_bad_weight_json_exit_2(self, capsys):
        code, _, err = run_cli(
            capsys, "norm", "--poly", "0,1", "--p", "2", "--weight", "{broken"
        )
        assert code == 2
        assert err.strip()

    def test_missing_required_flag_exit_2(self, capsys):
        code, _, _ = run_cli(capsys, "refute", "--p", "0.5", "--weight", CONST1)
        assert code == 2

    def test_bad_poly_exit_2(self, capsys):
        code, _, _ = run_cli(
            capsys, "norm", "--poly", "1,zebra", "--p", "2", "--weight", CONST1
        )
        assert code == 2

    def test_weight_file_path(self, capsys, tmp_path):
        path = tmp_path / "weight.json"
        path.write_text(CONST1)
        code, out, _ = run_cli(
            capsys, "norm", "--poly", "0,1", "--p", "2", "--weight", str(path)
        )
        assert code == 0
        assert abs(json.loads(out)["norm"] - np.sqrt(0.5)) <= 1e-9

    def test_missing_weight_file_exit_2(self, capsys):
        code, _, err = run_cli(
            capsys, "norm", "--poly", "0,1", "--p", "2", "--weight", "/nope.json"
        )
        assert code == 2
        assert "not found" in err
