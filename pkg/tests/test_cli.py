"""Command-line surface: documents on stdout, diagnostics on stderr, and the
0/2/3 exit-code contract."""

import json
from fractions import Fraction as F
from pathlib import Path

import pytest
from click.testing import CliRunner

from ybe_forge.cli import main
from ybe_forge.document import document_from_json

GOLDENS = Path(__file__).parent / "goldens"


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(main, list(args))


class TestJmatrix:
    def test_golden_1_1(self, runner):
        res = run(runner, "jmatrix", "1", "1")
        assert res.exit_code == 0
        assert res.stdout.splitlines()[:2] == ["0 1", "0 0"]
        assert json.loads(res.stdout.splitlines()[2])["matrix"] == [[0, 1], [0, 0]]

    def test_golden_3_2(self, runner):
        res = run(runner, "jmatrix", "3", "2", "--format", "json")
        assert res.exit_code == 0
        golden = json.loads((GOLDENS / "jmatrix_3_2.json").read_text())
        assert json.loads(res.stdout) == golden

    def test_non_coprime_exit_3(self, runner):
        res = run(runner, "jmatrix", "2", "2")
        assert res.exit_code == 3
        assert "not coprime" in res.stderr


class TestRational:
    def test_document_pole_part(self, runner):
        res = run(runner, "rational", "2", "1", "--x", "0", "--y", "1")
        assert res.exit_code == 0
        doc = document_from_json(json.loads(res.stdout))
        from ybe_forge.exact import ONE
        from ybe_forge.lie import casimir

        tail = doc.to_tensor().sub(casimir(2).scale(ONE / (F(1) - F(0))))
        # the tail is the polynomial part: re-evaluating the certificate
        from ybe_forge.cuspidal import r_ansatz

        assert tail == r_ansatz(1, 1).eval_tail(F(0), F(1))

    def test_round_trip(self, runner):
        res = run(runner, "rational", "3", "1", "--x", "1/3", "--y", "2")
        doc = document_from_json(json.loads(res.stdout))
        from ybe_forge.cuspidal import assemble_r

        assert doc.to_tensor() == assemble_r(2, 1, F(1, 3), F(2))

    def test_latex_format(self, runner):
        res = run(runner, "rational", "2", "1", "--x", "0", "--y", "1", "--format", "latex")
        assert res.exit_code == 0
        assert "\\otimes" in res.stdout

    def test_bad_points_exit_3(self, runner):
        assert run(runner, "rational", "2", "1", "--x", "1", "--y", "1").exit_code == 3
        assert run(runner, "rational", "2", "1", "--x", "a", "--y", "1").exit_code == 3
        assert run(runner, "rational", "2", "2", "--x", "0", "--y", "1").exit_code == 3


class TestStolin:
    def test_default_matches_reference_n2(self, runner):
        res = run(runner, "stolin", "2", "1", "--x", "0", "--y", "1")
        doc = document_from_json(json.loads(res.stdout))
        golden = json.loads((GOLDENS / "stolin_n2_e1_x0_y1.json").read_text())
        assert doc == document_from_json(golden)

    def test_neg_j_equals_gauged_rational(self, runner):
        res1 = run(runner, "stolin", "3", "2", "--k-matrix", "neg-j", "--x", "1/3", "--y", "2")
        res2 = run(runner, "rational", "3", "1", "--x", "1/3", "--y", "2")
        t1 = document_from_json(json.loads(res1.stdout)).to_tensor()
        t2 = document_from_json(json.loads(res2.stdout)).to_tensor()
        from ybe_forge.lie import apply_gauge, transpose_negate_map

        phi = transpose_negate_map(3)
        assert apply_gauge(phi, phi, t2) == t1

    def test_degenerate_file_exit_2(self, runner, tmp_path):
        bad = tmp_path / "k.json"
        bad.write_text(json.dumps([[0, 0], [0, 0]]))
        res = run(runner, "stolin", "2", "1", "--k-matrix", str(bad), "--x", "0", "--y", "1")
        assert res.exit_code == 2
        assert "degenerate" in res.stderr

    def test_file_k_matrix(self, runner, tmp_path):
        good = tmp_path / "k.json"
        good.write_text(json.dumps([["0", "1"], ["0", "0"]]))
        res = run(runner, "stolin", "2", "1", "--k-matrix", str(good), "--x", "0", "--y", "1")
        assert res.exit_code == 0


class TestElliptic:
    def test_document_provenance(self, runner):
        res = run(runner, "elliptic", "2", "1", "--tau", "0.3+1i", "--x", "0.1", "--y", "0.2")
        assert res.exit_code == 0
        payload = json.loads(res.stdout)
        assert payload["provenance"]["difference_convention"] == "y-x"
        assert payload["scalar"] == "complex"
        assert len(payload["terms"]) > 0

    def test_lattice_point_exit_2(self, runner):
        res = run(runner, "elliptic", "2", "1", "--tau", "1i", "--x", "0.1", "--y", "0.1")
        assert res.exit_code == 2
        assert "pole" in res.stderr

    def test_terms_drift(self, runner):
        r60 = run(runner, "elliptic", "2", "1", "--tau", "1i", "--x", "0.1", "--y", "0.2",
                  "--terms", "60")
        r120 = run(runner, "elliptic", "2", "1", "--tau", "1i", "--x", "0.1", "--y", "0.2",
                   "--terms", "120")
        t60 = document_from_json(json.loads(r60.stdout)).to_tensor()
        t120 = document_from_json(json.loads(r120.stdout)).to_tensor()
        assert t60.sub(t120).norm() < 1e-12

    def test_bad_tau_exit_3(self, runner):
        res = run(runner, "elliptic", "2", "1", "--tau", "0.3-1i", "--x", "0.1", "--y", "0.2")
        assert res.exit_code == 3


class TestVerify:
    def test_zoo_suite_passes(self, runner):
        res = run(runner, "verify", "--suite", "zoo")
        assert res.exit_code == 0
        assert "all checks passed" in res.stdout

    def test_injected_sign_flip_exit_2(self, runner):
        res = run(runner, "verify", "--suite", "zoo", "--inject-sign-flip")
        assert res.exit_code == 2
        assert "FAIL" in res.stdout

    def test_json_format(self, runner):
        res = run(runner, "verify", "--suite", "zoo", "--format", "json")
        payload = json.loads(res.stdout)
        assert payload["passed"] is True

    def test_bad_suite_exit(self, runner):
        res = run(runner, "verify", "--suite", "bogus")
        assert res.exit_code != 0

    def test_forge_threads_env(self, runner, monkeypatch):
        monkeypatch.setenv("FORGE_THREADS", "2")
        res = run(runner, "verify", "--suite", "zoo")
        assert res.exit_code == 0
