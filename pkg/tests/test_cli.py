"""
Integration tests for the command-line front end: verbs, output and exit codes.
"""
import json
import subprocess
import sys
from pathlib import Path

import pytest

from binform_cli import main

ROOT = Path(__file__).parent.parent


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.integration
class TestPolyAndBuild:
    """poly and build verbs."""

    def test_poly_plain(self, capsys):
        code, out, _ = run(capsys, "poly", "--family", "B", "--degree", "2")
        assert code == 0
        assert out.strip() == "x^2 - x + 1/6"

    def test_poly_trivial(self, capsys):
        assert run(capsys, "poly", "--family", "T", "--degree", "0")[1].strip() == "1"

    def test_poly_latex(self, capsys):
        _, out, _ = run(capsys, "poly", "--family", "H", "--degree", "3", "--format", "latex")
        assert out.strip() == "x^{3} - 3 x"

    def test_poly_negative_degree(self, capsys):
        code, _, err = run(capsys, "poly", "--family", "B", "--degree", "-1")
        assert code == 2
        assert err.startswith("error [usage_error]")

    def test_poly_bad_family(self, capsys):
        code, _, err = run(capsys, "poly", "--family", "Q", "--degree", "1")
        assert code == 2
        assert "unknown Appell family" in err

    def test_build_json(self, capsys):
        code, out, _ = run(capsys, "build", "--construction", "hess", "--order", "2", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["construction"] == "hess"
        assert payload["polynomial"]["terms"][0] == {"coeff": "1", "powers": {"a0": 1, "a2": 1}}

    def test_build_reports_verdicts(self, capsys):
        code, out, err = run(capsys, "build", "--construction", "tr", "--order", "4")
        assert code == 0
        assert out.strip()
        assert "# printed: equal" in err


@pytest.mark.integration
class TestCheck:
    """check verb."""

    def test_invariant(self, capsys):
        code, out, _ = run(capsys, "check", "--expr", "a0*a2 - a1^2", "--order", "2")
        assert code == 0
        assert "semi-invariant: yes" in out
        assert "invariant: yes" in out
        assert "weight: 0" in out

    def test_not_semi_invariant(self, capsys):
        _, out, _ = run(capsys, "check", "--expr", "a1", "--order", "2")
        assert "semi-invariant: no" in out
        assert "D-image: a0" in out

    def test_expression_from_file(self, capsys, tmp_path):
        source = tmp_path / "w2.txt"
        source.write_text("-2*a1^2\n + a0*a1^2\n")
        _, out, _ = run(capsys, "check", "--expr", str(source), "--order", "2", "--format", "json")
        payload = json.loads(out)
        assert payload["semi_invariant"] is False
        assert payload["d_image"] == "2*a0^2*a1 - 4*a0*a1"

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "check", "--expr", "a0 +* a1", "--order", "2")
        assert code == 2
        assert "error [syntax_error]" in err
        assert "column 5" in err

    def test_index_beyond_order(self, capsys):
        code, _, err = run(capsys, "check", "--expr", "a3", "--order", "2")
        assert code == 2
        assert "index_out_of_range" in err


@pytest.mark.integration
class TestVerify:
    """verify verb and its exit codes."""

    def test_discr_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--construction", "discr", "--order", "3", "--assign", "a=B", "--expect", "1/16")
        assert code == 0
        assert out.strip() == "discr n=3 {a=B}: constant=yes norm=1/16 expected=1/16 PASS"

    def test_delta3_pass(self, capsys):
        code, _, _ = run(
            capsys, "verify", "--construction", "delta3", "--order", "2", "--assign", "b=B", "c=E", "d=H", "--expect", "1/12"
        )
        assert code == 0

    def test_hessian_pass(self, capsys):
        code, _, _ = run(capsys, "verify", "--construction", "hess", "--order", "2", "--assign", "a=E", "--expect", "-1/4")
        assert code == 0

    @pytest.mark.parametrize("family, expect", [("B", "-1/12"), ("H", "-1")])
    def test_negative_expectations(self, capsys, family, expect):
        code, out, _ = run(capsys, "verify", "--construction", "hess", "--order", "2", "--assign", f"a={family}", "--expect", expect)
        assert code == 0
        assert out.strip().endswith("PASS")

    def test_negative_decimal_reaches_the_rational_parser(self, capsys):
        code, _, err = run(capsys, "verify", "--construction", "hess", "--order", "2", "--assign", "a=E", "--expect", "-0.25")
        assert code == 2
        assert "error [domain_error]: not a rational literal" in err

    def test_negative_degree_is_a_value(self, capsys):
        code, _, err = run(capsys, "poly", "--family", "B", "--degree", "-3/2")
        assert code == 2
        assert "invalid int value" in err

    def test_mismatch_exit_code(self, capsys):
        code, out, _ = run(capsys, "verify", "--construction", "hess", "--order", "2", "--assign", "a=E", "--expect", "1/4")
        assert code == 1
        assert out.strip().endswith("FAIL")

    def test_min_order_rule(self, capsys):
        code, _, err = run(capsys, "verify", "--construction", "tr", "--order", "3", "--assign", "a=H")
        assert code == 2
        assert "error [range_error]" in err
        assert "min_order" in err

    def test_printed_W(self, capsys):
        code, out, _ = run(capsys, "verify", "--construction", "w", "--order", "2", "--assign", "a=B")
        assert code == 1
        assert "constant=no" in out
        assert "status: not-semi-invariant" in out

    def test_missing_binding(self, capsys):
        code, _, err = run(capsys, "verify", "--construction", "dv2", "--order", "2", "--assign", "a=B")
        assert code == 2
        assert "missing_binding" in err


@pytest.mark.integration
class TestScanConjectureBinomial:
    """scan, conjecture and binomial verbs."""

    def test_scan_to_stdout(self, capsys):
        code, out, _ = run(capsys, "scan", "--construction", "dv2", "--assign", "a=B", "b=E", "--from", "1", "--to", "4", "--out", "-")
        assert code == 0
        rows = json.loads(out)
        assert [row["norm"] for row in rows] == ["0", "-1/3", "0", "7/15"]
        assert rows[1]["assignment"] == {"a": "B", "b": "E"}

    def test_scan_to_file(self, capsys, tmp_path):
        target = tmp_path / "table.json"
        code, out, _ = run(capsys, "scan", "--construction", "dv", "--assign", "a=B", "--from", "1", "--to", "3", "--out", str(target))
        assert code == 0
        assert out == ""
        rows = json.loads(target.read_text())
        assert [row["norm"] for row in rows] == ["0", "-1/6", "0"]

    def test_scan_undefined_rows(self, capsys):
        code, out, _ = run(capsys, "scan", "--construction", "tr", "--assign", "a=H", "--from", "3", "--to", "4")
        assert code == 0
        rows = json.loads(out)
        assert rows[0]["status"] == "undefined"
        assert rows[1]["provenance"] == "computed"

    def test_scan_is_deterministic(self, capsys):
        argv = ("scan", "--construction", "dv2", "--assign", "a=B", "b=E", "--from", "1", "--to", "3")
        first = run(capsys, *argv)[1]
        second = run(capsys, *argv)[1]
        assert first == second

    def test_bad_jobs(self, capsys):
        code, _, err = run(capsys, "scan", "--construction", "dv", "--assign", "a=B", "--from", "1", "--to", "2", "--jobs", "0")
        assert code == 2
        assert "usage_error" in err

    def test_conjecture_match(self, capsys):
        code, out, _ = run(capsys, "conjecture", "--name", "hermite-discr", "--to", "4")
        assert code == 0
        assert "hermite-discr n=3: lhs=108 rhs=108 match" in out

    def test_conjecture_mismatch(self, capsys):
        code, out, _ = run(capsys, "conjecture", "--name", "be-dv", "--to", "4")
        assert code == 1
        assert "n=2: lhs=-1/3 rhs=7/15 MISMATCH" in out

    def test_conjecture_unknown(self, capsys):
        assert run(capsys, "conjecture", "--name", "nope", "--to", "4")[0] == 2

    def test_binomial(self, capsys):
        code, out, _ = run(capsys, "binomial", "--which", "ch4", "--from", "3", "--to", "4")
        assert code == 0
        assert "ch4 n=4: 0 zero" in out

    def test_binomial_printed_trbar2(self, capsys):
        code, out, _ = run(capsys, "binomial", "--which", "trbar2", "--from", "4", "--to", "4")
        assert code == 1
        assert "-1/15 NONZERO" in out


@pytest.mark.integration
def test_unknown_verb(capsys):
    """argparse failures share the exit code 2 path."""
    code, _, err = run(capsys, "frobnicate")
    assert code == 2
    assert "usage_error" in err


@pytest.mark.integration
def test_cache_dir_is_written(capsys, tmp_path, monkeypatch):
    """BINFORM_CACHE_DIR receives the grown family caches."""
    monkeypatch.setenv("BINFORM_CACHE_DIR", str(tmp_path))
    code, _, _ = run(capsys, "poly", "--family", "E", "--degree", "5")
    assert code == 0
    assert (tmp_path / "appell_E.json").exists()


@pytest.mark.integration
@pytest.mark.slow
def test_subprocess_entry_point(tmp_path):
    """The module runs as a script and keeps stdout clean of logs."""
    result = subprocess.run(
        [sys.executable, str(ROOT / "binform_cli.py"), "--log-level", "DEBUG", "poly", "--family", "B", "--degree", "2"],
        capture_output=True,
        text=True,
        cwd=tmp_path,
    )
    assert result.returncode == 0
    assert result.stdout.strip() == "x^2 - x + 1/6"
