"""CLI plumbing: exit codes, determinism, canonical echoes, formats."""

import io
import json

import pytest

from redix import parse_ideal_text, render_ideal_text
from redix.cli import main
from redix.selftest import SelftestReport, SuiteResult

IDEAL = "ring: x, y\nideal: x^2, x*y, y^3"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decompose_human(capsys):
    code, out, err = run(capsys, "decompose", IDEAL)
    assert code == 0
    assert "ir = 2" in out
    assert "(x, y^3)" in out and "(x^2, y)" in out
    assert "verdict: pass" in out
    assert err == ""


def test_decompose_json_round_trip(capsys):
    code, out, _ = run(capsys, "decompose", IDEAL, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["version"] == "0.1.0"
    assert doc["command"] == "decompose"
    assert doc["timing"] is None
    echoed = doc["inputs"]["ideal"]
    again = parse_ideal_text(echoed)
    assert render_ideal_text(again) == echoed
    assert doc["results"]["ir"] == 2
    assert doc["results"]["verdict"] is True


def test_reports_are_byte_identical(capsys):
    _, first, _ = run(capsys, "decompose", IDEAL, "--format", "json", "--seed", "9")
    _, second, _ = run(capsys, "decompose", IDEAL, "--format", "json", "--seed", "9")
    assert first == second


def test_timing_flag_adds_elapsed(capsys):
    _, out, _ = run(capsys, "decompose", IDEAL, "--format", "json", "--timing")
    assert json.loads(out)["timing"] is not None


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(IDEAL))
    code, out, _ = run(capsys, "decompose", "-")
    assert code == 0 and "ir = 2" in out


def test_unit_ideal_is_input_error(capsys):
    code, out, err = run(capsys, "decompose", "ideal: 1")
    assert code == 2
    assert "input error" in err


def test_parse_error_position(capsys):
    code, _, err = run(capsys, "decompose", "ideal: x^^2")
    assert code == 2
    assert "column" in err


def test_dual_infinite_colength(capsys):
    code, _, err = run(capsys, "dual", "ring: x, y\nideal: x^2")
    assert code == 2
    assert "colength" in err


def test_dual_grid_and_indices(capsys):
    code, out, _ = run(capsys, "dual", IDEAL)
    assert code == 0
    assert "ir' = 2" in out
    assert "staircase grid" in out
    assert "min cover: 2" in out


def test_basechange_extend(capsys):
    code, out, _ = run(capsys, "basechange", "ideal: x^2, x*y", "extend:1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["ir_before"] == 2
    assert doc["results"]["ir_after_direct"] == 2
    assert doc["results"]["verdict"] is True
    assert doc["inputs"]["change"] == "extend:1"


def test_basechange_invert(capsys):
    code, out, _ = run(capsys, "basechange", "ideal: x^2, x*y", "invert:y", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["results"]["ir_before"] == 2
    assert doc["results"]["ir_after_direct"] == 1


def test_basechange_field(capsys):
    code, out, _ = run(
        capsys, "basechange", "f: x^2+x+1 over GF(2)", "field:->GF(4)", "--format", "json"
    )
    doc = json.loads(out)
    assert code == 0
    assert doc["results"]["ir_before"] == 1
    assert doc["results"]["ir_after_direct"] == 2
    assert doc["inputs"]["polynomial"] == "f: x^2+x+1 over GF(2)"


def test_basechange_field_mismatch(capsys):
    code, _, err = run(
        capsys, "basechange", "f: x^2+x+1 over GF(3)", "field:GF(2)->GF(4)"
    )
    assert code == 2


def test_basechange_unknown_variable(capsys):
    code, _, err = run(capsys, "basechange", "ideal: x^2", "invert:q")
    assert code == 2
    assert "q" in err


def test_abelian_report(capsys):
    code, out, _ = run(capsys, "abelian", "group: Z/4 + Z/9", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["results"]["attached_primes"] == [2, 3]
    assert doc["results"]["ir_prime_formula"] == 2
    assert doc["results"]["bruteforce"]["index"] == 2
    assert doc["results"]["verdict"] is True
    assert doc["inputs"]["group"] == "group: Z/4 + Z/9"


def test_abelian_order_cap(capsys):
    code, _, err = run(capsys, "abelian", "group: Z/128")
    assert code == 3
    assert "size cap" in err


def test_abelian_max_order_skips_bruteforce(capsys):
    code, out, _ = run(
        capsys, "abelian", "group: Z/32 + Z/2", "--max-order", "16", "--format", "json"
    )
    doc = json.loads(out)
    assert code == 0
    assert doc["results"]["bruteforce"] is None
    assert doc["results"]["ir_prime_formula"] == 2


def test_abelian_max_order_ceiling(capsys):
    code, _, err = run(capsys, "abelian", "group: Z/4", "--max-order", "100")
    assert code == 2


def test_selftest_scope(capsys):
    code, out, _ = run(capsys, "selftest", "--scope", "univariate", "--seed", "1")
    assert code == 0
    assert "factorization-soundness" in out
    assert "documented, untested" in out.lower()


def test_selftest_unknown_scope(capsys):
    code, _, err = run(capsys, "selftest", "--scope", "nonsense")
    assert code == 2


def test_selftest_failure_exit_code(capsys, monkeypatch):
    failing = SelftestReport(
        scope="all",
        seed=0,
        results=(
            SuiteResult(
                name="stub",
                scope="monomial",
                mode="random",
                law="stub law",
                checks=1,
                failure_count=1,
                failure_samples=("boom",),
            ),
        ),
        documented_untested=(),
    )
    monkeypatch.setattr("redix.cli.run_selftest", lambda scope, seed: failing)
    code, out, err = run(capsys, "selftest")
    assert code == 1
    assert "FAIL" in out


def test_human_output_echoes_canonical_input(capsys):
    _, out, _ = run(capsys, "decompose", "ideal: y^3, x^2, x*y")
    assert "ring: x, y" in out
    assert "ideal: x^2, x*y, y^3" in out
