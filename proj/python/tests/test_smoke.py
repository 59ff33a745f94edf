import math
import os
import subprocess

import pytest

import genusone as g


def test_kernel_values():
    assert g.kernel_H(0j) == 0.0
    assert g.kernel_K1(1j, 0.0, 2.0) == pytest.approx(3.0 / (4.0 * math.pi), rel=1e-12)
    assert g.kernel_K2(1j, 2.0, 0.5 * math.pi) == pytest.approx(4.0 / (3.0 * math.pi), rel=1e-12)


def test_single_atom_canonical():
    mu = g.Measure([(2j, 1.0)])
    z = 0.5 + 0.25j
    expected = math.log(abs(1 - z / 2j)) + (z / 2j).real
    assert g.eval_canonical(mu, z) == pytest.approx(expected, abs=1e-13)
    assert mu.counting(3.0) == 1.0
    assert mu.genus_one


def test_json_round_trip():
    mu = g.Measure([(1 + 1j, 0.5), (-2j, 2.0)])
    back = g.Measure.from_json(mu.to_json())
    assert back.atoms == mu.atoms


def test_up_fixture_constant():
    up = g.UpFixture(1.5)
    assert up.c_p == pytest.approx(1.5 / math.pi * math.sin(0.75 * math.pi), rel=1e-15)
    assert up(1.0 + 0j) < 0.0


def test_tsuji_single_atom():
    u = g.Field.from_measure(g.Measure([(2j, 1.0)]))
    T, m = g.tsuji(u, 1.0)
    assert T >= m >= 0.0


def test_levin_identity():
    mu = g.Measure([(1 + 2j, 1.0), (-0.5 + 0.7j, 2.0)])
    lhs, rhs = g.levin(g.Field.from_measure(mu), mu, 3.0)
    assert lhs == pytest.approx(rhs, rel=1e-6)


def test_python_evaluator_field():
    u = g.Field("abs_re", lambda z: abs(z.real))
    assert g.max_modulus(u, 2.0) == pytest.approx(2.0, rel=1e-9)


def test_lorentzian_pair():
    with pytest.raises(g.DomainError):
        g.hilbert_pair("lorentzian")
    pair = g.hilbert_pair("lorentzian", tail_extension=True)
    i = len(pair["t"]) // 3
    x = pair["t"][i]
    assert pair["g"][i] == pytest.approx(-x / (1 + x * x), abs=1e-6)


def test_unknown_input():
    with pytest.raises(g.DomainError):
        g.hilbert_pair("no_such_input")


def test_suite_reports():
    reports = g.run_suite("carleman", fixtures=["atomic_00"])
    assert reports
    assert all(r["status"] == "pass" for r in reports)
    assert "carleman" in g.suite_names()


@pytest.mark.skipif("GENUSONE_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes(tmp_path):
    cli = os.environ["GENUSONE_CLI"]
    ok = subprocess.run([cli, "verify", "--suite", "carleman", "--fixture", "atomic_00",
                         "--out", str(tmp_path)], capture_output=True, text=True)
    assert ok.returncode == 0, ok.stderr
    assert (tmp_path / "summary.csv").exists()
    bad = subprocess.run([cli, "verify", "--suite", "nope"], capture_output=True, text=True)
    assert bad.returncode == 2
