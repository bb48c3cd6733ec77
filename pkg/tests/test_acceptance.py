"""Acceptance gate: one test and one printed pass/fail line per criterion.

Criteria 1-12 run the in-process suite once (shared fixture); criterion 13
invokes the command-line runner twice and compares the report bytes.
"""

import subprocess
import sys

import pytest

from zetaline.verify import run_suite


@pytest.fixture(scope="module")
def fast_report():
    return run_suite("fast", workers=2)


def _criterion(fast_report, cid):
    entry = next(c for c in fast_report["criteria"] if c["id"] == cid)
    verdict = "PASS" if entry["passed"] else "FAIL"
    print(f"criterion {cid:2d} [{entry['name']}]: {verdict} "
          f"({entry['requirement']})")
    return entry


def test_criterion_01_factor_identities(fast_report):
    e = _criterion(fast_report, 1)
    assert e["line_modulus_max_err"] <= 1e-9
    assert e["reflection_max_err"] <= 1e-8


def test_criterion_02_two_path_agreement(fast_report):
    e = _criterion(fast_report, 2)
    assert e["max_abs_diff"] <= 1e-5


def test_criterion_03_first_zero_and_count(fast_report):
    e = _criterion(fast_report, 3)
    assert abs(e["gamma1"] - 14.134725) <= 1e-5
    assert e["count_100"] == 29


def test_criterion_04_crossing_counts(fast_report):
    e = _criterion(fast_report, 4)
    assert all(abs(v) <= 2.0 for v in e["deviations"].values())


def test_criterion_05_first_moment(fast_report):
    e = _criterion(fast_report, 5)
    assert 0.95 <= e["ratio_phi0"] <= 1.05
    assert e["imag_fraction_phi0"] <= 0.05
    assert e["complex_ratio_offset_pi4"] <= 0.05


def test_criterion_06_mean_values(fast_report):
    e = _criterion(fast_report, 6)
    assert abs(e["mean_phi0"][0] - 1.0) <= 0.1
    assert abs(e["mean_phi0"][1]) <= 0.1
    assert abs(e["mean_pi4"][0] - 0.5) <= 0.1
    assert abs(e["mean_pi4"][1] - 0.5) <= 0.1
    assert e["abs_mean_pi2"] <= 0.05


def test_criterion_07_second_moment(fast_report):
    e = _criterion(fast_report, 7)
    assert all(0.95 <= v <= 1.05 for v in e["ratios"].values())


def test_criterion_08_gram_law(fast_report):
    e = _criterion(fast_report, 8)
    assert e["first_violation"] == 126
    assert e["proportion"] > 0.0
    assert e["all_zeta_negative"] is True


def test_criterion_09_gram_sums(fast_report):
    e = _criterion(fast_report, 9)
    assert 0.95 <= e["ratios"]["sum_z_over_2n"] <= 1.05
    assert abs(e["ratios"]["sum_pair_over_titchmarsh"] - 1.0) <= 0.25
    assert e["ratios"]["sum_z4_over_n_log_n_sq"] >= 0.5
    assert e["cauchy_schwarz"] is True


def test_criterion_10_large_values(fast_report):
    e = _criterion(fast_report, 10)
    assert e["hits_1e3"] > 0
    assert e["hits_1e4"] > 0
    assert e["positive_pi2"] > 0 and e["negative_pi2"] > 0


def test_criterion_11_nonzero_floor(fast_report):
    e = _criterion(fast_report, 11)
    for r in e["results"].values():
        assert r["count"] >= r["bound"]


def test_criterion_12_mean_of_means(fast_report):
    e = _criterion(fast_report, 12)
    value = complex(e["value"][0], e["value"][1])
    assert abs(value - 0.5) <= 0.05


def test_criterion_13_determinism(fast_report, tmp_path):
    e = _criterion(fast_report, 13)
    assert e["enumeration_identical"] and e["chunked_sum_identical"]
    out1, out8 = tmp_path / "r1.json", tmp_path / "r8.json"
    for out, workers in ((out1, "1"), (out8, "8")):
        proc = subprocess.run(
            [sys.executable, "-m", "zetaline", "verify", "--suite", "fast",
             "--out", str(out), "--workers", workers],
            capture_output=True, text=True, timeout=600)
        assert proc.returncode == 0, proc.stderr
    assert out1.read_bytes() == out8.read_bytes()
