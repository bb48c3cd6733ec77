"""Acceptance suite: each check compares a measured quantity to its target.

The report is a plain JSON-serializable dict with no timing or host
information, so two runs with different worker counts serialize to
byte-identical files.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .special import TWO_PI, delta, theta
from .zeta import zeta_em, z_rs_values
from .crossings import count_crossings, enumerate_crossings
from .zeros import gram_law_audit, gram_points, scan_zeros, _z_many
from .moments import (
    EULER_MASCHERONI,
    chunked_sum,
    gram_sums,
    large_value_search,
    mean_of_means,
    moment_report,
    nonzero_crossing_bound,
)

_SEED = 20240611
_PI = math.pi


def _check_identities(workers: int) -> dict:
    rng = np.random.default_rng(_SEED)
    t = rng.uniform(1.0, 1e6, size=1000)
    worst_line = max(abs(abs(delta(0.5 + 1j * tv)) - 1.0) for tv in t)
    sigma = rng.uniform(-4.5, 5.5, size=1000)
    im = rng.uniform(1.0, 60.0, size=1000)
    worst_pair = max(abs(delta(complex(a, b)) * delta(complex(1.0 - a, -b)) - 1.0)
                     for a, b in zip(sigma, im))
    return {
        "id": 1, "name": "factor_identities",
        "line_modulus_max_err": worst_line,
        "reflection_max_err": worst_pair,
        "passed": worst_line <= 1e-9 and worst_pair <= 1e-8,
        "requirement": "| |D(1/2+it)|-1 | <= 1e-9; |D(s)D(1-s)-1| <= 1e-8",
    }


def _check_oracle(workers: int) -> dict:
    t = np.linspace(30.0, 5e4, 500)
    z_prod = z_rs_values(t)
    worst = 0.0
    for tv, zp in zip(t, z_prod):
        z_ref = (cmath.exp(1j * theta(float(tv)).theta)
                 * zeta_em(0.5 + 1j * float(tv))).real
        worst = max(worst, abs(float(zp) - z_ref))
    return {
        "id": 2, "name": "two_path_agreement",
        "max_abs_diff": worst,
        "passed": worst <= 1e-5,
        "requirement": "|Z_rs - Z_em| <= 1e-5 on 500 grid points in [30, 5e4]",
    }


def _check_first_zero(workers: int) -> dict:
    scan = scan_zeros(100.0, workers=workers)
    gamma1 = scan.zeros[0].gamma
    return {
        "id": 3, "name": "first_zero_and_count",
        "gamma1": gamma1,
        "count_100": len(scan.zeros),
        "passed": abs(gamma1 - 14.134725) <= 1e-5 and len(scan.zeros) == 29,
        "requirement": "gamma_1 = 14.134725 +- 1e-5; 29 zeros below 100",
    }


def _check_counts(workers: int) -> dict:
    devs = {}
    for phi in (0.0, _PI / 4.0, _PI / 2.0):
        rep = count_crossings(phi, 1e4)
        devs[f"phi_{phi:.6f}"] = rep.deviation
    worst = max(abs(v) for v in devs.values())
    return {
        "id": 4, "name": "crossing_count_main_term",
        "deviations": devs,
        "passed": worst <= 2.0,
        "requirement": "|count - (T/2pi)log(T/2pi e)| <= 2 at T = 1e4",
    }


def _check_first_moment(workers: int) -> dict:
    r0 = moment_report(0.0, 1e4, workers)
    ratio0 = r0.sum1.real / r0.main1.real
    im_frac0 = abs(r0.sum1.imag) / abs(r0.main1)
    r1 = moment_report(_PI / 4.0, 1e4, workers)
    off1 = abs(r1.sum1 / r1.main1 - 1.0)
    ok = (0.95 <= ratio0 <= 1.05) and im_frac0 <= 0.05 and off1 <= 0.05
    return {
        "id": 5, "name": "first_moment",
        "ratio_phi0": ratio0, "imag_fraction_phi0": im_frac0,
        "complex_ratio_offset_pi4": off1,
        "passed": ok,
        "requirement": "sum1/main1 in [0.95, 1.05] (phi=0, T=1e4), "
                       "complex ratio within 0.05 of 1 at phi=pi/4",
    }


def _check_means(workers: int) -> dict:
    m0 = moment_report(0.0, 1e4, workers).mean
    m1 = moment_report(_PI / 4.0, 1e4, workers).mean
    m2 = moment_report(_PI / 2.0, 1e4, workers).mean
    ok = (abs(m0 - 1.0) <= 0.1
          and abs(m1.real - 0.5) <= 0.1 and abs(m1.imag - 0.5) <= 0.1
          and abs(m2) <= 0.05)
    return {
        "id": 6, "name": "mean_values",
        "mean_phi0": [m0.real, m0.imag],
        "mean_pi4": [m1.real, m1.imag],
        "abs_mean_pi2": abs(m2),
        "passed": ok,
        "requirement": "means near 1, (1/2, 1/2) and 0 at T = 1e4",
    }


def _check_second_moment(workers: int) -> dict:
    ratios = {}
    for phi in (0.0, _PI / 2.0):
        r = moment_report(phi, 1e4, workers)
        ratios[f"phi_{phi:.6f}"] = r.sum2 / r.main2
    ok = all(0.95 <= v <= 1.05 for v in ratios.values())
    return {
        "id": 7, "name": "second_moment",
        "ratios": ratios,
        "passed": ok,
        "requirement": "sum2/main2 in [0.95, 1.05] for phi in {0, pi/2}, T = 1e4",
    }


def _check_gram_law(workers: int) -> dict:
    audit = gram_law_audit(10000)
    t = gram_points(10000)
    z = _z_many(t[np.asarray(audit.violations, dtype=int)]) if audit.violations else np.array([])
    signs = np.where(np.asarray(audit.violations, dtype=int) % 2 == 0, 1.0, -1.0)
    zeta_neg = bool(np.all(signs * z < 0.0)) if len(z) else False
    ok = (len(audit.violations) > 0 and audit.violations[0] == 126
          and audit.proportion > 0.0 and zeta_neg)
    return {
        "id": 8, "name": "gram_law_violations",
        "first_violation": audit.violations[0] if audit.violations else None,
        "proportion": audit.proportion,
        "all_zeta_negative": zeta_neg,
        "passed": ok,
        "requirement": "first violation at n = 126; positive proportion; "
                       "zeta < 0 at each violation",
    }


def _check_gram_sums(workers: int) -> dict:
    r = gram_sums(10000, workers)
    cs_ok = r.sum_z2 ** 2 <= r.sum_z4 * r.N
    ok = (0.95 <= r.ratios["sum_z_over_2n"] <= 1.05
          and r.sum_pair < 0.0
          and abs(r.ratios["sum_pair_over_titchmarsh"] - 1.0) <= 0.25
          and r.ratios["sum_z4_over_n_log_n_sq"] >= 0.5
          and cs_ok)
    return {
        "id": 9, "name": "gram_point_sums",
        "ratios": r.ratios,
        "cauchy_schwarz": cs_ok,
        "passed": ok,
        "requirement": "sum_z/(2N) in [0.95, 1.05]; pair sum within 25% of "
                       "-2(c+1)N; fourth-moment ratio >= 0.5; CS inequality",
    }


def _check_large_values(workers: int) -> dict:
    n3 = len(large_value_search(0.0, 1e3, workers))
    n4 = len(large_value_search(0.0, 1e4, workers))
    vals = large_value_search(_PI / 2.0, 1e4, workers)
    pos = sum(1 for _, v in vals if v > 0.0)
    neg = sum(1 for _, v in vals if v < 0.0)
    ok = n3 > 0 and n4 > 0 and pos > 0 and neg > 0
    return {
        "id": 10, "name": "large_directed_values",
        "hits_1e3": n3, "hits_1e4": n4,
        "positive_pi2": pos, "negative_pi2": neg,
        "passed": ok,
        "requirement": "directed value >= sqrt(log t) occurs in (T, 2T]; "
                       "both signs at phi = pi/2",
    }


def _check_nonzero_bound(workers: int) -> dict:
    results = {}
    ok = True
    for phi in (0.0, _PI / 3.0):
        b = nonzero_crossing_bound(phi, 1e4, workers)
        results[f"phi_{phi:.6f}"] = {"count": b.count, "bound": b.bound}
        ok = ok and b.satisfied
    return {
        "id": 11, "name": "nonzero_crossing_floor",
        "results": results,
        "passed": ok,
        "requirement": "nonzero crossings up to T >= (2 cos^2 phi / pi) T",
    }


def _check_mean_of_means(workers: int) -> dict:
    m = mean_of_means(1e4, 16, workers)
    ok = abs(m - 0.5) <= 0.05
    return {
        "id": 12, "name": "mean_of_means",
        "value": [m.real, m.imag],
        "passed": ok,
        "requirement": "grid-16 average of line means within 0.05 of 1/2",
    }


def _check_determinism(workers: int) -> dict:
    points_a = enumerate_crossings(0.0, 2000.0, workers=1)
    points_b = enumerate_crossings(0.0, 2000.0, workers=8)
    same_points = points_a == points_b
    values = np.array([p.directed_value for p in points_a])
    same_sum = chunked_sum(values, 1) == chunked_sum(values, 8)
    return {
        "id": 13, "name": "worker_determinism",
        "enumeration_identical": same_points,
        "chunked_sum_identical": same_sum,
        "passed": same_points and same_sum,
        "requirement": "results bit-identical for 1 and 8 workers",
    }


def _check_high_t_moments(workers: int) -> dict:
    r = moment_report(0.0, 1e5, workers)
    ok = r.rel_dev1 is not None and r.rel_dev1 <= 0.05 and r.rel_dev2 <= 0.05
    return {
        "id": 14, "name": "moments_at_1e5",
        "rel_dev1": r.rel_dev1, "rel_dev2": r.rel_dev2,
        "passed": ok,
        "requirement": "relative deviations <= 0.05 at T = 1e5",
    }


def _check_trend(workers: int) -> dict:
    devs = {}
    for T in (1e3, 1e4, 1e5):
        devs[f"T_{int(T)}"] = moment_report(0.0, T, workers).rel_dev1
    ok = devs["T_1000"] > devs["T_10000"] > devs["T_100000"]
    return {
        "id": 15, "name": "deviation_trend",
        "rel_dev1": devs,
        "passed": ok,
        "requirement": "first-moment relative deviation shrinks with T",
    }


_FAST = [
    _check_identities, _check_oracle, _check_first_zero, _check_counts,
    _check_first_moment, _check_means, _check_second_moment,
    _check_gram_law, _check_gram_sums, _check_large_values,
    _check_nonzero_bound, _check_mean_of_means, _check_determinism,
]
_FULL_EXTRA = [_check_high_t_moments, _check_trend]

SUITES = {"fast": _FAST, "full": _FAST + _FULL_EXTRA}


def run_suite(suite: str, workers: int = 1) -> dict:
    """Run all checks in the named suite; returns the JSON-ready report."""
    from . import __version__
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    criteria = [check(workers) for check in SUITES[suite]]
    return {
        "suite": suite,
        "code_version": __version__,
        "criteria": criteria,
        "passed": all(c["passed"] for c in criteria),
    }
