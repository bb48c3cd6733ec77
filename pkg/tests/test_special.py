"""Log-gamma, the functional-equation factor and the phase function.

Expected values were computed with mpmath at 30 decimal digits and
frozen here; the library itself never calls mpmath.
"""

import cmath
import math

import numpy as np
import pytest

from zetaline.errors import DomainError, PoleError, RangeOverflowError
from zetaline.special import (
    delta,
    delta_asymptotic,
    digamma,
    log_delta,
    log_delta_derivative,
    log_gamma,
    theta,
    theta_derivative,
    theta_values,
)

LOGGAMMA_QUARTER_10I = complex(-15.364592760295240141, 12.634193666938485786)
DIGAMMA_QUARTER_10I = complex(2.302480880694233774, 1.5958120010007441049)
LOG_DELTA_23_14I = complex(-0.1334985229366207159, -2.7162954437950575694)
THETA_100 = 87.972165231787219625
THETA_10 = -3.0670743962898952917
THETA_50 = 26.461366070161409647
THETA_D_50 = 1.037064635592610552
GRAM_T0 = 17.845599540410860817


class TestLogGamma:
    def test_frozen_value(self):
        got = log_gamma(0.25 + 10j)
        assert abs(got - LOGGAMMA_QUARTER_10I) < 1e-11

    def test_matches_lgamma_on_positive_reals(self):
        for x in (0.1, 0.5, 1.0, 3.7, 25.0, 171.5):
            assert math.isclose(log_gamma(complex(x, 0.0)).real,
                                math.lgamma(x), rel_tol=1e-12, abs_tol=1e-12)
            assert log_gamma(complex(x, 0.0)).imag == pytest.approx(0.0, abs=1e-12)

    def test_branch_continuous_along_vertical_line(self):
        # the unwrapped imaginary part must not jump by ~2 pi between
        # adjacent heights
        ts = np.linspace(0.5, 200.0, 4000)
        vals = np.array([log_gamma(0.25 + 1j * t).imag for t in ts])
        assert np.max(np.abs(np.diff(vals))) < 0.5

    def test_recurrence(self, rng):
        for _ in range(50):
            s = complex(rng.uniform(-5, 5), rng.uniform(0.5, 50))
            lhs = log_gamma(s + 1.0)
            rhs = log_gamma(s) + cmath.log(s)
            assert abs(lhs - rhs) < 1e-10 * max(1.0, abs(lhs))

    def test_pole(self):
        with pytest.raises(PoleError):
            log_gamma(0.0 + 0.0j)
        with pytest.raises(PoleError):
            log_gamma(-3.0 + 0.0j)


class TestDigamma:
    def test_frozen_value(self):
        assert abs(digamma(0.25 + 10j) - DIGAMMA_QUARTER_10I) < 1e-11

    def test_is_derivative_of_log_gamma(self, rng):
        h = 1e-5
        for _ in range(20):
            s = complex(rng.uniform(0.5, 5), rng.uniform(1, 30))
            fd = (log_gamma(s + h) - log_gamma(s - h)) / (2 * h)
            assert abs(digamma(s) - fd) < 1e-7


class TestDelta:
    def test_frozen_log_value(self):
        # the unwrapped branch may differ from the principal log by 2 pi i
        got = log_delta(2.0 / 3.0 + 14j)
        assert got.real == pytest.approx(LOG_DELTA_23_14I.real, abs=1e-11)
        diff = (got.imag - LOG_DELTA_23_14I.imag) / (2.0 * math.pi)
        assert abs(diff - round(diff)) < 1e-11

    def test_unit_modulus_on_critical_line(self, rng):
        t = rng.uniform(1.0, 1e6, size=1000)
        worst = max(abs(abs(delta(0.5 + 1j * tv)) - 1.0) for tv in t)
        assert worst <= 1e-9

    def test_reflection_identity(self, rng):
        sigma = rng.uniform(-4.5, 5.5, size=1000)
        im = rng.uniform(1.0, 60.0, size=1000)
        worst = max(abs(delta(complex(a, b)) * delta(complex(1 - a, -b)) - 1.0)
                    for a, b in zip(sigma, im))
        assert worst <= 1e-8

    def test_equals_phase_exponential(self, rng):
        # on the critical line the factor is exp(-2 i theta(t))
        for t in rng.uniform(1.0, 1e5, size=500):
            lhs = delta(0.5 + 1j * t)
            rhs = cmath.exp(-2j * theta(float(t)).theta)
            assert abs(lhs - rhs) <= 1e-8

    def test_asymptotic_form_agrees(self, rng):
        for t in rng.uniform(50.0, 1e5, size=100):
            s = complex(rng.uniform(0.2, 0.8), t)
            exact = delta(s)
            approx = delta_asymptotic(s)
            assert abs(approx / exact - 1.0) < 2.0 / t

    def test_conjugation(self, rng):
        for _ in range(100):
            s = complex(rng.uniform(-2, 3), rng.uniform(1, 100))
            assert abs(delta(s.conjugate()) - delta(s).conjugate()) < 1e-9 * abs(delta(s))

    def test_rejects_integer_real_points(self):
        with pytest.raises(DomainError):
            log_delta(2.0 + 0.0j)
        with pytest.raises(DomainError):
            delta(-1.0 + 0.0j)

    def test_overflow_raises(self):
        with pytest.raises(RangeOverflowError):
            delta(complex(-300.0, 1e5))

    def test_log_derivative_matches_fd(self, rng):
        h = 1e-6
        for _ in range(30):
            s = complex(rng.uniform(-1, 2), rng.uniform(5, 100))
            fd = (log_delta(s + h) - log_delta(s - h)) / (2 * h)
            assert abs(log_delta_derivative(s) - fd) < 1e-5


class TestTheta:
    def test_frozen_values(self):
        assert theta(100.0).theta == pytest.approx(THETA_100, abs=1e-9)
        assert theta(10.0).theta == pytest.approx(THETA_10, abs=1e-10)
        assert theta(50.0).theta == pytest.approx(THETA_50, abs=1e-10)
        assert theta(0.0).theta == 0.0

    def test_vanishes_at_first_gram_point(self):
        assert abs(theta(GRAM_T0).theta) < 1e-8

    def test_branch_switch_is_seamless(self):
        # the exact and asymptotic branches must agree through the switch
        for t in np.linspace(15.0, 25.0, 101):
            ex = log_gamma(0.25 + 0.5j * t).imag - 0.5 * t * math.log(math.pi)
            assert abs(theta(float(t)).theta - ex) < 1e-10

    def test_vectorized_matches_scalar(self, rng):
        t = rng.uniform(0.5, 1e4, size=200)
        vals = theta_values(t)
        for tv, v in zip(t, vals):
            assert v == pytest.approx(theta(float(tv)).theta, abs=1e-12)

    def test_derivative(self):
        assert theta_derivative(50.0) == pytest.approx(THETA_D_50, abs=1e-10)
        h = 1e-5
        for t in (5.0, 19.0, 21.0, 500.0):
            fd = (theta(t + h).theta - theta(t - h).theta) / (2 * h)
            assert theta_derivative(t) == pytest.approx(fd, abs=1e-7)

    def test_accuracy_field_honest(self):
        v = theta(100.0)
        assert abs(v.theta - THETA_100) <= v.accuracy

    def test_negative_t_rejected(self):
        with pytest.raises(DomainError):
            theta(-1.0)
