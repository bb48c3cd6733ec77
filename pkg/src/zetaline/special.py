"""Log-gamma, the functional-equation factor, and the phase function.

All complex values are plain Python ``complex`` (the spec's pair of real
coordinates).  The phase function ``theta`` is returned on the continuous
branch with theta(0) = 0, so the crossing indexing downstream is
unambiguous.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleError, RangeOverflowError

LN_2 = math.log(2.0)
LN_PI = math.log(math.pi)
TWO_PI = 2.0 * math.pi

# B_{2k} for k = 1..12
_BERNOULLI = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
]

# Shift the argument until it is comfortably inside the Stirling regime.
_STIRLING_RADIUS = 12.0

# Switch height between the exact log-gamma branch of theta and the
# asymptotic expansion; both branches agree to ~1e-12 on [15, 25].
THETA_SWITCH = 20.0


def _is_nonpositive_integer(s: complex) -> bool:
    return s.imag == 0.0 and s.real <= 0.0 and s.real == round(s.real)


def log_gamma(s: complex) -> complex:
    """Continuous log-gamma (imaginary part unwrapped along vertical lines).

    Uses the Stirling series after shifting the argument upward; the shifts
    accumulate principal logs, which keeps the branch continuous for
    Im s != 0 and reproduces the classical lnGamma on the positive reals.
    """
    s = complex(s)
    if _is_nonpositive_integer(s):
        raise PoleError(f"log_gamma pole at s={s}")
    shift = 0.0 + 0.0j
    while abs(s) < _STIRLING_RADIUS or s.real < 1.0:
        shift -= cmath.log(s)
        s += 1.0
    result = (s - 0.5) * cmath.log(s) - s + 0.5 * math.log(TWO_PI)
    s2 = s * s
    power = s
    for k, b2k in enumerate(_BERNOULLI, start=1):
        term = b2k / ((2 * k) * (2 * k - 1) * power)
        result += term
        if abs(term) < 1e-18 * max(1.0, abs(result)):
            break
        power *= s2
    result += shift
    if not (math.isfinite(result.real) and math.isfinite(result.imag)):
        raise RangeOverflowError(f"log_gamma overflow at s={s}")
    return result


def digamma(s: complex) -> complex:
    """Digamma via the Stirling series with upward recurrence shifts."""
    s = complex(s)
    if _is_nonpositive_integer(s):
        raise PoleError(f"digamma pole at s={s}")
    shift = 0.0 + 0.0j
    while abs(s) < _STIRLING_RADIUS or s.real < 1.0:
        shift -= 1.0 / s
        s += 1.0
    result = cmath.log(s) - 0.5 / s
    s2 = s * s
    power = s2
    for k, b2k in enumerate(_BERNOULLI, start=1):
        term = b2k / (2 * k * power)
        result -= term
        if abs(term) < 1e-18:
            break
        power *= s2
    return result + shift


def _log_sin(z: complex) -> complex:
    """log(sin z), branch chosen continuously within each half-plane."""
    if z.imag > 15.0:
        # sin z = e^{-iz} (1 - e^{2iz}) i/2; |e^{2iz}| <= e^-30, so
        # log1p(-q) = -q to below double precision
        return -1j * z - cmath.exp(2j * z) - LN_2 + 0.5j * math.pi
    if z.imag < -15.0:
        return (-1j * z.conjugate() - cmath.exp(2j * z.conjugate())
                - LN_2 + 0.5j * math.pi).conjugate()
    return cmath.log(cmath.sin(z))


def _cot(z: complex) -> complex:
    if z.imag > 15.0:
        q = cmath.exp(2j * z)
        return 1j * (q + 1.0) / (q - 1.0)
    if z.imag < -15.0:
        q = cmath.exp(-2j * z)
        return -1j * (q + 1.0) / (q - 1.0)
    return cmath.cos(z) / cmath.sin(z)


def log_delta(s: complex) -> complex:
    """log of the functional-equation factor, 2^s pi^(s-1) Gamma(1-s) sin(pi s/2).

    Real integer points are rejected: the gamma pole and the sine zero
    interact there and the toolkit never needs the limit values at runtime.
    """
    s = complex(s)
    if s.imag == 0.0 and s.real == round(s.real):
        raise DomainError(f"factor not evaluated at integer real points, s={s}")
    return (s * LN_2 + (s - 1.0) * LN_PI + log_gamma(1.0 - s)
            + _log_sin(0.5 * math.pi * s))


def delta(s: complex) -> complex:
    """Functional-equation factor; unit modulus on the critical line."""
    ld = log_delta(s)
    if ld.real > 709.0:
        raise RangeOverflowError(f"factor modulus overflows at s={s}")
    value = cmath.exp(ld)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise RangeOverflowError(f"factor overflow at s={s}")
    return value


def delta_asymptotic(s: complex) -> complex:
    """Leading term (|t|/2pi)^(1/2-sigma-it) exp(i(t+pi/4)) of the factor.

    Valid for |Im s| >= 1; the relative error is O(1/|t|).  Used only as a
    consistency check against the exact evaluation.
    """
    s = complex(s)
    if abs(s.imag) < 1.0:
        raise DomainError(f"asymptotic form needs |Im s| >= 1, got s={s}")
    if s.imag < 0.0:
        return delta_asymptotic(s.conjugate()).conjugate()
    t = s.imag
    exponent = (0.5 - s.real - 1j * t) * math.log(t / TWO_PI) + 1j * (t + 0.25 * math.pi)
    if exponent.real > 709.0:
        raise RangeOverflowError(f"asymptotic factor overflows at s={s}")
    return cmath.exp(exponent)


def log_delta_derivative(s: complex) -> complex:
    """Logarithmic derivative of the factor; ~ -log(|t|/2pi) on vertical lines."""
    s = complex(s)
    if abs(s.imag) < 1.0:
        raise DomainError(f"log-derivative needs |Im s| >= 1, got s={s}")
    return LN_2 + LN_PI - digamma(1.0 - s) + 0.5 * math.pi * _cot(0.5 * math.pi * s)


@dataclass(frozen=True)
class ThetaValue:
    """Phase value on the continuous branch with theta(0) = 0."""

    t: float
    theta: float
    accuracy: float


def _theta_asymptotic(t):
    u = np.log(t / TWO_PI)
    return (0.5 * t * u - 0.5 * t - 0.125 * math.pi
            + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t ** 3)
            + 31.0 / (80640.0 * t ** 5))


def _theta_exact(t: float) -> float:
    if t == 0.0:
        return 0.0
    return log_gamma(0.25 + 0.5j * t).imag - 0.5 * t * LN_PI


def theta_values(t) -> np.ndarray:
    """Vectorized phase function for t >= 0 (ndarray in, ndarray out)."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(t < 0.0):
        raise DomainError("phase function defined here for t >= 0 only")
    out = np.empty_like(t)
    high = t >= THETA_SWITCH
    if np.any(high):
        out[high] = _theta_asymptotic(t[high])
    low = ~high
    if np.any(low):
        out[low] = [_theta_exact(float(x)) for x in np.atleast_1d(t[low])]
    return out


def theta(t: float) -> ThetaValue:
    """Phase of the factor on the critical line: factor(1/2+it) = exp(-2i theta)."""
    t = float(t)
    if t < 0.0:
        raise DomainError("t must be >= 0; use oddness at the call site")
    if t >= THETA_SWITCH:
        value = float(_theta_asymptotic(np.float64(t)))
        accuracy = 127.0 / (430080.0 * t ** 7) + abs(value) * 1e-15 + 1e-15
    else:
        value = _theta_exact(t)
        accuracy = 1e-13 * (1.0 + t)
    return ThetaValue(t=t, theta=value, accuracy=accuracy)


def theta_derivative_values(t) -> np.ndarray:
    """Vectorized derivative of the phase function for t >= 1."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(t < 1.0):
        raise DomainError("phase derivative defined for t >= 1")
    out = np.empty_like(t)
    high = t >= THETA_SWITCH
    if np.any(high):
        th = t[high]
        out[high] = (0.5 * np.log(th / TWO_PI) - 1.0 / (48.0 * th ** 2)
                     - 7.0 / (1920.0 * th ** 4) - 31.0 / (16128.0 * th ** 6))
    low = ~high
    if np.any(low):
        out[low] = [
            0.5 * digamma(0.25 + 0.5j * float(x)).real - 0.5 * LN_PI
            for x in np.atleast_1d(t[low])
        ]
    return out


def theta_derivative(t: float) -> float:
    """Derivative of the phase function; positive beyond t = 2 pi."""
    return float(theta_derivative_values(np.asarray([float(t)]))[0])
