"""Zeta on and near the critical line, Hardy's Z, and the line detector.

Two routes are kept deliberately independent: ``zeta_em`` is the slow
Euler-Maclaurin continuation used as an in-repo oracle, ``z_rs`` is the
Riemann-Siegel production path.  Their agreement is asserted by the test
suite, so neither may be rewritten in terms of the other.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import AccuracyError, DomainError, PoleError
from .special import TWO_PI, _BERNOULLI, theta, theta_values

# Production path threshold: below this the main sum is too short and the
# Euler-Maclaurin route is used instead.
RS_MIN_T = 30.0

_FACTORIALS = [math.factorial(2 * k) for k in range(1, len(_BERNOULLI) + 1)]


def zeta_em(s: complex, target_accuracy: float = 1e-12) -> complex:
    """Euler-Maclaurin evaluation of zeta(s) for Re s in [-1, 3], |Im s| <= 1e5.

    The initial sum runs to N = max(10, ceil |Im s|); Bernoulli corrections
    are added until the first omitted term drops below the target.
    """
    s = complex(s)
    if abs(s - 1.0) <= 1e-6:
        raise PoleError("zeta pole at s = 1")
    if not (-1.0 <= s.real <= 3.0) or abs(s.imag) > 1e5:
        raise DomainError(f"Euler-Maclaurin path supports Re s in [-1,3], |Im s| <= 1e5; got {s}")
    n_terms = max(10, int(math.ceil(abs(s.imag))))
    n = np.arange(1, n_terms, dtype=float)
    partial = complex(np.sum(np.exp(-s * np.log(n))))
    big_n = float(n_terms)
    ninv = big_n ** (-s)  # complex power via exp/log below for stability
    ninv = cmath.exp(-s * math.log(big_n))
    result = partial + big_n * ninv / (s - 1.0) + 0.5 * ninv
    # correction terms B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(1-s-2k)
    rising = s
    npow = big_n  # N^(2k-1)
    n_corr = len(_BERNOULLI)
    estimate = math.inf
    for k in range(1, n_corr + 1):
        term = (_BERNOULLI[k - 1] / _FACTORIALS[k - 1]) * rising * ninv / npow
        result += term
        rising *= (s + (2 * k - 1)) * (s + 2 * k)
        npow *= big_n * big_n
        if k < n_corr:
            # first omitted term as error estimate
            estimate = abs(_BERNOULLI[k] / _FACTORIALS[k] * rising * ninv / npow)
        else:
            estimate = abs(term)
        if estimate <= target_accuracy:
            break
    if estimate > target_accuracy:
        raise AccuracyError(
            f"term budget exhausted at s={s}: estimated error {estimate:.3e} "
            f"> target {target_accuracy:.3e}")
    return result


# --- Riemann-Siegel remainder -------------------------------------------
#
# The remainder coefficients are polynomials in derivatives of the entire
# function psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p).  Derivatives
# are taken with a Cauchy-integral trapezoid rule on a circle of radius 1/2
# (node angles offset by half a step so no node lands on the real axis),
# which is accurate to near machine precision for orders up to 12.

_CONTOUR_NODES = 64
_CONTOUR_RADIUS = 0.5
_ANGLES = 2.0 * math.pi * (np.arange(_CONTOUR_NODES) + 0.5) / _CONTOUR_NODES
_NODES = _CONTOUR_RADIUS * np.exp(1j * _ANGLES)
_MAX_ORDER = 12
_MOMENT_KERNEL = np.exp(-1j * np.outer(np.arange(_MAX_ORDER + 1), _ANGLES))
_DERIV_SCALE = np.array(
    [math.factorial(k) / _CONTOUR_RADIUS ** k / _CONTOUR_NODES
     for k in range(_MAX_ORDER + 1)])


def _psi(z: np.ndarray) -> np.ndarray:
    return np.cos(TWO_PI * (z * z - z - 0.0625)) / np.cos(TWO_PI * z)


def _psi_derivatives(p: np.ndarray) -> np.ndarray:
    """Derivatives psi^(k)(p) for k = 0..12; shape (len(p), 13)."""
    z = p[:, None] + _NODES[None, :]
    values = _psi(z)
    moments = values @ _MOMENT_KERNEL.T
    return moments.real * _DERIV_SCALE[None, :]


_PI2 = math.pi ** 2
_PI4 = math.pi ** 4
_PI6 = math.pi ** 6
_PI8 = math.pi ** 8


def _rs_correction(a: np.ndarray, p: np.ndarray) -> np.ndarray:
    """Correction-series value C0 + C1/a + ... + C4/a^4 at a = sqrt(t/2pi)."""
    d = _psi_derivatives(p)
    c0 = d[:, 0]
    c1 = -d[:, 3] / (96.0 * _PI2)
    c2 = d[:, 2] / (64.0 * _PI2) + d[:, 6] / (18432.0 * _PI4)
    c3 = (-d[:, 1] / (64.0 * _PI2) - d[:, 5] / (3840.0 * _PI4)
          - d[:, 9] / (5308416.0 * _PI6))
    c4 = (d[:, 0] / (128.0 * _PI2) + 19.0 * d[:, 4] / (24576.0 * _PI4)
          + 11.0 * d[:, 8] / (5898240.0 * _PI6)
          + d[:, 12] / (2038431744.0 * _PI8))
    inv = 1.0 / a
    return c0 + inv * (c1 + inv * (c2 + inv * (c3 + inv * c4)))


def z_rs_values(t) -> np.ndarray:
    """Vectorized Riemann-Siegel Z(t) for t >= 30.

    Main sum plus five correction terms; the absolute error is below
    ~0.01 * t^(-11/4), i.e. well under 1e-6 for all supported heights.
    """
    t = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(t < RS_MIN_T):
        raise DomainError(f"Riemann-Siegel path needs t >= {RS_MIN_T}")
    # keep the (points x terms) work matrix bounded to ~32 MB
    max_terms = int(math.sqrt(float(t.max()) / TWO_PI)) + 1
    chunk = max(1, (1 << 22) // max_terms)
    if len(t) > chunk:
        return np.concatenate([z_rs_values(t[i:i + chunk])
                               for i in range(0, len(t), chunk)])
    a = np.sqrt(t / TWO_PI)
    n_len = np.floor(a).astype(int)
    p = a - n_len
    th = theta_values(t)
    nmax = int(n_len.max())
    n = np.arange(1, nmax + 1, dtype=float)
    phases = th[:, None] - t[:, None] * np.log(n)[None, :]
    terms = np.cos(phases) / np.sqrt(n)[None, :]
    mask = n[None, :] <= n_len[:, None]
    main = 2.0 * np.sum(np.where(mask, terms, 0.0), axis=1)
    sign = np.where(n_len % 2 == 0, -1.0, 1.0)  # (-1)^(N-1)
    remainder = sign * a ** -0.5 * _rs_correction(a, p)
    return main + remainder


def z_rs(t: float) -> float:
    """Riemann-Siegel Z(t) for a single height t >= 30."""
    return float(z_rs_values(np.asarray([float(t)]))[0])


def hardy_z(t: float) -> float:
    """Z(t) for any t >= 0; falls back to the Euler-Maclaurin route below 30."""
    t = float(t)
    if t >= RS_MIN_T:
        return z_rs(t)
    value = cmath.exp(1j * theta(t).theta) * zeta_em(0.5 + 1j * t)
    return value.real


@dataclass(frozen=True)
class CriticalLinePoint:
    """Bundled zeta, phase and Hardy-Z data at height t on the critical line."""

    t: float
    zeta: complex
    z: float
    theta: float
    accuracy: float


def critical_point(t: float) -> CriticalLinePoint:
    """Consistent (zeta, Z, theta) bundle at 1/2 + it."""
    t = float(t)
    if t < 0.0:
        raise DomainError("t must be >= 0")
    th = theta(t)
    if t >= RS_MIN_T:
        z = z_rs(t)
        accuracy = 1e-2 * t ** -2.75 + 1e-9
    else:
        z = (cmath.exp(1j * th.theta) * zeta_em(0.5 + 1j * t)).real
        accuracy = 1e-10
    zeta = cmath.exp(-1j * th.theta) * z
    return CriticalLinePoint(t=t, zeta=zeta, z=z, theta=th.theta, accuracy=accuracy)


def phi_fn(t: float, phi: float) -> complex:
    """Line-intersection detector zeta(1/2+it) - e^{2 i phi} zeta(1/2-it).

    Vanishes exactly at critical-line zeros and at the crossing points of
    the curve with the line e^{i phi} R.
    """
    t = float(t)
    if t < 0.0:
        raise DomainError("t must be >= 0")
    if not 0.0 <= phi < math.pi:
        raise DomainError("phi must lie in [0, pi)")
    zeta = critical_point(t).zeta
    return zeta - cmath.exp(2j * phi) * zeta.conjugate()
