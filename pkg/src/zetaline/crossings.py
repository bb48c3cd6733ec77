"""Enumeration of the crossing points of the curve with a line e^{i phi} R.

A crossing with index n at angle phi is the root of theta(t) = pi n - phi.
Above t = 10 the phase is strictly monotone, so each admissible index has
exactly one root and counting reduces to index arithmetic; below t = 10 a
dense scan of the continuous phase picks up the handful of extra roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import ConvergenceError, DomainError
from .special import TWO_PI, theta_values, theta_derivative_values
from .zeta import RS_MIN_T, hardy_z, z_rs_values

T_MONOTONE = 10.0
LOW_SCAN_STEP = 1e-3
ROOT_TOL = 1e-9
_MAX_ITER = 200


@dataclass(frozen=True)
class CrossingPoint:
    """Root t of theta(t) = pi n - phi, with the zeta value sitting on the line."""

    n: int
    phi: float
    t: float
    zeta: complex
    directed_value: float  # Re(e^{-i phi} zeta), the signed value on the line


@dataclass(frozen=True)
class CountReport:
    phi: float
    T: float
    count: int
    main_term: float
    deviation: float


def _check_phi(phi: float) -> float:
    phi = float(phi)
    if not 0.0 <= phi < math.pi:
        raise DomainError("phi must lie in [0, pi)")
    return phi


def theta_at_monotone_edge() -> float:
    """theta(10), the lower end of the monotone solving region."""
    return float(theta_values(np.asarray([T_MONOTONE]))[0])


def invert_theta(targets: np.ndarray) -> np.ndarray:
    """Solve theta(t) = target for each target >= theta(10), vectorized.

    Bracketed Newton with bisection fallback; residual below ROOT_TOL.
    """
    targets = np.atleast_1d(np.asarray(targets, dtype=float))
    theta_lo = theta_at_monotone_edge()
    if np.any(targets < theta_lo - 1e-12):
        raise DomainError("target below theta(10); use the low-region scan")
    # initial guess from inverting the leading term via x (log x - 1) = y
    y = (targets + math.pi / 8.0) / math.pi
    x = np.maximum(9.0, y)
    for _ in range(5):
        x = np.where(y > 9.0, y / np.maximum(np.log(x) - 1.0, 0.5), x)
    t = np.clip(TWO_PI * x, T_MONOTONE, None)
    lo = np.full_like(t, T_MONOTONE)
    hi = np.maximum(2.0 * t, 60.0)
    # grow the upper bracket until theta(hi) >= target everywhere
    for _ in range(80):
        bad = theta_values(hi) < targets
        if not bad.any():
            break
        hi[bad] *= 2.0
    else:
        raise ConvergenceError("failed to bracket the phase targets")
    t = np.clip(t, lo, hi)
    g = theta_values(t) - targets
    for _ in range(_MAX_ITER):
        done = np.abs(g) <= ROOT_TOL
        if done.all():
            return t
        lo = np.where(g < 0.0, t, lo)
        hi = np.where(g > 0.0, t, hi)
        step = g / theta_derivative_values(np.maximum(t, 1.0))
        trial = t - step
        outside = (trial <= lo) | (trial >= hi)
        trial = np.where(outside, 0.5 * (lo + hi), trial)
        t = np.where(done, t, trial)
        g = theta_values(t) - targets
    raise ConvergenceError("phase inversion did not converge in 200 iterations")


def _index_range(phi: float, t_max: float) -> tuple[int, int]:
    """Smallest and largest crossing index with a root in [10, t_max]."""
    theta_lo = theta_at_monotone_edge()
    theta_hi = float(theta_values(np.asarray([t_max]))[0])
    n_min = math.ceil((theta_lo + phi) / math.pi - 1e-12)
    n_max = math.floor((theta_hi + phi) / math.pi + 1e-12)
    return n_min, n_max


def _zeta_on_line(n: np.ndarray, phi: float, t: np.ndarray):
    """zeta values and directed values at solved crossings (vectorized)."""
    z = np.empty_like(t)
    high = t >= RS_MIN_T
    if high.any():
        z[high] = z_rs_values(t[high])
    for i in np.nonzero(~high)[0]:
        z[i] = hardy_z(float(t[i]))
    theta_actual = theta_values(t)
    zeta = np.exp(-1j * theta_actual) * z
    directed = (np.exp(-1j * phi) * zeta).real
    return zeta, directed


def solve_crossing(n: int, phi: float) -> CrossingPoint:
    """The unique crossing with index n at angle phi in the monotone region."""
    phi = _check_phi(phi)
    target = math.pi * n - phi
    if target < theta_at_monotone_edge() - 1e-12:
        raise DomainError(
            f"index n={n} falls below the monotone region; use scan_low")
    t = invert_theta(np.asarray([target]))
    narr = np.asarray([n])
    zeta, directed = _zeta_on_line(narr, phi, t)
    return CrossingPoint(n=int(n), phi=phi, t=float(t[0]),
                         zeta=complex(zeta[0]), directed_value=float(directed[0]))


def scan_low(phi: float) -> list[CrossingPoint]:
    """Crossings with 0 < t < 10, found by a dense scan of the phase.

    Only on-line roots are reported; the sparse off-line roots of the
    small-|t| region are outside the counting convention used here.
    """
    phi = _check_phi(phi)
    grid = np.arange(LOW_SCAN_STEP, T_MONOTONE + LOW_SCAN_STEP, LOW_SCAN_STEP)
    th = theta_values(grid)
    # continuous index coordinate; crossings are integer crossings of this
    coord = (th + phi) / math.pi
    floors = np.floor(coord)
    hits = np.nonzero(np.diff(floors) != 0.0)[0]
    points: list[CrossingPoint] = []
    for i in hits:
        a, b = float(grid[i]), float(grid[i + 1])
        ka, kb = floors[i], floors[i + 1]
        k = int(max(ka, kb))  # integer level crossed between a and b
        target = math.pi * k - phi
        fa = float(th[i]) - target
        fb = float(th[i + 1]) - target
        if fa == 0.0:
            root = a
        elif fb == 0.0:
            root = b
        else:
            for _ in range(80):
                mid = 0.5 * (a + b)
                fm = float(theta_values(np.asarray([mid]))[0]) - target
                if fa * fm <= 0.0:
                    b, fb = mid, fm
                else:
                    a, fa = mid, fm
                if b - a < 1e-13:
                    break
            root = 0.5 * (a + b)
        if root >= T_MONOTONE:
            continue
        t = np.asarray([root])
        zeta, directed = _zeta_on_line(np.asarray([k]), phi, t)
        points.append(CrossingPoint(n=k, phi=phi, t=root,
                                    zeta=complex(zeta[0]),
                                    directed_value=float(directed[0])))
    points.sort(key=lambda p: p.t)
    return points


# Index block width for chunked parallel solving; fixed so that results do
# not depend on the worker count.
_BLOCK = 2048


def _solve_block(args) -> list[CrossingPoint]:
    phi, indices = args
    targets = math.pi * indices - phi
    t = invert_theta(targets)
    zeta, directed = _zeta_on_line(indices, phi, t)
    return [CrossingPoint(n=int(n), phi=phi, t=float(tv), zeta=complex(zv),
                          directed_value=float(dv))
            for n, tv, zv, dv in zip(indices, t, zeta, directed)]


def enumerate_crossings(phi: float, t_max: float, workers: int = 1) -> list[CrossingPoint]:
    """All crossings with 0 < t <= t_max, ascending in t."""
    phi = _check_phi(phi)
    if t_max < T_MONOTONE:
        raise DomainError("t_max must be >= 10")
    points = [p for p in scan_low(phi) if p.t <= t_max]
    n_min, n_max = _index_range(phi, t_max)
    if n_max >= n_min:
        indices = np.arange(n_min, n_max + 1)
        blocks = [(phi, indices[i:i + _BLOCK]) for i in range(0, len(indices), _BLOCK)]
        if workers > 1 and len(blocks) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_solve_block, blocks))
        else:
            results = [_solve_block(b) for b in blocks]
        for block_points in results:
            points.extend(block_points)
    pruned = [p for p in points if p.t <= t_max + 1e-9]
    pruned.sort(key=lambda p: p.t)
    return pruned


def count_crossings(phi: float, T: float) -> CountReport:
    """Exact crossing count on (0, T] via index arithmetic plus the low scan."""
    phi = _check_phi(phi)
    T = float(T)
    if T < T_MONOTONE:
        count = sum(1 for p in scan_low(phi) if p.t <= T)
    else:
        n_min, n_max = _index_range(phi, T)
        count = max(0, n_max - n_min + 1) + len(scan_low(phi))
    main_term = (T / TWO_PI) * math.log(T / (TWO_PI * math.e))
    return CountReport(phi=phi, T=T, count=count, main_term=main_term,
                       deviation=count - main_term)
