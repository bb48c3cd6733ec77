"""Discrete sums over crossing points and Gram points, with asymptotic targets.

All sums run in ascending t with error-free chunked accumulation
(math.fsum per fixed-size chunk, then an fsum over the chunk totals), so
results are bit-identical regardless of how many workers process the
chunks.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .special import TWO_PI
from .crossings import enumerate_crossings, _check_phi
from .zeros import count_zeros, gram_points, _z_many

EULER_MASCHERONI = 0.57721566490153286

# Crossings with |zeta| below this are treated as coinciding with a zero;
# they are flagged and counted once, never silently classified.
ZERO_THRESHOLD = 1e-4

_CHUNK = 4096


def chunked_sum(values, workers: int = 1) -> float:
    """Deterministic compensated sum: fsum per fixed chunk, fsum of totals."""
    values = np.asarray(values, dtype=float)
    chunks = [values[i:i + _CHUNK] for i in range(0, len(values), _CHUNK)]
    if not chunks:
        return 0.0
    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(math.fsum, chunks))
    else:
        partials = [math.fsum(c) for c in chunks]
    return math.fsum(partials)


def chunked_csum(values, workers: int = 1) -> complex:
    values = np.asarray(values, dtype=complex)
    return complex(chunked_sum(values.real, workers), chunked_sum(values.imag, workers))


@dataclass(frozen=True)
class MomentReport:
    phi: float
    T: float
    count_delta: int
    count_zeros: int
    count_total: int
    sum1: complex
    sum2: float
    mean: complex
    main1: complex
    main2: float
    rel_dev1: float | None  # None when the first-moment main term vanishes
    rel_dev2: float
    near_zero: int = 0  # crossings flagged as coinciding with a zeta zero


@dataclass(frozen=True)
class GramSumReport:
    N: int
    sum_z: float
    sum_z2: float
    sum_z4: float
    sum_pair: float
    ratios: dict[str, float] = field(default_factory=dict)


_crossing_cache: dict[tuple[float, float], tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]] = {}
_zero_count_cache: dict[float, int] = {}


def crossing_arrays(phi: float, T: float, workers: int = 1):
    """(n, t, zeta, directed) arrays for all crossings on (0, T], ascending t."""
    key = (float(phi), float(T))
    if key not in _crossing_cache:
        points = enumerate_crossings(phi, T, workers=workers)
        n = np.array([p.n for p in points], dtype=int)
        t = np.array([p.t for p in points])
        zeta = np.array([p.zeta for p in points], dtype=complex)
        directed = np.array([p.directed_value for p in points])
        _crossing_cache[key] = (n, t, zeta, directed)
    return _crossing_cache[key]


def zero_count_cached(T: float) -> int:
    T = float(T)
    if T not in _zero_count_cache:
        _zero_count_cache[T] = count_zeros(T)
    return _zero_count_cache[T]


def _log_factor(T: float) -> float:
    return math.log(T / (TWO_PI * math.e))


def first_moment_main(phi: float, T: float) -> complex:
    return 2.0 * complex(math.cos(phi), 0.0) * complex(math.cos(phi), math.sin(phi)) \
        * (T / TWO_PI) * _log_factor(T)


def second_moment_main(phi: float, T: float) -> float:
    big_l = _log_factor(T)
    x = T / TWO_PI
    return x * big_l * big_l \
        + (2.0 * EULER_MASCHERONI + 2.0 * math.cos(2.0 * phi)) * x * big_l + x


def moment_report(phi: float, T: float, workers: int = 1) -> MomentReport:
    """First and second discrete moments over crossings on (0, T]."""
    phi = _check_phi(phi)
    T = float(T)
    if not 100.0 <= T <= 1e6:
        raise DomainError("T must lie in [100, 1e6]")
    _, t, zeta, directed = crossing_arrays(phi, T, workers)
    sum1 = chunked_csum(zeta, workers)
    sum2 = chunked_sum(np.abs(zeta) ** 2, workers)
    near_zero = int(np.count_nonzero(np.abs(zeta) <= ZERO_THRESHOLD))
    count_delta = len(t)
    n_zeros = zero_count_cached(T)
    count_total = count_delta + n_zeros
    main1 = first_moment_main(phi, T)
    main2 = second_moment_main(phi, T)
    # the first-moment main term is treated as vanishing when it is
    # negligible against the natural 2 (T/2pi) log(T/2pi e) scale, so a
    # truncated pi/2 on the command line still lands in the zero-mean branch
    scale = 2.0 * (T / TWO_PI) * _log_factor(T)
    rel_dev1 = abs(sum1 - main1) / abs(main1) if abs(main1) > 1e-6 * scale else None
    rel_dev2 = abs(sum2 - main2) / main2
    mean = sum1 / count_total
    return MomentReport(phi=phi, T=T, count_delta=count_delta, count_zeros=n_zeros,
                        count_total=count_total, sum1=sum1, sum2=sum2, mean=mean,
                        main1=main1, main2=main2, rel_dev1=rel_dev1,
                        rel_dev2=rel_dev2, near_zero=near_zero)


def first_moment(phi: float, T: float, workers: int = 1) -> MomentReport:
    """Sum of zeta over the crossings; main term 2 e^{i phi} cos(phi) (T/2pi) log(T/2pi e)."""
    return moment_report(phi, T, workers)


def second_moment(phi: float, T: float, workers: int = 1) -> MomentReport:
    """Sum of |zeta|^2 over the crossings against its three-term main expression."""
    return moment_report(phi, T, workers)


def mean_value(phi: float, T: float, workers: int = 1) -> complex:
    """Empirical mean of the zeta values on the line e^{i phi} R up to T."""
    if T < 100.0:
        raise DomainError("T must be >= 100")
    return moment_report(phi, T, workers).mean


def mean_of_means(T: float, grid: int = 16, workers: int = 1) -> complex:
    """Uniform-grid average over phi in [0, pi) of the per-line mean values."""
    if grid < 8:
        raise DomainError("grid must be >= 8")
    means = [mean_value(math.pi * j / grid, T, workers) for j in range(grid)]
    return chunked_csum(np.asarray(means)) / grid


def gram_sums(N: int, workers: int = 1) -> GramSumReport:
    """Power and pair sums of Z over the classical Gram points t_1..t_N.

    ``sum_z`` is the parity-signed sum of (-1)^n Z(t_n) = zeta(1/2 + i t_n):
    with the continuous phase branch the raw Z values alternate in sign, and
    the ~2N first-moment asymptotic holds for the signed sum (equivalently,
    for the zeta values themselves).  The pair sum keeps the raw Z values,
    whose consecutive products are negative under Gram's law.
    """
    N = int(N)
    if not 100 <= N <= 10 ** 5:
        raise DomainError("N must lie in [100, 1e5]")
    t = gram_points(N + 1)  # indices 0..N+1; the pair sum needs t_{N+1}
    z = _z_many(t)
    zn = z[1:N + 1]
    parity = np.where(np.arange(1, N + 1) % 2 == 0, 1.0, -1.0)
    sum_z = chunked_sum(parity * zn, workers)
    sum_z2 = chunked_sum(zn * zn, workers)
    sum_z4 = chunked_sum(zn ** 4, workers)
    sum_pair = chunked_sum(zn * z[2:N + 2], workers)
    log_n = math.log(N)
    ratios = {
        "sum_z_over_2n": sum_z / (2.0 * N),
        "sum_z2_over_n_log_n": sum_z2 / (N * log_n),
        "sum_pair_over_titchmarsh": sum_pair / (-2.0 * (EULER_MASCHERONI + 1.0) * N),
        "sum_z4_over_n_log_n_sq": sum_z4 / (N * log_n * log_n),
    }
    return GramSumReport(N=N, sum_z=sum_z, sum_z2=sum_z2, sum_z4=sum_z4,
                         sum_pair=sum_pair, ratios=ratios)


def large_value_search(phi: float, T: float, workers: int = 1) -> list[tuple[float, float]]:
    """Crossings in (T, 2T] whose directed value reaches sqrt(log t).

    For phi = pi/2 the symmetric class (value at or below -sqrt(log t)) is
    reported as well, since there both signs occur.
    """
    phi = _check_phi(phi)
    if T < 100.0:
        raise DomainError("T must be >= 100")
    _, t, _, directed = crossing_arrays(phi, 2.0 * T, workers)
    window = t > T
    t, directed = t[window], directed[window]
    threshold = np.sqrt(np.log(t))
    keep = directed >= threshold
    if abs(phi - 0.5 * math.pi) < 1e-12:
        keep |= directed <= -threshold
    return [(float(a), float(b)) for a, b in zip(t[keep], directed[keep])]


@dataclass(frozen=True)
class NonzeroCrossingBound:
    phi: float
    T: float
    count: int
    bound: float
    satisfied: bool
    near_zero: int


def nonzero_crossing_bound(phi: float, T: float, workers: int = 1) -> NonzeroCrossingBound:
    """Count of crossings up to T with zeta != 0 against the (2 cos^2 phi / pi) T floor."""
    phi = _check_phi(phi)
    if T < 100.0:
        raise DomainError("T must be >= 100")
    _, t, zeta, _ = crossing_arrays(phi, T, workers)
    mags = np.abs(zeta)
    count = int(np.count_nonzero(mags > ZERO_THRESHOLD))
    near_zero = int(len(mags) - count)
    bound = (2.0 * math.cos(phi) ** 2 / math.pi) * T
    return NonzeroCrossingBound(phi=phi, T=T, count=count, bound=bound,
                                satisfied=count >= bound, near_zero=near_zero)
