"""Critical-line toolkit: zeta on the line, Hardy Z, crossings and moments.

The package evaluates the functional-equation factor and its phase,
enumerates the points where the curve t -> zeta(1/2 + it) meets a line
e^{i phi} R, scans the critical-line zeros, and reports discrete moment
sums against their asymptotic main terms.
"""

from .errors import (
    AccuracyError,
    CacheError,
    ConvergenceError,
    DomainError,
    PoleError,
    RangeOverflowError,
    ZetalineError,
)
from .special import (
    ThetaValue,
    delta,
    delta_asymptotic,
    digamma,
    log_delta,
    log_delta_derivative,
    log_gamma,
    theta,
    theta_derivative,
    theta_derivative_values,
    theta_values,
)
from .zeta import (
    CriticalLinePoint,
    critical_point,
    hardy_z,
    phi_fn,
    z_rs,
    z_rs_values,
    zeta_em,
)
from .crossings import (
    CountReport,
    CrossingPoint,
    count_crossings,
    enumerate_crossings,
    invert_theta,
    scan_low,
    solve_crossing,
)
from .zeros import (
    GramLawAudit,
    ZeroRecord,
    ZeroScan,
    count_zeros,
    gram_law_audit,
    gram_points,
    n_main_term,
    scan_zeros,
    zero_count_estimate,
)
from .moments import (
    GramSumReport,
    MomentReport,
    NonzeroCrossingBound,
    first_moment,
    gram_sums,
    large_value_search,
    mean_of_means,
    mean_value,
    moment_report,
    nonzero_crossing_bound,
    second_moment,
)

__version__ = "1.0.0"

__all__ = [
    "ZetalineError", "DomainError", "PoleError", "AccuracyError",
    "RangeOverflowError", "ConvergenceError", "CacheError",
    "log_gamma", "digamma", "log_delta", "delta", "delta_asymptotic",
    "log_delta_derivative", "theta", "theta_values", "theta_derivative",
    "theta_derivative_values", "ThetaValue",
    "zeta_em", "z_rs", "z_rs_values", "hardy_z", "critical_point",
    "phi_fn", "CriticalLinePoint",
    "CrossingPoint", "CountReport", "solve_crossing", "scan_low",
    "enumerate_crossings", "count_crossings", "invert_theta",
    "ZeroRecord", "ZeroScan", "GramLawAudit", "scan_zeros", "count_zeros",
    "gram_points", "gram_law_audit", "zero_count_estimate", "n_main_term",
    "MomentReport", "GramSumReport", "NonzeroCrossingBound",
    "moment_report", "first_moment", "second_moment", "mean_value",
    "mean_of_means", "gram_sums", "large_value_search",
    "nonzero_crossing_bound",
    "__version__",
]
