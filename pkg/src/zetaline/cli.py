"""Command-line front end: sweeps, reports and plot data.

CSV output is comma-separated UTF-8 with LF line endings and a fixed
header; floats are printed in fixed decimal notation with 12 significant
digits.  JSON reports are flat objects with snake_case keys.  The curve
report additionally renders a PNG of the same data next to the delimited
file.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .cache import cached_crossings, default_cache_path
from .crossings import enumerate_crossings
from .moments import gram_sums, large_value_search, moment_report
from .verify import SUITES, run_suite
from .zeros import gram_law_audit, scan_zeros
from .zeta import critical_point

MOMENT_TOLERANCE = 0.05


@dataclass(frozen=True)
class SweepConfig:
    """Validated bundle of the sweep options shared by the subcommands."""

    phi: float
    t_min: float
    t_max: float
    workers: int
    out_format: str
    cache_path: Path | None
    out: Path | None

    def __post_init__(self):
        if not 0.0 <= self.phi < math.pi:
            raise SystemExit(f"error: --phi must lie in [0, pi); got {self.phi}")
        if self.t_min >= self.t_max:
            raise SystemExit("error: --t-min must be below --t-max")
        if self.workers < 1:
            raise SystemExit("error: --workers must be >= 1")


def fmt12(x: float) -> str:
    """Fixed decimal notation with 12 significant digits."""
    if x == 0.0:
        return "0.00000000000"
    if not math.isfinite(x):
        return repr(x)
    decimals = max(0, 11 - math.floor(math.log10(abs(x))))
    return f"{x:.{decimals}f}"


def _open_out(out: Path | None):
    if out is None:
        return sys.stdout, False
    return open(out, "w", encoding="utf-8", newline=""), True


def _write_csv(out: Path | None, header: list[str], rows) -> None:
    fh, close = _open_out(out)
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    finally:
        if close:
            fh.close()


def _write_json(out: Path | None, payload) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    fh, close = _open_out(out)
    try:
        fh.write(text)
    finally:
        if close:
            fh.close()


def _crossing_rows(points, as_csv: bool):
    if as_csv:
        return [[p.n, fmt12(p.phi), fmt12(p.t), fmt12(p.zeta.real),
                 fmt12(p.zeta.imag), fmt12(p.directed_value)] for p in points]
    return [{"n": p.n, "phi": p.phi, "t": p.t, "zeta_re": p.zeta.real,
             "zeta_im": p.zeta.imag, "directed_value": p.directed_value}
            for p in points]


def cmd_gram(args) -> int:
    cfg = _config(args)
    if cfg.cache_path is not None:
        points = cached_crossings(cfg.phi, cfg.t_max, cfg.cache_path, cfg.workers)
    else:
        points = enumerate_crossings(cfg.phi, cfg.t_max, workers=cfg.workers)
    points = [p for p in points if p.t >= cfg.t_min]
    if cfg.out_format == "csv":
        _write_csv(cfg.out, ["n", "phi", "t", "zeta_re", "zeta_im", "directed_value"],
                   _crossing_rows(points, True))
    else:
        _write_json(cfg.out, _crossing_rows(points, False))
    return 0


def cmd_zeros(args) -> int:
    cfg = _config(args)
    scan = scan_zeros(cfg.t_max, workers=cfg.workers)
    zeros = [z for z in scan.zeros if z.gamma >= cfg.t_min]
    if cfg.out_format == "csv":
        rows = [[z.k, fmt12(z.gamma), fmt12(z.bracket[0]), fmt12(z.bracket[1]),
                 fmt12(z.refined_accuracy)] for z in zeros]
        _write_csv(cfg.out, ["k", "gamma", "bracket_lo", "bracket_hi",
                             "refined_accuracy"], rows)
    else:
        _write_json(cfg.out, [
            {"k": z.k, "gamma": z.gamma, "bracket_lo": z.bracket[0],
             "bracket_hi": z.bracket[1], "refined_accuracy": z.refined_accuracy}
            for z in zeros])
    for lo, hi in scan.flagged_blocks:
        print(f"warning: unresolved block ({lo:.6f}, {hi:.6f})", file=sys.stderr)
    return 0


def cmd_moments(args) -> int:
    cfg = _config(args)
    r = moment_report(cfg.phi, cfg.t_max, cfg.workers)
    payload = {
        "phi": r.phi, "t_max": r.T,
        "count_delta": r.count_delta, "count_zeros": r.count_zeros,
        "count_total": r.count_total,
        "sum1_re": r.sum1.real, "sum1_im": r.sum1.imag, "sum2": r.sum2,
        "mean_re": r.mean.real, "mean_im": r.mean.imag,
        "main1_re": r.main1.real, "main1_im": r.main1.imag, "main2": r.main2,
        "rel_dev2": r.rel_dev2, "near_zero": r.near_zero,
        "tolerance": MOMENT_TOLERANCE,
        "pass_second_moment": r.rel_dev2 <= MOMENT_TOLERANCE,
    }
    if r.rel_dev1 is None:
        # vanishing main term: report the absolute first-moment sum instead
        payload["rel_dev1"] = None
        payload["abs_sum1"] = abs(r.sum1)
        payload["pass_first_moment"] = abs(r.sum1) <= MOMENT_TOLERANCE * r.count_total
    else:
        payload["rel_dev1"] = r.rel_dev1
        payload["pass_first_moment"] = r.rel_dev1 <= MOMENT_TOLERANCE
    _write_json(cfg.out, payload)
    return 0


def cmd_gramsums(args) -> int:
    r = gram_sums(args.count, args.workers)
    payload = {"n": r.N, "sum_z": r.sum_z, "sum_z2": r.sum_z2,
               "sum_z4": r.sum_z4, "sum_pair": r.sum_pair}
    payload.update(r.ratios)
    _write_json(args.out, payload)
    return 0


def cmd_gramlaw(args) -> int:
    audit = gram_law_audit(args.count)
    _write_json(args.out, {
        "n_max": audit.n_max,
        "first_violation": audit.violations[0] if audit.violations else None,
        "violation_count": len(audit.violations),
        "proportion": audit.proportion,
        "violations": audit.violations,
    })
    return 0


def cmd_large_values(args) -> int:
    cfg = _config(args)
    hits = large_value_search(cfg.phi, cfg.t_max, cfg.workers)
    if cfg.out_format == "csv":
        _write_csv(cfg.out, ["t", "directed_value"],
                   [[fmt12(t), fmt12(v)] for t, v in hits])
    else:
        _write_json(cfg.out, [{"t": t, "directed_value": v} for t, v in hits])
    return 0


def _curve_sets(t_min: float, t_max: float, step: float, phi: float):
    t = np.arange(t_min, t_max + 0.5 * step, step)
    zeta = np.array([critical_point(float(tv)).zeta for tv in t])
    # mean circle e^{i a} cos a = (1 + e^{2ia})/2: radius 1/2 centered at 1/2
    a = np.linspace(0.0, math.pi, 257)[:-1]
    circle = 0.5 * (1.0 + np.exp(2j * a))
    radius = float(np.max(np.abs(zeta))) if len(zeta) else 1.0
    s = np.linspace(-radius, radius, 129)
    line = np.exp(1j * phi) * s
    return (t, zeta), (a, circle), (s, line)


def cmd_curve(args) -> int:
    if args.step <= 0.0:
        raise SystemExit("error: --step must be > 0")
    cfg = _config(args)
    (t, zeta), (a, circle), (s, line) = _curve_sets(
        cfg.t_min, cfg.t_max, args.step, cfg.phi)
    if cfg.out_format == "csv":
        rows = []
        rows += [["curve", fmt12(float(tv)), fmt12(z.real), fmt12(z.imag)]
                 for tv, z in zip(t, zeta)]
        rows += [["circle", fmt12(float(av)), fmt12(z.real), fmt12(z.imag)]
                 for av, z in zip(a, circle)]
        rows += [["line", fmt12(float(sv)), fmt12(z.real), fmt12(z.imag)]
                 for sv, z in zip(s, line)]
        _write_csv(cfg.out, ["label", "param", "re", "im"], rows)
    else:
        _write_json(cfg.out, {
            "curve": [{"t": float(tv), "re": z.real, "im": z.imag}
                      for tv, z in zip(t, zeta)],
            "circle": [{"phi": float(av), "re": z.real, "im": z.imag}
                       for av, z in zip(a, circle)],
            "line": [{"s": float(sv), "re": z.real, "im": z.imag}
                     for sv, z in zip(s, line)],
        })
    if cfg.out is not None:
        _render_curve(cfg.out.with_suffix(".png"), zeta, circle, line, cfg.phi)
    return 0


def _render_curve(png_path: Path, zeta, circle, line, phi: float) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    fig, ax = plt.subplots(figsize=(7, 7))
    ax.plot(zeta.real, zeta.imag, lw=0.7, label="zeta(1/2+it)")
    ax.plot(circle.real, circle.imag, lw=1.2, label="mean circle")
    ax.plot(line.real, line.imag, lw=1.0, ls="--",
            label=f"line phi={phi:.4f}")
    ax.set_aspect("equal")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.legend(loc="best", fontsize="small")
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)


def cmd_verify(args) -> int:
    report = run_suite(args.suite, workers=args.workers)
    _write_json(args.out, report)
    if not report["passed"]:
        failed = [c["name"] for c in report["criteria"] if not c["passed"]]
        print("failed: " + ", ".join(failed), file=sys.stderr)
        return 1
    return 0


def _config(args) -> SweepConfig:
    cache = getattr(args, "cache", None)
    return SweepConfig(
        phi=getattr(args, "phi", 0.0),
        t_min=getattr(args, "t_min", 0.0),
        t_max=args.t_max,
        workers=args.workers,
        out_format=getattr(args, "format", "json"),
        cache_path=Path(cache) if cache is not None else None,
        out=Path(args.out) if args.out is not None else None,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetaline",
        description="critical-line curve crossings, zeros and moment sums")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=str, default=None,
                        help="output file (default: stdout)")
    common.add_argument("--workers", type=int, default=1)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("csv", "json"), default="csv")

    rng = argparse.ArgumentParser(add_help=False)
    rng.add_argument("--phi", type=float, default=0.0,
                     help="line angle in radians, in [0, pi)")
    rng.add_argument("--t-min", type=float, default=0.0)
    rng.add_argument("--t-max", type=float, required=True)

    p = sub.add_parser("gram", parents=[common, fmt, rng],
                       help="enumerate crossings with the line e^{i phi} R")
    p.add_argument("--cache", type=str, nargs="?", default=None,
                   const=str(default_cache_path()),
                   help="cache file (no value: honor ZETALINE_CACHE_DIR)")
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("zeros", parents=[common, fmt],
                       help="scan critical-line zeros up to t-max")
    p.add_argument("--t-min", type=float, default=0.0)
    p.add_argument("--t-max", type=float, required=True)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("moments", parents=[common],
                       help="first and second discrete moments up to t-max")
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--t-max", type=float, required=True)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("gramsums", parents=[common],
                       help="power and pair sums over the first N Gram points")
    p.add_argument("--count", type=int, required=True, help="N")
    p.set_defaults(func=cmd_gramsums)

    p = sub.add_parser("gramlaw", parents=[common],
                       help="audit Gram's law up to index n = count")
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_gramlaw)

    p = sub.add_parser("large-values", parents=[common, fmt],
                       help="crossings in (T, 2T] with directed value >= sqrt(log t)")
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--t-max", type=float, required=True, help="T")
    p.set_defaults(func=cmd_large_values)

    p = sub.add_parser("curve", parents=[common, fmt],
                       help="curve samples, mean circle and a reference line")
    p.add_argument("--phi", type=float, default=math.pi / 4.0)
    p.add_argument("--t-min", type=float, default=0.0)
    p.add_argument("--t-max", type=float, default=70.0)
    p.add_argument("--step", type=float, default=0.01)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("verify", parents=[common],
                       help="run the acceptance suite")
    p.add_argument("--suite", choices=sorted(SUITES), default="fast")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
