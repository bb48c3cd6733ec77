"""Append-only CSV cache for crossing tables.

Rows are keyed by (code version, phi, crossing index) and floats are
written with ``repr`` so a reload is bit-identical to the computation
that produced it.  Rows from other code versions are skipped with a
warning and recomputed, never mixed in.
"""

from __future__ import annotations

import csv
import os
import warnings
from pathlib import Path

from .errors import CacheError
from .crossings import CrossingPoint, count_crossings, enumerate_crossings

CACHE_ENV_VAR = "ZETALINE_CACHE_DIR"
CACHE_FILENAME = "crossings.csv"
_FIELDS = ["version", "phi", "n", "t", "zeta_re", "zeta_im", "directed_value"]


def _code_version() -> str:
    from . import __version__
    return __version__


def default_cache_path() -> Path:
    base = os.environ.get(CACHE_ENV_VAR, ".")
    return Path(base) / CACHE_FILENAME


def _parse_row(row: list[str], line_no: int) -> tuple[str, CrossingPoint]:
    if len(row) != len(_FIELDS):
        raise CacheError(f"corrupted cache row at line {line_no}: "
                         f"expected {len(_FIELDS)} fields, got {len(row)}")
    try:
        version = row[0]
        phi = float(row[1])
        n = int(row[2])
        t = float(row[3])
        zeta = complex(float(row[4]), float(row[5]))
        directed = float(row[6])
    except ValueError as exc:
        raise CacheError(f"corrupted cache row at line {line_no}: {exc}") from exc
    return version, CrossingPoint(n=n, phi=phi, t=t, zeta=zeta,
                                  directed_value=directed)


def load_crossings(path: Path | str, phi: float) -> list[CrossingPoint]:
    """All cached crossings for phi under the current code version."""
    path = Path(path)
    if not path.exists():
        return []
    points: list[CrossingPoint] = []
    stale = False
    with path.open("r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        for line_no, row in enumerate(reader, start=1):
            if line_no == 1 and row == _FIELDS:
                continue
            version, point = _parse_row(row, line_no)
            if version != _code_version():
                stale = True
                continue
            if point.phi == float(phi):
                points.append(point)
    if stale:
        warnings.warn(f"cache {path} holds rows from another code version; "
                      "those rows are ignored and recomputed", stacklevel=2)
    points.sort(key=lambda p: p.t)
    return points


def append_crossings(path: Path | str, points: list[CrossingPoint]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    new_file = not path.exists()
    with path.open("a", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        if new_file:
            writer.writerow(_FIELDS)
        for p in points:
            writer.writerow([_code_version(), repr(p.phi), p.n, repr(p.t),
                             repr(p.zeta.real), repr(p.zeta.imag),
                             repr(p.directed_value)])


def cached_crossings(phi: float, t_max: float, path: Path | str,
                     workers: int = 1) -> list[CrossingPoint]:
    """Crossings on (0, t_max], served from the cache when it covers the range."""
    phi = float(phi)
    cached = load_crossings(path, phi)
    hits = [p for p in cached if p.t <= t_max + 1e-9]
    expected = count_crossings(phi, t_max).count
    if len(hits) == expected:
        return hits
    points = enumerate_crossings(phi, t_max, workers=workers)
    known = {(p.n, p.t) for p in cached}
    append_crossings(path, [p for p in points if (p.n, p.t) not in known])
    return points
