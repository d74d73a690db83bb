"""Sweep driver: ε grids over generators and boundary graphs, power-law
exponent fits, margin tracking, CSV emission.

ε grids are geometric (default factor 2) so that log-log exponent fits see
evenly spaced abscissae.  Sweeps are deterministic given specs and seeds and
rerunning writes byte-identical CSV.  Rows with zero antipodes are flagged
vacuous and excluded from fits; rows with n*eps < 10 are kept but a warning
is printed (counts track the continuum heuristics poorly below that).
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

import numpy as np

from .boundary import build_graph, discretize_boundary
from .generators import GeneratorSpec, circle_config, make_config
from .geometry import (
    PointSet,
    VacuousMarginError,
    convex_hull,
    pair_counts,
    ratio_margin,
)
from .spectral import bound_chain

DEFAULT_RATIO_GRID = (0.08, 0.04, 0.02, 0.01, 0.005)
DEFAULT_SPECTRAL_GRID = (1 / 64, 1 / 128, 1 / 256, 1 / 512, 1 / 1024)
SPECTRAL_HULL_POINTS = 10_000

RATIO_COLUMNS = ("epsilon", "n", "neighbors", "antipodes", "ratio", "margin")
SPECTRAL_COLUMNS = ("epsilon", "k", "lambda1", "cw", "sqrtdeg", "trace")


@dataclass(frozen=True)
class SweepRecord:
    """One row of a sweep; the spectral fields are None for ratio sweeps
    and vice versa."""

    epsilon: float
    size: int
    neighbors: int | None = None
    antipodes: int | None = None
    ratio: float | None = None
    margin: float | None = None
    lambda1: float | None = None
    cw: float | None = None
    sqrtdeg: float | None = None
    trace: float | None = None
    vacuous: bool = False


@dataclass(frozen=True)
class ExponentFit:
    alpha: float
    intercept: float
    residual: float
    points_used: int


class SweepAborted(RuntimeError):
    """A row failed; carries the rows completed before the failure."""

    def __init__(self, message: str, partial: list[SweepRecord]):
        super().__init__(message)
        self.partial = partial


def _check_ratio_grid(epsilons) -> list[float]:
    eps = [float(e) for e in epsilons]
    if any(not 0.0 < e <= 0.1 for e in eps):
        raise ValueError("ratio sweep epsilons must lie in (0, 0.1]")
    if any(b >= a for a, b in zip(eps, eps[1:])):
        raise ValueError("epsilons must be strictly decreasing")
    return eps


def sweep_ratio(spec: GeneratorSpec, epsilons) -> list[SweepRecord]:
    """Pair counts, ratio, and margin for one generator across an ε grid.

    arc_center is regenerated at every ε (its construction consumes ε);
    other generators are built once and reused, the point set being held
    fixed while ε varies.
    """
    eps_list = _check_ratio_grid(epsilons)
    records: list[SweepRecord] = []
    base: PointSet | None = None
    if spec.kind != "arc_center":
        base = make_config(spec)
    for eps in eps_list:
        try:
            ps = make_config(spec, eps) if spec.kind == "arc_center" else base
            counts = pair_counts(ps, eps)
        except Exception as exc:
            raise SweepAborted(
                f"{spec.label()} failed at eps={eps}: {exc}", records
            ) from exc
        if ps.n * eps < 10.0:
            print(
                f"warning: {spec.label()} at eps={eps}: n*eps = {ps.n * eps:.3g} < 10, "
                "counts may not track continuum behavior",
                file=sys.stderr,
            )
        if counts.antipodes == 0:
            records.append(
                SweepRecord(epsilon=eps, size=ps.n, neighbors=counts.neighbors,
                            antipodes=0, vacuous=True)
            )
            continue
        records.append(
            SweepRecord(
                epsilon=eps,
                size=ps.n,
                neighbors=counts.neighbors,
                antipodes=counts.antipodes,
                ratio=counts.neighbors / counts.antipodes,
                margin=ratio_margin(counts),
            )
        )
    return records


def sweep_spectral(epsilons, hull_points: int = SPECTRAL_HULL_POINTS) -> list[SweepRecord]:
    """Bound chain across an ε grid on the fixed diameter-1 circle boundary.

    The hull source is the convex hull of circle_config(hull_points).
    """
    eps_list = [float(e) for e in epsilons]
    if any(not 0.0 < e < 0.5 for e in eps_list):
        raise ValueError("spectral sweep epsilons must lie in (0, 1/2)")
    hull = convex_hull(circle_config(hull_points))
    records: list[SweepRecord] = []
    for eps in eps_list:
        try:
            boxing = discretize_boundary(hull, eps)
            graph = build_graph(boxing)
            report = bound_chain(graph)
        except Exception as exc:
            raise SweepAborted(f"spectral sweep failed at eps={eps}: {exc}",
                               records) from exc
        records.append(
            SweepRecord(
                epsilon=eps,
                size=boxing.k,
                lambda1=report.lambda1,
                cw=report.cw_bound,
                sqrtdeg=report.sqrt_degree_bound,
                trace=report.trace_bound,
            )
        )
    return records


_FIT_FIELDS = {
    "neighbors", "antipodes", "ratio", "margin", "lambda1", "cw", "sqrtdeg", "trace",
}


def fit_exponent(records: list[SweepRecord], fit_field: str) -> ExponentFit:
    """OLS of log(field) against log(ε) over the non-vacuous records."""
    if fit_field not in _FIT_FIELDS:
        raise ValueError(f"unknown fit field {fit_field!r}")
    usable = [r for r in records if not r.vacuous and getattr(r, fit_field) is not None]
    if len(usable) < 3:
        raise ValueError(f"need at least 3 non-vacuous records, have {len(usable)}")
    values = np.array([getattr(r, fit_field) for r in usable], dtype=np.float64)
    if (values <= 0.0).any():
        raise ValueError(f"field {fit_field!r} must be positive for a log-log fit")
    x = np.log([r.epsilon for r in usable])
    y = np.log(values)
    alpha, intercept = np.polyfit(x, y, 1)
    residual = float(np.abs(y - (alpha * x + intercept)).max())
    return ExponentFit(
        alpha=float(alpha),
        intercept=float(intercept),
        residual=residual,
        points_used=len(usable),
    )


def theorem_margin_report(specs: list[GeneratorSpec], epsilons) -> float:
    """Smallest ratio margin over all non-vacuous rows of all sweeps.

    This is the largest universal proportionality constant consistent with
    every configuration examined; per-spec minima are printed.
    """
    if not specs:
        raise ValueError("at least one generator spec is required")
    overall = math.inf
    any_rows = False
    for spec in specs:
        margins = [
            r.margin for r in sweep_ratio(spec, epsilons) if not r.vacuous
        ]
        if not margins:
            print(f"{spec.label()}: all rows vacuous", file=sys.stderr)
            continue
        any_rows = True
        m = min(margins)
        print(f"{spec.label()}: min margin {m:.6g}")
        overall = min(overall, m)
    if not any_rows:
        raise VacuousMarginError("every sweep row was vacuous")
    return overall


# ---------------------------------------------------------------------------
# CSV emission: '.' decimal point, repr round-trip floats, header mandatory
# ---------------------------------------------------------------------------

def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def ratio_csv_rows(records: list[SweepRecord]) -> list[str]:
    lines = [",".join(RATIO_COLUMNS)]
    for r in records:
        lines.append(
            ",".join(_fmt(v) for v in
                     (r.epsilon, r.size, r.neighbors, r.antipodes, r.ratio, r.margin))
        )
    return lines


def spectral_csv_rows(records: list[SweepRecord]) -> list[str]:
    lines = [",".join(SPECTRAL_COLUMNS)]
    for r in records:
        lines.append(
            ",".join(_fmt(v) for v in
                     (r.epsilon, r.size, r.lambda1, r.cw, r.sqrtdeg, r.trace))
        )
    return lines


def write_csv(path, lines: list[str]) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def geometric_grid(start: float, factor: float, count: int) -> list[float]:
    if count < 1:
        raise ValueError("count must be >= 1")
    if not 0.0 < factor < 1.0:
        raise ValueError("factor must lie in (0, 1) so the grid decreases")
    return [start * factor**t for t in range(count)]
