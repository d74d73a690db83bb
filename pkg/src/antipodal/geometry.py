"""Planar primitives: pair counts at both distance thresholds, diameter,
convex hull, boundary bands, and the neighbor/antipode ratio margin.

Conventions used throughout the package:

* a *neighbor* pair is at distance <= epsilon, an *antipode* pair at
  distance >= 1 - epsilon, both thresholds inclusive;
* epsilon must lie in the open interval (0, 1/2) -- beyond that the two
  thresholds lose meaning for diameter-1 sets (fitted constants are only
  meaningful for epsilon <= 0.1, see README);
* natural logarithm everywhere;
* geometric equality tolerance is 1e-12 absolute on coordinates in [-1, 1].

All operations are pure functions of immutable inputs and are safe to call
concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np

from . import kernels

GEOM_TOL = 1e-12


class Point(NamedTuple):
    x: float
    y: float


class DegenerateHullError(ValueError):
    """All input points are collinear; no 2D convex hull exists."""


class VacuousMarginError(ValueError):
    """No antipodal pairs: the ratio margin is vacuous for this configuration."""


def _as_coords(points) -> np.ndarray:
    arr = np.ascontiguousarray(points, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) array of points, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError("point coordinates must be finite")
    return arr


@dataclass(frozen=True)
class PointSet:
    """Ordered finite list of planar points, optionally certified diameter <= 1."""

    coords: np.ndarray
    normalized: bool = False

    def __post_init__(self):
        arr = _as_coords(self.coords)
        arr.setflags(write=False)
        object.__setattr__(self, "coords", arr)
        if self.normalized and self.n >= 2:
            if diameter(self) > 1.0 + 1e-9:
                raise ValueError("normalized point set has diameter > 1 + 1e-9")

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    @property
    def points(self) -> list[Point]:
        return [Point(float(x), float(y)) for x, y in self.coords]

    @classmethod
    def from_points(cls, pts: Iterable[tuple[float, float]], normalized: bool = False):
        return cls(np.asarray(list(pts), dtype=np.float64).reshape(-1, 2), normalized)


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon, vertices in counterclockwise order."""

    vertices: np.ndarray
    perimeter: float = field(default=0.0)

    def __post_init__(self):
        verts = _as_coords(self.vertices)
        verts.setflags(write=False)
        object.__setattr__(self, "vertices", verts)
        edges = np.diff(np.vstack([verts, verts[:1]]), axis=0)
        peri = float(np.hypot(edges[:, 0], edges[:, 1]).sum())
        object.__setattr__(self, "perimeter", peri)

    @property
    def m(self) -> int:
        return self.vertices.shape[0]

    def contains(self, x: float, y: float, tol: float = GEOM_TOL) -> bool:
        """Point-in-polygon via signed areas against every CCW edge."""
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        cross = (w[:, 0] - v[:, 0]) * (y - v[:, 1]) - (w[:, 1] - v[:, 1]) * (x - v[:, 0])
        return bool((cross >= -tol).all())


@dataclass(frozen=True)
class PairCounts:
    neighbors: int
    antipodes: int
    epsilon: float


def _check_epsilon(epsilon: float) -> float:
    epsilon = float(epsilon)
    if not math.isfinite(epsilon) or not 0.0 < epsilon < 0.5:
        raise ValueError(f"epsilon must lie in (0, 1/2), got {epsilon}")
    return epsilon


def pair_counts(ps: PointSet, epsilon: float) -> PairCounts:
    """Exact brute-force counts of neighbor and antipode pairs.

    neighbors = #{i<j : ||x_i - x_j|| <= epsilon},
    antipodes = #{i<j : ||x_i - x_j|| >= 1 - epsilon}.
    """
    epsilon = _check_epsilon(epsilon)
    if ps.n < 2:
        raise ValueError("pair counting needs at least two points")
    near, far = kernels.pair_threshold_counts(ps.coords, epsilon)
    total = ps.n * (ps.n - 1) // 2
    assert near + far <= total
    return PairCounts(neighbors=near, antipodes=far, epsilon=epsilon)


def diameter(ps: PointSet) -> float:
    """Maximum pairwise distance, by exhaustive comparison."""
    if ps.n < 2:
        raise ValueError("diameter needs at least two points")
    return math.sqrt(kernels.max_pairwise_distance_sq(ps.coords))


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(ps: PointSet) -> ConvexPolygon:
    """Convex hull by monotone chain; collinear vertices are pruned.

    Raises DegenerateHullError when all points are collinear.
    """
    if ps.n < 3:
        raise ValueError("convex hull needs at least three points")
    pts = np.unique(ps.coords, axis=0)
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = pts[order]
    if pts.shape[0] < 3:
        raise DegenerateHullError("fewer than three distinct points")

    def half(chain_pts):
        out = []
        for p in chain_pts:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0.0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(pts[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateHullError("all points are collinear")
    return ConvexPolygon(np.array(hull))


def point_segment_distance(px, py, ax, ay, bx, by):
    """Distance from (px, py) to segment (a, b); vectorized over the points."""
    abx = bx - ax
    aby = by - ay
    ab2 = abx * abx + aby * aby
    apx = px - ax
    apy = py - ay
    if ab2 == 0.0:
        return np.hypot(apx, apy)
    t = np.clip((apx * abx + apy * aby) / ab2, 0.0, 1.0)
    return np.hypot(apx - t * abx, apy - t * aby)


def distance_to_boundary(hull: ConvexPolygon, coords: np.ndarray) -> np.ndarray:
    """Distance of each point to the polygon boundary (min over edges)."""
    v = hull.vertices
    w = np.roll(v, -1, axis=0)
    best = np.full(coords.shape[0], np.inf)
    px = coords[:, 0]
    py = coords[:, 1]
    for (ax, ay), (bx, by) in zip(v, w):
        d = point_segment_distance(px, py, ax, ay, bx, by)
        np.minimum(best, d, out=best)
    return best


def boundary_band(ps: PointSet, hull: ConvexPolygon, epsilon: float) -> PointSet:
    """Subset of points within distance epsilon of the hull boundary."""
    epsilon = _check_epsilon(epsilon)
    keep = distance_to_boundary(hull, ps.coords) <= epsilon
    return PointSet(ps.coords[keep].copy(), normalized=False)


def ratio_margin(counts: PairCounts) -> float:
    """Empirical neighbor/antipode margin for one configuration.

    Returns neighbors * sqrt(log(1/eps)) / (antipodes * sqrt(eps)) -- the
    largest proportionality constant this configuration permits between the
    two counts.  Raises VacuousMarginError when there are no antipodes.
    """
    if counts.antipodes < 1:
        raise VacuousMarginError("no antipodal pairs; margin is vacuous")
    eps = counts.epsilon
    return counts.neighbors * math.sqrt(math.log(1.0 / eps)) / (
        counts.antipodes * math.sqrt(eps)
    )


# ---------------------------------------------------------------------------
# point-set text format: one "x y" pair per line, '#' starts a comment line
# ---------------------------------------------------------------------------

def write_points(path, ps: PointSet) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for x, y in ps.coords:
            fh.write(f"{float(x)!r} {float(y)!r}\n")


def read_points(path, normalized: bool = False) -> PointSet:
    rows = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected two reals per line")
            rows.append((float(parts[0]), float(parts[1])))
    return PointSet.from_points(rows, normalized=normalized)
