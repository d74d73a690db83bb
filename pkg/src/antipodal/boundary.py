"""Boundary discretization into ε/2 boxes and the antipodal box graph.

The convex hull boundary is marched by arc length in steps of ε/2 and an
axis-aligned square box of side ε/2 is centered at every sample point.  Two
boxes are adjacent when their maximum point-to-point distance reaches
1 - ε.  On top of the graph: degrees, common neighborhoods, the near-set W
of a vertex, and the tail counts T_s used to probe how common-neighborhood
sizes decay for far-apart boxes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from . import kernels
from .geometry import ConvexPolygon, Point

DENSE_LIMIT = 4096


class IsolatedVertexError(ValueError):
    """The requested vertex has no neighbors."""


class Box(NamedTuple):
    center: Point
    side: float

    def corners(self) -> list[Point]:
        h = self.side / 2.0
        cx, cy = self.center
        return [
            Point(cx - h, cy - h),
            Point(cx + h, cy - h),
            Point(cx + h, cy + h),
            Point(cx - h, cy + h),
        ]


@dataclass(frozen=True)
class BoundaryBoxing:
    """Ordered chain of side-(ε/2) boxes along a hull boundary."""

    centers: np.ndarray
    epsilon: float

    def __post_init__(self):
        c = np.ascontiguousarray(self.centers, dtype=np.float64)
        c.setflags(write=False)
        object.__setattr__(self, "centers", c)
        if self.k < 3:
            raise ValueError("boundary boxing needs at least 3 boxes")

    @property
    def k(self) -> int:
        return self.centers.shape[0]

    @property
    def side(self) -> float:
        return self.epsilon / 2.0

    def box(self, i: int) -> Box:
        cx, cy = self.centers[i]
        return Box(Point(float(cx), float(cy)), self.side)


def discretize_boundary(hull: ConvexPolygon, epsilon: float) -> BoundaryBoxing:
    """March the polygon boundary at arc-length steps of ε/2.

    Produces k = ceil(perimeter / (ε/2)) boxes; the final gap (back to the
    start vertex) may be shorter than ε/2.
    """
    epsilon = float(epsilon)
    if not 0.0 < epsilon < 0.5:
        raise ValueError(f"epsilon must lie in (0, 1/2), got {epsilon}")
    if epsilon >= hull.perimeter / 3.0:
        raise ValueError(
            f"epsilon {epsilon} too coarse for perimeter {hull.perimeter:.6g}"
        )
    step = epsilon / 2.0
    k = math.ceil(hull.perimeter / step)

    verts = hull.vertices
    edges = np.roll(verts, -1, axis=0) - verts
    lengths = np.hypot(edges[:, 0], edges[:, 1])
    cum = np.concatenate([[0.0], np.cumsum(lengths)])

    s = np.arange(k) * step
    edge_idx = np.clip(np.searchsorted(cum, s, side="right") - 1, 0, len(lengths) - 1)
    local = (s - cum[edge_idx]) / lengths[edge_idx]
    centers = verts[edge_idx] + local[:, None] * edges[edge_idx]
    return BoundaryBoxing(centers, epsilon)


def box_max_distance(a: Box, b: Box) -> float:
    """Exact max distance between two closed squares: max over corner pairs."""
    best = 0.0
    for pa in a.corners():
        for pb in b.corners():
            d = math.hypot(pa.x - pb.x, pa.y - pb.y)
            if d > best:
                best = d
    return best


def box_min_distance(a: Box, b: Box) -> float:
    """Exact min distance between two closed axis-aligned squares."""
    h = (a.side + b.side) / 2.0
    gx = max(0.0, abs(a.center.x - b.center.x) - h)
    gy = max(0.0, abs(a.center.y - b.center.y) - h)
    return math.hypot(gx, gy)


@dataclass(frozen=True)
class AntipodalGraph:
    """Symmetric 0/1 box adjacency with degrees and edge count.

    Neighbor lists (CSR, sorted) are always kept; a dense uint8 matrix is
    also stored for k <= 4096.  Both representations answer degree and
    common-neighbor queries identically.
    """

    k: int
    indptr: np.ndarray
    indices: np.ndarray
    degrees: np.ndarray = field(init=False)
    edge_count: int = field(init=False)
    dense: np.ndarray | None = field(init=False, default=None)

    def __post_init__(self):
        deg = np.diff(self.indptr).astype(np.int64)
        object.__setattr__(self, "degrees", deg)
        object.__setattr__(self, "edge_count", int(deg.sum()) // 2)
        if self.k <= DENSE_LIMIT:
            dense = np.zeros((self.k, self.k), dtype=np.uint8)
            dense[self.row_index, self.indices] = 1
            object.__setattr__(self, "dense", dense)

    @cached_property
    def row_index(self) -> np.ndarray:
        """Per-CSR-entry row number (companion to `indices`)."""
        return np.repeat(np.arange(self.k, dtype=np.int64), self.degrees)

    @property
    def adjacency(self) -> np.ndarray:
        if self.dense is not None:
            return self.dense
        dense = np.zeros((self.k, self.k), dtype=np.uint8)
        dense[self.row_index, self.indices] = 1
        return dense

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    def matvec(self, x: np.ndarray) -> np.ndarray:
        return kernels.csr_matvec(self.indptr, self.indices, self.row_index, x)

    @classmethod
    def from_dense(cls, matrix) -> "AntipodalGraph":
        m = np.asarray(matrix)
        k = m.shape[0]
        if m.shape != (k, k):
            raise ValueError("adjacency must be square")
        if (m != m.T).any() or np.diagonal(m).any():
            raise ValueError("adjacency must be symmetric with zero diagonal")
        rows, cols = np.nonzero(m)
        indptr = np.zeros(k + 1, np.int64)
        indptr[1:] = np.cumsum(np.bincount(rows, minlength=k))
        return cls(k=k, indptr=indptr, indices=cols.astype(np.int64))


def build_graph(boxing: BoundaryBoxing) -> AntipodalGraph:
    """Adjacency over boxes: i ~ j iff box_max_distance(B_i, B_j) >= 1 - ε."""
    indptr, indices = kernels.box_adjacency_csr(
        boxing.centers[:, 0].copy(),
        boxing.centers[:, 1].copy(),
        boxing.side,
        boxing.epsilon,
    )
    return AntipodalGraph(k=boxing.k, indptr=indptr, indices=indices)


def near_set_W(boxing: BoundaryBoxing, i: int, factor: float = 100.0) -> np.ndarray:
    """Vertices whose box lies within min-distance factor*ε of box i.

    The threshold is inclusive, so i itself is always a member.
    """
    s = boxing.side
    dcx = np.abs(boxing.centers[:, 0] - boxing.centers[i, 0])
    dcy = np.abs(boxing.centers[:, 1] - boxing.centers[i, 1])
    gx = np.maximum(dcx - s, 0.0)
    gy = np.maximum(dcy - s, 0.0)
    near = np.hypot(gx, gy) <= factor * boxing.epsilon
    return np.nonzero(near)[0]


def common_neighbors(G: AntipodalGraph, i: int, j: int) -> int:
    """|N(i) & N(j)| via sorted neighbor-list intersection."""
    if i == j:
        raise ValueError("common_neighbors requires distinct vertices")
    a = G.neighbors(i)
    b = G.neighbors(j)
    return int(np.intersect1d(a, b, assume_unique=True).size)


def common_neighbor_row(G: AntipodalGraph, i: int) -> np.ndarray:
    """Vector of |N(i) & N(j)| over all j (j = i entry equals d_i)."""
    return kernels.common_neighbor_counts(G.indptr, G.indices, G.row_index, i)


def tail_counts(G: AntipodalGraph, i: int, W: np.ndarray) -> np.ndarray:
    """T_s = #{j in V \\ W : |N(i) & N(j)| >= s} for s = 1..k.

    sum(T_s) over s equals the direct sum of common-neighbor counts over
    V \\ W (layer-cake identity).
    """
    counts = common_neighbor_row(G, i)
    mask = np.ones(G.k, dtype=bool)
    mask[np.asarray(W, dtype=np.int64)] = False
    vals = counts[mask]
    hist = np.bincount(vals, minlength=G.k + 1)
    # T_s = number of vals >= s; hist[0] never contributes
    tail = np.cumsum(hist[::-1])[::-1]
    return tail[1 : G.k + 1].astype(np.int64)


def neighborhood_degree_sum(G: AntipodalGraph, i: int) -> int:
    """Sum of degrees over N(i); equals sum_j |N(j) & N(i)| by double counting."""
    if G.degrees[i] < 1:
        raise IsolatedVertexError(f"vertex {i} is isolated")
    return int(G.degrees[G.neighbors(i)].sum())


def max_scaled_tail(boxing: BoundaryBoxing, G: AntipodalGraph,
                    factor: float = 100.0) -> float:
    """max over vertices i and s of s * T_s / k (the tail-bound constant)."""
    best = 0.0
    ks = np.arange(1, G.k + 1, dtype=np.float64)
    for i in range(G.k):
        counts = common_neighbor_row(G, i)
        W = near_set_W(boxing, i, factor)
        mask = np.ones(G.k, dtype=bool)
        mask[W] = False
        vals = np.sort(counts[mask])[::-1]
        if vals.size == 0 or vals[0] == 0:
            continue
        m = float((vals * ks[: vals.size]).max())
        if m > best:
            best = m
    return best / G.k


def max_neighborhood_degree_sum(G: AntipodalGraph) -> int:
    """max over non-isolated i of sum of degrees over N(i)."""
    sums = G.matvec(G.degrees.astype(np.float64))
    return int(sums.max())
