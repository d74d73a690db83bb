"""Wall-clock comparison of the numba kernels against the pure-NumPy fallback.

Runs every hot kernel on acceptance-scale inputs under both paths and prints
a table with the speedup.  The numba path gets one unmeasured warm-up call so
JIT compilation is excluded from the timings.

Run:

    python benchmarks/bench_kernels.py

If numba is unavailable only the NumPy column is reported.
"""

import statistics
import time

import numpy as np

from antipodal import kernels
from antipodal.boundary import build_graph, discretize_boundary
from antipodal.generators import circle_config
from antipodal.geometry import convex_hull

REPEATS = 3


def _make_inputs():
    rng = np.random.default_rng(42)
    pts = rng.random((4000, 2)) - 0.5
    hull = convex_hull(circle_config(10_000))
    boxing = discretize_boundary(hull, 1 / 512)
    graph = build_graph(boxing)
    x = rng.random(graph.k)
    return {
        "points": pts,
        "boxing": boxing,
        "graph": graph,
        "x": x,
    }


def _benchmarks(data):
    boxing = data["boxing"]
    graph = data["graph"]

    def pair_counts():
        return kernels.pair_threshold_counts(data["points"], 0.05)

    def adjacency():
        return kernels.box_adjacency_csr(
            boxing.centers[:, 0].copy(), boxing.centers[:, 1].copy(),
            boxing.side, boxing.epsilon,
        )

    def matvec_x200():
        y = data["x"]
        for _ in range(200):
            y = kernels.csr_matvec(graph.indptr, graph.indices, graph.row_index, y)
            y = y / np.linalg.norm(y)
        return y

    def common_rows_x64():
        out = 0
        for i in range(0, graph.k, graph.k // 64):
            out += int(
                kernels.common_neighbor_counts(
                    graph.indptr, graph.indices, graph.row_index, i
                ).sum()
            )
        return out

    def raster():
        return kernels.annuli_occupancy_grid(
            0.05, 1 - 0.005, 1.0, 0.0025, -320, 320, 380, 404, 8
        )

    return {
        "pair counts (n=4000)": pair_counts,
        f"box adjacency (k={graph.k})": adjacency,
        "csr matvec x200": matvec_x200,
        "common-neighbor rows x64": common_rows_x64,
        "annuli raster (d=0.05)": raster,
    }


def _time(fn):
    runs = []
    for _ in range(REPEATS):
        t0 = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs)


def main():
    data = _make_inputs()
    benches = _benchmarks(data)

    timings = {}
    for use_numba in (False, True):
        if use_numba and not kernels.HAVE_NUMBA:
            print("numba not importable; skipping the jit column")
            continue
        kernels.USE_NUMBA = use_numba
        label = "numba" if use_numba else "numpy"
        if use_numba:
            for fn in benches.values():
                fn()  # warm-up: trigger compilation outside the timer
        timings[label] = {name: _time(fn) for name, fn in benches.items()}

    width = max(map(len, benches)) + 2
    header = f"{'kernel':{width}s} {'numpy (s)':>12s} {'numba (s)':>12s} {'speedup':>9s}"
    print(header)
    print("-" * len(header))
    for name in benches:
        t_np = timings["numpy"][name]
        if "numba" in timings:
            t_nb = timings["numba"][name]
            print(f"{name:{width}s} {t_np:12.5f} {t_nb:12.5f} {t_np / t_nb:8.1f}x")
        else:
            print(f"{name:{width}s} {t_np:12.5f} {'-':>12s} {'-':>9s}")


if __name__ == "__main__":
    main()
