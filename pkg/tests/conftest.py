import numpy as np
import pytest

import gliderange as g


@pytest.fixture(scope="session")
def warm_kernel():
    """Compile the ordered-upwind kernel once so timings measure solves."""
    g.solve_grrp_oum(g.load_scenario("grrp-flat")[0])


@pytest.fixture(scope="session")
def benchmark_runs():
    """Memoized access to benchmark runs shared across test modules."""
    cache = {}

    def run(name):
        if name not in cache:
            cache[name] = g.run_benchmark(name)
        return cache[name]

    return run


def make_flat_windless(n=51, spacing=1.0, g0=1.0, z0=100.0, start=None):
    """Small flat windless reachable-region scenario for unit tests."""
    if start is None:
        start = ((n - 1) * spacing / 2.0, (n - 1) * spacing / 2.0)
    return g.load_scenario({
        "grid": {"n_cols": n, "n_rows": n, "spacing": spacing},
        "elevation": [0.0] * (n * n),
        "aircraft": {"mode": "constant", "g0": g0},
        "problem": {"kind": "grr", "start_xy": list(start), "z0": z0},
    })[0]


def make_walled_windless(n=51, wall_cols=(24, 25), gap_rows=(23, 27),
                         wall_height=1e9, z0=1000.0):
    """Flat scenario with a thick vertical wall pierced by one gap."""
    elev = np.zeros((n, n))
    for c in wall_cols:
        elev[:, c] = wall_height
    lo, hi = gap_rows
    for c in wall_cols:
        elev[lo:hi + 1, c] = 0.0
    return g.load_scenario({
        "grid": {"n_cols": n, "n_rows": n, "spacing": 1.0},
        "elevation": [None if v >= 1e8 else float(v) for v in elev.ravel()],
        "aircraft": {"mode": "constant", "g0": 1.0},
        "problem": {"kind": "grr", "start_xy": [10.0, 25.0], "z0": z0},
    })[0]
