"""Built-in named scenarios.

Every preset constructs identically on every run (fixed constants, no
randomness).  Wind directions are pinned as exact vectors.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ScenarioError
from .scenario import (AircraftModel, ElevationField, GridSpec, GridWind,
                       GrrProblem, MrapProblem, Scenario, SolveOptions,
                       UniformWind, ZeroWind)

# Barrier geometry shared by the barrier presets: a one-cell wall on the
# x = 50 column.  The infinite wall leaves two 3-cell openings.
BARRIER_X = 50.0
GAP_LO = (30.0, 32.0)    # south opening, inclusive node band in y
GAP_HI = (68.0, 70.0)    # north opening
FINITE_BARRIER_GRR_HEIGHT = 45.0
FINITE_BARRIER_MRA_HEIGHT = 60.0

# Staircase terrain: two steps across x, flat otherwise.
STAIR_STEP_1 = 33.0
STAIR_STEP_2 = 66.0
STAIR_H1 = 100.0
STAIR_H2 = 200.0
STAIRCASE_AIRFIELD = (0.0, 70.0)

_DEG = math.pi / 180.0


def _grid101() -> GridSpec:
    return GridSpec(n_cols=101, n_rows=101, spacing=1.0)


def _flat(grid: GridSpec) -> ElevationField:
    return ElevationField.flat(grid, 0.0)


def _wind_toward(speed: float, bearing_deg: float) -> UniformWind:
    return UniformWind(vector=(speed * math.cos(bearing_deg * _DEG),
                               speed * math.sin(bearing_deg * _DEG)))


def _barrier_elevation(grid: GridSpec, wall_value: float,
                       gaps: tuple = ()) -> ElevationField:
    values = np.zeros(grid.n_nodes)
    xs = grid.positions()[:, 0]
    ys = grid.positions()[:, 1]
    # The wall band and openings have fixed physical extents (thickness 1,
    # half a unit past the named band) so coarse and refined grids
    # discretize the same geometry.
    on_wall = np.abs(xs - BARRIER_X) < 0.5
    in_gap = np.zeros(grid.n_nodes, dtype=bool)
    for lo, hi in gaps:
        in_gap |= (ys >= lo - 0.5) & (ys <= hi + 0.5)
    values[on_wall & ~in_gap] = wall_value
    return ElevationField(values, grid)


def _staircase_elevation(grid: GridSpec) -> ElevationField:
    xs = grid.positions()[:, 0]
    values = np.zeros(grid.n_nodes)
    values[xs > STAIR_STEP_1] = STAIR_H1
    values[xs > STAIR_STEP_2] = STAIR_H2
    return ElevationField(values, grid)


def _single_peak_elevation(grid: GridSpec) -> ElevationField:
    pos = grid.positions()
    d2 = (pos[:, 0] - 60.0) ** 2 + (pos[:, 1] - 50.0) ** 2
    return ElevationField(80.0 * np.exp(-d2 / (2.0 * 12.0 ** 2)), grid)


def _ridge_elevation(grid: GridSpec) -> ElevationField:
    xs = grid.positions()[:, 0]
    return ElevationField(45.0 * np.exp(-((xs - 60.0) ** 2) / (2.0 * 8.0 ** 2)),
                          grid)


def _shear_wind(grid: GridSpec) -> GridWind:
    # Northward wind whose strength varies linearly across x.
    xs = grid.positions()[:, 0]
    vectors = np.stack([np.zeros(grid.n_nodes), (50.0 - xs) / 100.0], axis=1)
    return GridWind(grid, vectors)


def _fixed_airspeed() -> AircraftModel:
    return AircraftModel(mode="fixed-airspeed", airspeed=1.0, sink=1.0)


def _constant(g0: float = 1.0) -> AircraftModel:
    return AircraftModel(mode="constant", g0=g0)


def _grrp_flat_uniform_wind() -> Scenario:
    grid = _grid101()
    return Scenario(grid=grid, elevation=_flat(grid),
                    wind=_wind_toward(0.6, 240.0), aircraft=_fixed_airspeed(),
                    problem=GrrProblem(start_xy=(50.0, 50.0), z0=100.0),
                    options=SolveOptions(seed_radius=2.9),
                    name="grrp-flat-uniform-wind")


def _grrp_flat() -> Scenario:
    grid = _grid101()
    return Scenario(grid=grid, elevation=_flat(grid),
                    wind=_wind_toward(0.6, 225.0), aircraft=_fixed_airspeed(),
                    problem=GrrProblem(start_xy=(50.0, 50.0), z0=100.0),
                    options=SolveOptions(seed_radius=2.9),
                    name="grrp-flat")


def _grrp_infinite_barrier() -> Scenario:
    grid = _grid101()
    elevation = _barrier_elevation(grid, float("inf"), (GAP_LO, GAP_HI))
    return Scenario(grid=grid, elevation=elevation,
                    wind=UniformWind(vector=(0.0, 0.4)),
                    aircraft=_fixed_airspeed(),
                    problem=GrrProblem(start_xy=(10.0, 50.0), z0=120.0),
                    options=SolveOptions(seed_radius=2.9),
                    name="grrp-infinite-barrier")


def _grrp_finite_barrier_45() -> Scenario:
    grid = _grid101()
    elevation = _barrier_elevation(grid, FINITE_BARRIER_GRR_HEIGHT)
    return Scenario(grid=grid, elevation=elevation,
                    wind=UniformWind(vector=(0.0, 0.3)),
                    aircraft=_fixed_airspeed(),
                    problem=GrrProblem(start_xy=(10.0, 50.0), z0=120.0),
                    options=SolveOptions(seed_radius=2.9),
                    name="grrp-finite-barrier-45")


def _grrp_mountain_range() -> Scenario:
    grid = _grid101()
    return Scenario(grid=grid, elevation=_ridge_elevation(grid),
                    wind=_shear_wind(grid), aircraft=_fixed_airspeed(),
                    problem=GrrProblem(start_xy=(10.0, 50.0), z0=110.0),
                    options=SolveOptions(seed_radius=2.9),
                    name="grrp-mountain-range")


def _mrap_flat() -> Scenario:
    grid = _grid101()
    return Scenario(grid=grid, elevation=_flat(grid), wind=ZeroWind(),
                    aircraft=_constant(1.0),
                    problem=MrapProblem(airfield_xy=(50.0, 50.0)),
                    name="mrap-flat")


def _mrap_infinite_barrier(spacing: float = 1.0) -> Scenario:
    if spacing == 1.0:
        grid = _grid101()
        name = "mrap-infinite-barrier"
    else:
        grid = GridSpec(n_cols=404, n_rows=404, spacing=spacing)
        name = "mrap-infinite-barrier-fine"
    elevation = _barrier_elevation(grid, float("inf"), (GAP_LO, GAP_HI))
    return Scenario(grid=grid, elevation=elevation, wind=ZeroWind(),
                    aircraft=_constant(1.0),
                    problem=MrapProblem(airfield_xy=(10.0, 50.0)), name=name)


def _mrap_finite_barrier_60() -> Scenario:
    grid = _grid101()
    elevation = _barrier_elevation(grid, FINITE_BARRIER_MRA_HEIGHT)
    return Scenario(grid=grid, elevation=elevation, wind=ZeroWind(),
                    aircraft=_constant(1.0),
                    problem=MrapProblem(airfield_xy=(10.0, 50.0)),
                    name="mrap-finite-barrier-60")


def _staircase() -> Scenario:
    grid = _grid101()
    return Scenario(grid=grid, elevation=_staircase_elevation(grid),
                    wind=ZeroWind(), aircraft=_constant(1.0),
                    problem=MrapProblem(airfield_xy=STAIRCASE_AIRFIELD),
                    name="staircase")


def _single_peak() -> Scenario:
    grid = _grid101()
    return Scenario(grid=grid, elevation=_single_peak_elevation(grid),
                    wind=ZeroWind(), aircraft=_constant(1.0),
                    problem=MrapProblem(airfield_xy=(15.0, 50.0)),
                    name="single-peak")


_BUILDERS = {
    "grrp-flat-uniform-wind": _grrp_flat_uniform_wind,
    "grrp-flat": _grrp_flat,
    "grrp-infinite-barrier": _grrp_infinite_barrier,
    "grrp-finite-barrier-45": _grrp_finite_barrier_45,
    "grrp-mountain-range": _grrp_mountain_range,
    "mrap-flat": _mrap_flat,
    "mrap-infinite-barrier": _mrap_infinite_barrier,
    "mrap-infinite-barrier-fine": lambda: _mrap_infinite_barrier(0.25),
    "mrap-finite-barrier-60": _mrap_finite_barrier_60,
    "staircase": _staircase,
    "single-peak": _single_peak,
}

_ALIASES = {
    "flat-uniform-wind": "grrp-flat-uniform-wind",
}

DESCRIPTIONS = {
    "grrp-flat-uniform-wind": "Reachable region: flat terrain, uniform wind 0.6 toward 240°, z0=100",
    "grrp-flat": "Reachable region: flat terrain, uniform wind 0.6 toward 225°, z0=100",
    "grrp-infinite-barrier": "Reachable region: impassable wall at x=50 with two 3-cell openings, wind 0.4 north, z0=120",
    "grrp-finite-barrier-45": "Reachable region: 45-high wall at x=50, wind 0.3 north, z0=120",
    "grrp-mountain-range": "Reachable region: north-south ridge, sheared northward wind, z0=110",
    "mrap-flat": "Return altitude: flat terrain, glide ratio 1, airfield at (50, 50)",
    "mrap-infinite-barrier": "Return altitude: impassable wall at x=50 with two openings, airfield at (10, 50)",
    "mrap-infinite-barrier-fine": "Return altitude: same wall scenario at 4x finer spacing (404x404)",
    "mrap-finite-barrier-60": "Return altitude: 60-high wall at x=50, airfield at (10, 50)",
    "staircase": "Return altitude: two terrain steps (heights 100 and 200), airfield at (0, 70)",
    "single-peak": "Return altitude: single Gaussian peak east of the airfield",
}


def preset_names() -> list[str]:
    return sorted(_BUILDERS) + sorted(_ALIASES)


def build_preset(name: str) -> Scenario:
    canonical = _ALIASES.get(name, name)
    if canonical not in _BUILDERS:
        raise ScenarioError(f"unknown preset {name!r}")
    return _BUILDERS[canonical]()


def preset_description(name: str) -> str:
    return DESCRIPTIONS.get(_ALIASES.get(name, name), "")
