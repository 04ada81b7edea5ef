import numpy as np
import pytest

import gliderange as g
from gliderange.errors import UnsupportedConfigurationError
from gliderange.verification import seed_exclusion_mask


def test_flat_matches_radial_closed_form():
    scenario = g.build_preset("mrap-flat")
    result = g.solve_mrap(scenario)
    pos = scenario.grid.positions()
    oracle = np.array([
        g.mrap_oracle_flat(scenario.problem.airfield_xy,
                           scenario.aircraft.g0, p) for p in pos])
    exclude = seed_exclusion_mask(scenario, 30.0)
    keep = ~exclude & (oracle > 1e-9)
    rel = (result.V[keep] - oracle[keep]) / oracle[keep]
    assert rel.min() >= -1e-9
    assert rel.max() <= 0.04


def test_terrain_dominance():
    for name in ("staircase", "single-peak", "mrap-infinite-barrier"):
        scenario = g.build_preset(name)
        result = g.solve_mrap(scenario)
        E = scenario.elevation.values
        finite = np.isfinite(result.V) & np.isfinite(E)
        assert np.all(result.V[finite] >= E[finite] - 1e-9), name


def test_staircase_matches_piecewise_oracle():
    scenario = g.build_preset("staircase")
    result = g.solve_mrap(scenario)
    grid = scenario.grid
    airfield = np.asarray(scenario.problem.airfield_xy)
    # Step interiors, away from both the airfield and the step edges.
    for xy in [(10.0, 70.0), (20.0, 40.0), (45.0, 50.0), (60.0, 20.0),
               (80.0, 30.0), (95.0, 60.0)]:
        node = grid.nearest_node(xy)
        rel_xy = np.asarray(xy) - airfield
        oracle = g.mrap_oracle_staircase(rel_xy)
        assert result.V[node] == pytest.approx(oracle, rel=0.06), xy


def test_impassable_cells_stay_infinite():
    scenario = g.build_preset("mrap-infinite-barrier")
    result = g.solve_mrap(scenario)
    E = scenario.elevation.values
    assert np.all(~np.isfinite(result.V[~np.isfinite(E)]))


def test_airfield_on_impassable_terrain_rejected():
    n = 11
    with pytest.raises(g.ScenarioError):
        g.load_scenario({
            "grid": {"n_cols": n, "n_rows": n, "spacing": 1.0},
            "elevation": [None] * (n * n),
            "aircraft": {"mode": "constant", "g0": 1.0},
            "problem": {"kind": "mrap", "airfield_xy": [5.0, 5.0]},
        })


def test_wind_rejected():
    scenario = g.build_preset("mrap-flat")
    cfg = g.scenario_to_config(scenario)
    cfg["wind"] = {"variant": "uniform", "vector": [0.1, 0.0]}
    cfg["aircraft"] = {"mode": "fixed-airspeed", "airspeed": 1.0, "sink": 1.0}
    windy, _ = g.load_scenario(cfg)
    with pytest.raises(UnsupportedConfigurationError):
        g.solve_mrap(windy)


def test_solver_is_deterministic():
    scenario = g.build_preset("staircase")
    a = g.solve_mrap(scenario)
    b = g.solve_mrap(scenario)
    assert np.array_equal(a.V, b.V)
