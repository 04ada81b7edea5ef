import numpy as np
import pytest

import gliderange as g
from gliderange.ascii_grid import export_ascii_grid, import_ascii_grid
from gliderange.errors import ScenarioError
from gliderange.scenario import ElevationField


def _make(grid_shape=(4, 3), spacing=2.0, origin=(10.0, 20.0)):
    n_cols, n_rows = grid_shape
    grid = g.GridSpec(n_cols=n_cols, n_rows=n_rows, spacing=spacing,
                      origin=origin)
    values = np.arange(n_cols * n_rows, dtype=float)
    values[5] = np.inf        # one impassable cell
    return grid, ElevationField(values, grid)


def test_round_trip(tmp_path):
    grid, elevation = _make()
    path = tmp_path / "terrain.asc"
    export_ascii_grid(path, grid, elevation)
    rgrid, relev = import_ascii_grid(path)
    assert rgrid.n_cols == grid.n_cols
    assert rgrid.n_rows == grid.n_rows
    assert rgrid.spacing == grid.spacing
    assert rgrid.origin == grid.origin
    assert np.array_equal(relev.values, elevation.values)


def test_nodata_becomes_impassable(tmp_path):
    path = tmp_path / "t.asc"
    path.write_text("ncols 2\nnrows 2\nxllcorner 0\nyllcorner 0\n"
                    "cellsize 1\nNODATA_value -9999\n"
                    "1 2\n-9999 4\n")
    _, elev = import_ascii_grid(path)
    # File rows are north-first; the NODATA cell is in the south row.
    assert np.isinf(elev.values[0])
    assert np.isfinite(elev.values[2])


def test_missing_header_rejected(tmp_path):
    path = tmp_path / "bad.asc"
    path.write_text("ncols 2\nnrows 2\ncellsize 1\n1 2 3 4\n")
    with pytest.raises(ScenarioError):
        import_ascii_grid(path)


def test_wrong_cell_count_rejected(tmp_path):
    path = tmp_path / "bad.asc"
    path.write_text("ncols 2\nnrows 2\nxllcorner 0\nyllcorner 0\n"
                    "cellsize 1\n1 2 3\n")
    with pytest.raises(ScenarioError):
        import_ascii_grid(path)


def test_non_numeric_value_rejected(tmp_path):
    path = tmp_path / "bad.asc"
    path.write_text("ncols 2\nnrows 2\nxllcorner 0\nyllcorner 0\n"
                    "cellsize 1\n1 2 x 4\n")
    with pytest.raises(ScenarioError):
        import_ascii_grid(path)


def test_scenario_with_raster_elevation(tmp_path):
    grid, elevation = _make(grid_shape=(5, 5), spacing=1.0, origin=(0.0, 0.0))
    path = tmp_path / "terrain.asc"
    export_ascii_grid(path, grid, elevation)
    scenario, _ = g.load_scenario({
        "grid": {"n_cols": 5, "n_rows": 5, "spacing": 1.0},
        "elevation": {"raster": str(path)},
        "aircraft": {"mode": "constant", "g0": 1.0},
        "problem": {"kind": "grr", "start_xy": [2.0, 2.0], "z0": 100.0},
    })
    assert np.array_equal(scenario.elevation.values, elevation.values)
