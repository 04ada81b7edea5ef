"""ESRI ASCII grid raster import/export.

The file format is header lines (ncols, nrows, xllcorner, yllcorner,
cellsize, NODATA_value; keys case-insensitive) followed by whitespace-
delimited values, first row northernmost.  Internally row 0 is the
southernmost row, so rows are flipped on the way in and out.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import ScenarioError
from .scenario import ElevationField, GridSpec

HEADER_KEYS = ("ncols", "nrows", "xllcorner", "yllcorner", "cellsize")


def import_ascii_grid(path) -> tuple[GridSpec, ElevationField]:
    """Read an ESRI ASCII grid into (GridSpec, ElevationField).

    NODATA cells become +inf (impassable).
    """
    text = Path(path).read_text()
    tokens = text.split()
    header: dict[str, float] = {}
    pos = 0
    while pos + 1 < len(tokens):
        key = tokens[pos].lower()
        if key in HEADER_KEYS or key == "nodata_value":
            try:
                header[key] = float(tokens[pos + 1])
            except ValueError as exc:
                raise ScenarioError(f"non-numeric header value for {key}") from exc
            pos += 2
        else:
            break
    for key in HEADER_KEYS:
        if key not in header:
            raise ScenarioError(f"missing header field {key}")

    n_cols = int(header["ncols"])
    n_rows = int(header["nrows"])
    values = tokens[pos:]
    if len(values) != n_cols * n_rows:
        raise ScenarioError(
            f"expected {n_cols * n_rows} values, found {len(values)}")
    try:
        arr = np.array([float(v) for v in values])
    except ValueError as exc:
        raise ScenarioError(f"non-numeric cell value: {exc}") from exc

    nodata = header.get("nodata_value")
    if nodata is not None:
        arr[arr == nodata] = np.inf
    # File rows run north to south; flip to the internal south-first order.
    arr = arr.reshape(n_rows, n_cols)[::-1].reshape(-1)

    grid = GridSpec(n_cols=n_cols, n_rows=n_rows, spacing=header["cellsize"],
                    origin=(header["xllcorner"], header["yllcorner"]))
    return grid, ElevationField(arr, grid)


def export_ascii_grid(path, grid: GridSpec, elevation: ElevationField,
                      nodata_value: float = -9999.0) -> None:
    """Write an ESRI ASCII grid; +inf cells become the NODATA value."""
    arr = elevation.values.reshape(grid.n_rows, grid.n_cols)[::-1]
    with open(path, "w") as fh:
        fh.write(f"ncols {grid.n_cols}\n")
        fh.write(f"nrows {grid.n_rows}\n")
        fh.write(f"xllcorner {grid.origin[0]:.10g}\n")
        fh.write(f"yllcorner {grid.origin[1]:.10g}\n")
        fh.write(f"cellsize {grid.spacing:.10g}\n")
        fh.write(f"NODATA_value {nodata_value:.10g}\n")
        for row in arr:
            fh.write(" ".join(f"{nodata_value:.10g}" if not np.isfinite(v)
                              else f"{v:.10g}" for v in row))
            fh.write("\n")
