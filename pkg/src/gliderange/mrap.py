"""Minimal return altitude solver (windless fast marching).

Propagates a front outward from the airfield node; the arrival value at
each node is the lowest altitude from which the airfield can still be
reached by gliding, clamped to the terrain.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedConfigurationError
from .propagation import INF, Adjacency, FrontQueue, NodeStatus, eikonal_update
from .scenario import MrapProblem, Scenario


@dataclass
class MrapResult:
    """Per-node minimal return altitude V plus solve bookkeeping."""

    V: np.ndarray
    status: np.ndarray
    airfield_node: int
    meta: dict
    scenario: Scenario


def _constant_glide_ratio(scenario: Scenario) -> float:
    if not scenario.wind.is_zero():
        raise UnsupportedConfigurationError(
            "the return-altitude solver handles zero wind only")
    aircraft = scenario.aircraft
    if aircraft.mode == "constant":
        return aircraft.g0
    if aircraft.mode == "fixed-airspeed":
        return aircraft.airspeed / aircraft.sink
    raise UnsupportedConfigurationError(
        "the return-altitude solver needs a constant glide ratio")


def solve_mrap(scenario: Scenario) -> MrapResult:
    """Fast-marching solve of the minimal return altitude on the grid."""
    if not isinstance(scenario.problem, MrapProblem):
        raise UnsupportedConfigurationError("scenario problem is not MRAP")
    g = _constant_glide_ratio(scenario)
    grid = scenario.grid
    E = scenario.elevation.values
    h = grid.spacing
    airfield = grid.nearest_node(scenario.problem.airfield_xy)
    if not np.isfinite(E[airfield]):
        raise UnsupportedConfigurationError("airfield sits on impassable elevation")
    snap = float(np.hypot(*(grid.position(airfield)
                            - np.asarray(scenario.problem.airfield_xy, dtype=float))))

    t0 = time.perf_counter()
    adjacency = Adjacency(grid.n_cols, grid.n_rows)
    nb = adjacency.neighbors
    V = np.full(grid.n_nodes, INF)
    status = np.full(grid.n_nodes, NodeStatus.FAR, dtype=np.int8)
    V[airfield] = E[airfield]
    status[airfield] = NodeStatus.CONSIDERED
    queue = FrontQueue()
    queue.push(airfield, V[airfield])

    accepted = 0
    acceptance_values = []
    while len(queue):
        i, value = queue.pop_min()
        acceptance_values.append(value)
        status[i] = NodeStatus.KNOWN
        accepted += 1
        up, right, down, left = nb[i]
        for j in (up, right, down, left):
            if j < 0 or status[j] == NodeStatus.KNOWN:
                continue
            if not np.isfinite(E[j]):
                # The terrain clamp would push the value to +inf anyway.
                continue
            ju, jr, jd, jl = nb[j]
            tentative = eikonal_update(
                V[ju] if ju >= 0 else INF,
                V[jr] if jr >= 0 else INF,
                V[jd] if jd >= 0 else INF,
                V[jl] if jl >= 0 else INF,
                h, g)
            candidate = min(max(tentative, E[j]), V[j])
            if candidate < V[j]:
                V[j] = candidate
                queue.push(j, candidate)
            status[j] = NodeStatus.CONSIDERED

    runtime = time.perf_counter() - t0
    return MrapResult(V=V, status=status, airfield_node=airfield,
                      meta={"accepted_count": accepted, "runtime": runtime,
                            "snap_distance": snap, "glide_ratio": g,
                            "acceptance_values": np.asarray(acceptance_values)},
                      scenario=scenario)


def mrap_oracle_flat(airfield_xy, g: float, y, airfield_elevation: float = 0.0) -> float:
    """Exact minimal return altitude on flat terrain without wind."""
    dx = float(y[0]) - float(airfield_xy[0])
    dy = float(y[1]) - float(airfield_xy[1])
    return airfield_elevation + math.hypot(dx, dy) / g


STAIR_STEP_1 = 33.0
STAIR_STEP_2 = 66.0
STAIR_H1 = 100.0
STAIR_H2 = 200.0


def mrap_oracle_staircase(y) -> float:
    """Piecewise return altitude for the staircase terrain, glide ratio 1.

    ``y`` is relative to an airfield that sits on the low (x=0) edge of
    the terrain.  On the flat region the value is the glide distance; on
    each step the nearest step edge dominates, so the value is the step
    height plus the perpendicular distance to the edge.
    """
    y1, y2 = float(y[0]), float(y[1])
    if y1 <= STAIR_STEP_1:
        return math.hypot(y1, y2)
    if y1 <= STAIR_STEP_2:
        return STAIR_H1 + (y1 - STAIR_STEP_1)
    return STAIR_H2 + (y1 - STAIR_STEP_2)
