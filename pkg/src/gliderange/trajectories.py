"""Path extraction by backward integration of characteristic directions.

Gliding reachable-region paths follow the direction that maximizes the
altitude-loss growth rate; return paths descend the gradient of the
minimal return altitude.  Both tracers are pure read-only consumers of a
solve result, so any number of traces may run concurrently over one
result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import UndefinedDirectionError, UnreachableTargetError
from .grrp import GrrpResult
from .mrap import MrapResult
from .scenario import GridSpec, Scenario

INF = float("inf")

TERMINATION_REACHED = "reached-origin"
TERMINATION_MAX_STEPS = "max-steps"
TERMINATION_STALLED = "stalled"


@dataclass
class Trajectory:
    """Ordered polyline with per-vertex altitude.

    ``vertices`` is an (n, 3) array of (x, y, z) rows.  ``kind`` is
    "grrp-optimal" or "mrap-feasible"; ``termination`` records whether
    the backward integration reached its origin.
    """

    vertices: np.ndarray
    kind: str
    termination: str
    arc_length: float

    @property
    def xy(self) -> np.ndarray:
        return self.vertices[:, :2]

    @property
    def z(self) -> np.ndarray:
        return self.vertices[:, 2]


def interpolate_field(values: np.ndarray, grid: GridSpec, xy) -> float:
    """Bilinear interpolation that tolerates +inf corners.

    Corners at +inf are dropped and the remaining weights renormalized,
    so interpolation stays usable right up against a reachability or
    obstacle boundary.  All four corners at +inf (or zero total weight on
    finite corners) gives +inf.
    """
    cf, rf = grid.frac_coords(xy)
    c0 = min(max(int(math.floor(cf)), 0), grid.n_cols - 2)
    r0 = min(max(int(math.floor(rf)), 0), grid.n_rows - 2)
    tc = min(max(cf - c0, 0.0), 1.0)
    tr = min(max(rf - r0, 0.0), 1.0)
    total = 0.0
    acc = 0.0
    for dc, dr, w in ((0, 0, (1 - tc) * (1 - tr)), (1, 0, tc * (1 - tr)),
                      (0, 1, (1 - tc) * tr), (1, 1, tc * tr)):
        v = values[(c0 + dc) + (r0 + dr) * grid.n_cols]
        if math.isfinite(v):
            total += w
            acc += w * v
    if total <= 1e-12:
        return INF
    return acc / total


def _gradient(values: np.ndarray, grid: GridSpec, xy) -> np.ndarray:
    """Central-difference gradient of the interpolated field.

    Falls back to one-sided differences where a side sample is +inf
    (e.g. at the reachability boundary); raises when no finite stencil
    exists in some axis.
    """
    h = grid.spacing
    center = interpolate_field(values, grid, xy)
    if not math.isfinite(center):
        raise UndefinedDirectionError(
            f"field is undefined at ({xy[0]:.3f}, {xy[1]:.3f})")
    grad = np.zeros(2)
    for axis in range(2):
        offset = np.zeros(2)
        offset[axis] = h
        plus = interpolate_field(values, grid, np.asarray(xy) + offset)
        minus = interpolate_field(values, grid, np.asarray(xy) - offset)
        if math.isfinite(plus) and math.isfinite(minus):
            grad[axis] = (plus - minus) / (2 * h)
        elif math.isfinite(plus):
            grad[axis] = (plus - center) / h
        elif math.isfinite(minus):
            grad[axis] = (center - minus) / h
        else:
            raise UndefinedDirectionError(
                f"no finite stencil along axis {axis} at "
                f"({xy[0]:.3f}, {xy[1]:.3f})")
    return grad


def _glide_samples(field, xy, z: float, a_hats: np.ndarray) -> np.ndarray:
    """Glide ratio per direction; unreachable ground tracks give 0."""
    if field.mode == "constant":
        return np.full(len(a_hats), field.aircraft.g0)
    if field.mode == "custom":
        return np.array([float(field.aircraft.glide_hook(xy, z, a))
                         for a in a_hats])
    w = field.wind.evaluate(xy, z)
    v = field.aircraft.airspeed
    d = a_hats @ np.asarray(w, dtype=float)
    disc = d * d - float(w[0] * w[0] + w[1] * w[1]) + v * v
    g = np.where(disc > 0, (d + np.sqrt(np.maximum(disc, 0.0))) / field.aircraft.sink,
                 0.0)
    return np.maximum(g, 0.0)


def direction_field_grrp(result: GrrpResult, scenario: Scenario, y) -> np.ndarray:
    """Unit descent direction of the optimal path through point y.

    Without wind this is the normalized gradient of the altitude-loss
    field; with wind it is the direction maximizing the loss growth rate
    grad(U) . a * g(y, z, a) over ``options.direction_samples`` equally
    spaced directions.
    """
    grid = scenario.grid
    grad = _gradient(result.U, grid, y)
    norm = math.hypot(grad[0], grad[1])
    if norm < 1e-15:
        raise UndefinedDirectionError(
            f"vanishing gradient at ({y[0]:.3f}, {y[1]:.3f})")
    if scenario.wind.is_zero():
        return grad / norm
    n = scenario.options.direction_samples
    angles = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    a_hats = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    z = scenario.problem.z0 - interpolate_field(result.U, grid, y)
    g = _glide_samples(scenario.glide_field(), y, z, a_hats)
    score = (a_hats @ grad) * g
    return a_hats[int(np.argmax(score))]


def _integrate(direction_at, origin_xy, origin_radius: float, start_xy,
               altitude_at, grid: GridSpec, step: float, kind: str) -> Trajectory:
    """Backward RK2 integration of -direction_at from start_xy.

    Stops once within ``origin_radius`` of ``origin_xy``; the exact
    origin is then appended.  A direction failure or step-count overrun
    ends the path with a non-success termination instead of raising.
    """
    max_steps = 50 * (grid.n_cols + grid.n_rows)
    pts = [np.asarray(start_xy, dtype=float)]
    termination = TERMINATION_MAX_STEPS
    y = pts[0]
    for _ in range(max_steps):
        if math.hypot(y[0] - origin_xy[0], y[1] - origin_xy[1]) <= origin_radius:
            termination = TERMINATION_REACHED
            break
        try:
            a0 = direction_at(y)
            mid = y - 0.5 * step * a0
            a1 = direction_at(mid)
        except UndefinedDirectionError:
            termination = TERMINATION_STALLED
            break
        y_next = y - step * a1
        if not grid.contains(y_next):
            termination = TERMINATION_STALLED
            break
        y = y_next
        pts.append(y)
    if termination == TERMINATION_REACHED:
        pts.append(np.asarray(origin_xy, dtype=float))
    xy = np.stack(pts, axis=0)[::-1]
    z = np.array([altitude_at(p) for p in xy])
    vertices = np.column_stack([xy, z])
    arc = float(np.hypot(np.diff(xy[:, 0]), np.diff(xy[:, 1])).sum())
    return Trajectory(vertices=vertices, kind=kind,
                      termination=termination, arc_length=arc)


def trace_grrp(result: GrrpResult, scenario: Scenario, target,
               step: float | None = None) -> Trajectory:
    """Optimal descent path from the start position to a reachable target."""
    grid = scenario.grid
    if step is None:
        step = 0.25 * grid.spacing
    if not grid.contains(target):
        raise UnreachableTargetError(
            f"target ({target[0]:.3f}, {target[1]:.3f}) is outside the "
            "computed field")
    u_target = interpolate_field(result.U, grid, target)
    z0 = scenario.problem.z0
    if not math.isfinite(u_target):
        raise UnreachableTargetError(
            f"target ({target[0]:.3f}, {target[1]:.3f}) is not reachable")
    start = np.asarray(scenario.problem.start_xy, dtype=float)
    radius = max(scenario.seed_radius(), 2.0 * grid.spacing)

    def altitude(p):
        u = interpolate_field(result.U, grid, p)
        return z0 - u if math.isfinite(u) else z0

    def direction(p):
        return direction_field_grrp(result, scenario, p)

    traj = _integrate(direction, start, radius, target, altitude, grid,
                      step, "grrp-optimal")
    if traj.termination == TERMINATION_REACHED:
        # The exact start carries the full initial altitude.
        traj.vertices[0, 2] = z0
        # Monotone altitude along start -> target despite interpolation
        # wiggle near the seed.
        np.minimum.accumulate(traj.vertices[:, 2], out=traj.vertices[:, 2])
    return traj


def trace_mrap(result: MrapResult, scenario: Scenario, from_xy,
               step: float | None = None) -> Trajectory:
    """Feasible return path from a point down to the airfield."""
    grid = scenario.grid
    if step is None:
        step = 0.25 * grid.spacing
    if not grid.contains(from_xy):
        raise UnreachableTargetError(
            f"({from_xy[0]:.3f}, {from_xy[1]:.3f}) is outside the "
            "computed field")
    v_from = interpolate_field(result.V, grid, from_xy)
    if not math.isfinite(v_from):
        raise UnreachableTargetError(
            f"({from_xy[0]:.3f}, {from_xy[1]:.3f}) cannot reach the airfield")
    airfield = grid.position(result.airfield_node)
    radius = 2.0 * grid.spacing

    def altitude(p):
        return interpolate_field(result.V, grid, p)

    def direction(p):
        grad = _gradient(result.V, grid, p)
        norm = math.hypot(grad[0], grad[1])
        if norm < 1e-15:
            raise UndefinedDirectionError(
                f"vanishing gradient at ({p[0]:.3f}, {p[1]:.3f})")
        return grad / norm

    traj = _integrate(direction, airfield, radius, from_xy, altitude, grid,
                      step, "mrap-feasible")
    # _integrate reverses into origin -> start order, i.e. airfield first;
    # a return path runs from the aircraft down to the airfield.
    traj.vertices = traj.vertices[::-1].copy()
    return traj
