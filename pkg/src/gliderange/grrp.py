"""Gliding-reachable-region solvers.

Computes the altitude-loss field U on the grid.  ``solve_grrp_fmm`` is
the windless fast-marching variant; ``solve_grrp_oum`` handles
direction-dependent glide ratios (wind) with an ordered-upwind scheme
over the triangulated grid (see ``oum.py`` for the kernel).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .errors import UnsupportedConfigurationError
from .propagation import INF, Adjacency, FrontQueue, NodeStatus, eikonal_update
from .scenario import GlideField, GrrProblem, Scenario


@dataclass
class GrrpResult:
    """Altitude-loss field U (+inf = unreachable) and reachability mask."""

    U: np.ndarray
    reachable_mask: np.ndarray
    status: np.ndarray
    start_node: int
    meta: dict
    scenario: Scenario


def _require_grr(scenario: Scenario) -> None:
    if not isinstance(scenario.problem, GrrProblem):
        raise UnsupportedConfigurationError("scenario problem is not GRR")


def _windless_glide_ratio(scenario: Scenario) -> float:
    aircraft = scenario.aircraft
    if aircraft.mode == "constant":
        return aircraft.g0
    if aircraft.mode == "fixed-airspeed":
        return aircraft.airspeed / aircraft.sink
    raise UnsupportedConfigurationError(
        "the windless solver needs a constant glide ratio")


def seed_analytic(scenario: Scenario, radius: float) -> dict[int, float]:
    """Exact altitude-loss values near the start, wind frozen at the start.

    Every node within ``radius`` of the start gets
    U = dist / g(direction); these nodes enter a solve as known.
    """
    _require_grr(scenario)
    if radius < scenario.grid.spacing:
        raise ValueError("seed radius must be at least the grid spacing")
    grid = scenario.grid
    problem = scenario.problem
    start = np.asarray(problem.start_xy, dtype=float)
    field = scenario.glide_field()
    w0 = scenario.wind.evaluate(start, problem.z0)

    positions = grid.positions()
    delta = positions - start
    dist = np.hypot(delta[:, 0], delta[:, 1])
    close = np.nonzero(dist <= radius)[0]
    seeds: dict[int, float] = {}
    for i in close:
        d = dist[i]
        if d < 1e-12:
            seeds[int(i)] = 0.0
            continue
        a_hat = delta[i] / d
        if field.mode == "constant":
            g = scenario.aircraft.g0
        else:
            from .scenario import fixed_airspeed_glide_ratio
            g = fixed_airspeed_glide_ratio(a_hat, w0, scenario.aircraft.airspeed,
                                           scenario.aircraft.sink)
        seeds[int(i)] = float(d / g)
    return seeds


def seed_turn_loss(scenario: Scenario, heading, R: float, g_R: float,
                   radius: float) -> dict[int, float]:
    """Altitude-loss seeds that charge an initial constant-radius turn.

    The aircraft starts on ``heading``, turns along the tighter of the
    two tangent circles of radius ``R`` (glide ratio ``g_R`` during the
    turn), then glides straight.  Nodes strictly inside both circles are
    left unseeded.
    """
    _require_grr(scenario)
    if not (R > 0 and g_R > 0):
        raise ValueError("R and g_R must be positive")
    grid = scenario.grid
    problem = scenario.problem
    start = np.asarray(problem.start_xy, dtype=float)
    heading = np.asarray(heading, dtype=float)
    heading = heading / np.hypot(*heading)
    normal = np.array([-heading[1], heading[0]])
    field = scenario.glide_field()
    w0 = scenario.wind.evaluate(start, problem.z0)

    def straight_ratio(direction):
        if field.mode == "constant":
            return scenario.aircraft.g0
        from .scenario import fixed_airspeed_glide_ratio
        return fixed_airspeed_glide_ratio(direction, w0, scenario.aircraft.airspeed,
                                          scenario.aircraft.sink)

    circles = ((start + R * normal, 1.0), (start - R * normal, -1.0))

    positions = grid.positions()
    delta = positions - start
    dist = np.hypot(delta[:, 0], delta[:, 1])
    close = np.nonzero(dist <= radius)[0]
    seeds: dict[int, float] = {}
    for i in close:
        x = positions[i]
        best = INF
        inside_both = True
        for center, s in circles:
            rel = x - center
            d = math.hypot(*rel)
            if d < R - 1e-12:
                continue
            inside_both = False
            d = max(d, R)
            gamma = math.acos(min(R / d, 1.0))
            beta = math.atan2(rel[1], rel[0])
            sigma = math.atan2(start[1] - center[1], start[0] - center[0])
            tau = beta - s * gamma
            phi = (s * (tau - sigma)) % (2.0 * math.pi)
            tangent = center + R * np.array([math.cos(tau), math.sin(tau)])
            r2 = x - tangent
            r2_len = math.hypot(*r2)
            if r2_len > 1e-12:
                g_inf = straight_ratio(r2 / r2_len)
                straight_loss = r2_len / g_inf
            else:
                straight_loss = 0.0
            best = min(best, R * phi / g_R + straight_loss)
        if inside_both:
            continue
        seeds[int(i)] = float(best)

    E = scenario.elevation.values
    for i, value in seeds.items():
        if not np.isfinite(E[i]) or problem.z0 - value < E[i]:
            raise ValueError(
                "terrain intrudes into the turn seed disk; shrink the radius")
    return seeds


def grrp_oracle_uniform(start_xy, glide_field: GlideField, y,
                        wind_at_start=None) -> float:
    """Closed-form altitude loss for uniform wind and no terrain."""
    start = np.asarray(start_xy, dtype=float)
    y = np.asarray(y, dtype=float)
    delta = y - start
    d = math.hypot(*delta)
    if d < 1e-12:
        return 0.0
    a_hat = delta / d
    if glide_field.mode == "constant":
        g = glide_field.aircraft.g0
    else:
        from .scenario import fixed_airspeed_glide_ratio
        w = wind_at_start if wind_at_start is not None else glide_field.wind.evaluate(start, 0.0)
        g = fixed_airspeed_glide_ratio(a_hat, w, glide_field.aircraft.airspeed,
                                       glide_field.aircraft.sink)
    return d / g


def _apply_seeds(scenario: Scenario, seeds: dict[int, float], U, status) -> None:
    E = scenario.elevation.values
    z0 = scenario.problem.z0
    for node, value in seeds.items():
        if not np.isfinite(E[node]) or z0 - value < E[node]:
            continue
        U[node] = value
        status[node] = NodeStatus.KNOWN


def solve_grrp_fmm(scenario: Scenario, seeds: dict[int, float] | None = None) -> GrrpResult:
    """Windless fast-marching reachability solve.

    A tentative value is accepted for a node only while the glider stays
    at or above the terrain there (z0 - U >= h_min); nodes failing the
    test stay far and can be re-proposed from other directions later.
    """
    _require_grr(scenario)
    if not scenario.wind.is_zero():
        raise UnsupportedConfigurationError(
            "wind present: use the ordered-upwind variant")
    g = _windless_glide_ratio(scenario)
    grid = scenario.grid
    E = scenario.elevation.values
    h = grid.spacing
    z0 = scenario.problem.z0
    seed_radius = scenario.seed_radius()
    if seeds is None:
        seeds = seed_analytic(scenario, seed_radius)

    t0 = time.perf_counter()
    adjacency = Adjacency(grid.n_cols, grid.n_rows)
    nb = adjacency.neighbors
    U = np.full(grid.n_nodes, INF)
    status = np.full(grid.n_nodes, NodeStatus.FAR, dtype=np.int8)
    _apply_seeds(scenario, seeds, U, status)
    start_node = grid.nearest_node(scenario.problem.start_xy)

    queue = FrontQueue()

    def propose(j: int) -> None:
        ju, jr, jd, jl = nb[j]
        tentative = eikonal_update(
            U[ju] if ju >= 0 else INF,
            U[jr] if jr >= 0 else INF,
            U[jd] if jd >= 0 else INF,
            U[jl] if jl >= 0 else INF,
            h, g)
        if z0 - tentative >= E[j] and tentative < U[j]:
            U[j] = tentative
            status[j] = NodeStatus.CONSIDERED
            queue.push(j, tentative)

    for node in np.nonzero(status == NodeStatus.KNOWN)[0]:
        for j in nb[node]:
            if j >= 0 and status[j] != NodeStatus.KNOWN:
                propose(j)

    accepted = 0
    acceptance_values = []
    while len(queue):
        i, value = queue.pop_min()
        acceptance_values.append(value)
        status[i] = NodeStatus.KNOWN
        accepted += 1
        for j in nb[i]:
            if j >= 0 and status[j] != NodeStatus.KNOWN:
                propose(j)

    runtime = time.perf_counter() - t0
    reachable = np.isfinite(U) & (z0 - U >= E)
    return GrrpResult(U=U, reachable_mask=reachable, status=status,
                      start_node=start_node,
                      meta={"variant": "fmm", "seed_radius": seed_radius,
                            "anisotropy_ratio": 1.0, "runtime": runtime,
                            "accepted_count": accepted,
                            "acceptance_values": np.asarray(acceptance_values)},
                      scenario=scenario)


def solve_grrp_oum(scenario: Scenario, seeds: dict[int, float] | None = None) -> GrrpResult:
    """Ordered-upwind reachability solve for direction-dependent glide ratios.

    With zero wind the glide ratio is isotropic and the scheme reduces to
    the fast-marching update, so that code path is used directly.
    """
    _require_grr(scenario)
    field = scenario.glide_field()
    if scenario.wind.is_zero() and field.mode in ("constant", "fixed-airspeed"):
        result = solve_grrp_fmm(scenario, seeds=seeds)
        result.meta["variant"] = "oum"
        return result

    from .oum import oum_solve
    grid = scenario.grid
    seed_radius = scenario.seed_radius()
    if seeds is None:
        seeds = seed_analytic(scenario, seed_radius)
    E = scenario.elevation.values
    z0 = scenario.problem.z0

    t0 = time.perf_counter()
    U, status, accepted, acceptance_values = oum_solve(scenario, seeds, field)
    runtime = time.perf_counter() - t0
    reachable = np.isfinite(U) & (z0 - U >= E)
    return GrrpResult(U=U, reachable_mask=reachable, status=status,
                      start_node=grid.nearest_node(scenario.problem.start_xy),
                      meta={"variant": "oum", "seed_radius": seed_radius,
                            "anisotropy_ratio": field.anisotropy_ratio,
                            "runtime": runtime, "accepted_count": accepted,
                            "acceptance_values": acceptance_values},
                      scenario=scenario)
