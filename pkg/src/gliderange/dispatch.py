"""Solver dispatch shared by the CLI and the HTTP service."""

from __future__ import annotations

from .grrp import solve_grrp_fmm, solve_grrp_oum
from .mrap import solve_mrap
from .scenario import GrrProblem, Scenario
from .trajectories import trace_grrp, trace_mrap


def solve_scenario(scenario: Scenario):
    """Run the solver matching the scenario's problem kind."""
    if isinstance(scenario.problem, GrrProblem):
        return solve_grrp_oum(scenario)
    return solve_mrap(scenario)


def trace_scenario(result, scenario: Scenario, target):
    """Trace the path for a solved scenario toward/from ``target``."""
    if isinstance(scenario.problem, GrrProblem):
        return trace_grrp(result, scenario, target)
    return trace_mrap(result, scenario, target)
