"""Engine-out glide planning on a grid.

Solvers for the gliding reachable region (how far can the aircraft get
from its current position and altitude) and the minimal return altitude
(how high must it be anywhere to still reach the airfield), plus
trajectory extraction, verification oracles, a CLI, and an HTTP service.
"""

from .contours import extract_contours
from .dispatch import solve_scenario, trace_scenario
from .document import (ResultDocument, document_to_json, field_array,
                       parse_document, result_to_document)
from .errors import (ScenarioError, UndefinedDirectionError,
                     UnreachableTargetError, UnsupportedConfigurationError,
                     WindExceedsAirspeedError)
from .grrp import (GrrpResult, grrp_oracle_uniform, seed_analytic,
                   seed_turn_loss, solve_grrp_fmm, solve_grrp_oum)
from .mrap import (MrapResult, mrap_oracle_flat, mrap_oracle_staircase,
                   solve_mrap)
from .presets import build_preset, preset_description, preset_names
from .scenario import (AircraftModel, ElevationField, GlideField, GridSpec,
                       GridWind, GrrProblem, LayeredWind, MrapProblem,
                       Scenario, SolveOptions, UniformWind, WindModel,
                       ZeroWind, evaluate_glide_ratio,
                       fixed_airspeed_glide_ratio, load_scenario,
                       scenario_to_config)
from .trajectories import (Trajectory, direction_field_grrp,
                           interpolate_field, trace_grrp, trace_mrap)
from .verification import (BENCHMARKS, ErrorReport, benchmark_names,
                           compare_to_oracle, dijkstra_oracle, run_benchmark)

__all__ = [
    "AircraftModel", "BENCHMARKS", "ElevationField", "ErrorReport",
    "GlideField", "GridSpec", "GridWind", "GrrProblem", "GrrpResult",
    "LayeredWind", "MrapProblem", "MrapResult", "ResultDocument", "Scenario",
    "ScenarioError", "SolveOptions", "Trajectory", "UndefinedDirectionError",
    "UniformWind", "UnreachableTargetError", "UnsupportedConfigurationError",
    "WindExceedsAirspeedError", "WindModel", "ZeroWind", "benchmark_names",
    "build_preset", "compare_to_oracle", "dijkstra_oracle", "direction_field_grrp",
    "document_to_json", "evaluate_glide_ratio", "extract_contours",
    "field_array", "fixed_airspeed_glide_ratio", "grrp_oracle_uniform",
    "interpolate_field", "load_scenario", "mrap_oracle_flat",
    "mrap_oracle_staircase", "parse_document", "preset_description",
    "preset_names", "result_to_document", "run_benchmark", "scenario_to_config",
    "seed_analytic", "seed_turn_loss", "solve_grrp_fmm", "solve_grrp_oum",
    "solve_mrap", "solve_scenario", "trace_grrp", "trace_mrap",
    "trace_scenario",
]

__version__ = "1.0.0"
