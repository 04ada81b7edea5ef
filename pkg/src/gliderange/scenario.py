"""Problem description types: grid, elevation, wind, aircraft, scenario.

All types are immutable after construction and safe to share across
concurrent solves.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .errors import ScenarioError, WindExceedsAirspeedError

INF = float("inf")


# ---------------------------------------------------------------------------
# Grid and elevation


@dataclass(frozen=True)
class GridSpec:
    """Uniform square grid. Node (col, row) sits at origin + spacing*(col, row).

    Row 0 is the southernmost row; index = col + row * n_cols (row-major).
    """

    n_cols: int
    n_rows: int
    spacing: float
    origin: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if self.n_cols < 2:
            raise ScenarioError("n_cols must be >= 2", field="grid.n_cols")
        if self.n_rows < 2:
            raise ScenarioError("n_rows must be >= 2", field="grid.n_rows")
        if not (self.spacing > 0):
            raise ScenarioError("spacing must be > 0", field="grid.spacing")
        object.__setattr__(self, "origin", (float(self.origin[0]), float(self.origin[1])))

    @property
    def n_nodes(self) -> int:
        return self.n_cols * self.n_rows

    def index(self, col: int, row: int) -> int:
        return col + row * self.n_cols

    def col_row(self, i: int) -> tuple[int, int]:
        return i % self.n_cols, i // self.n_cols

    def position(self, i: int) -> np.ndarray:
        col, row = self.col_row(i)
        return np.array([self.origin[0] + col * self.spacing,
                         self.origin[1] + row * self.spacing])

    def positions(self) -> np.ndarray:
        """(n_nodes, 2) array of node coordinates."""
        cols = np.arange(self.n_nodes) % self.n_cols
        rows = np.arange(self.n_nodes) // self.n_cols
        return np.stack([self.origin[0] + cols * self.spacing,
                         self.origin[1] + rows * self.spacing], axis=1)

    def contains(self, xy) -> bool:
        x, y = float(xy[0]), float(xy[1])
        return (self.origin[0] <= x <= self.origin[0] + (self.n_cols - 1) * self.spacing
                and self.origin[1] <= y <= self.origin[1] + (self.n_rows - 1) * self.spacing)

    def nearest_node(self, xy) -> int:
        col = int(round((float(xy[0]) - self.origin[0]) / self.spacing))
        row = int(round((float(xy[1]) - self.origin[1]) / self.spacing))
        col = min(max(col, 0), self.n_cols - 1)
        row = min(max(row, 0), self.n_rows - 1)
        return self.index(col, row)

    def frac_coords(self, xy) -> tuple[float, float]:
        """Continuous (col, row) coordinates of a point."""
        return ((float(xy[0]) - self.origin[0]) / self.spacing,
                (float(xy[1]) - self.origin[1]) / self.spacing)


class ElevationField:
    """Minimum allowed altitude per node; +inf marks impassable cells."""

    def __init__(self, values, grid: GridSpec | None = None):
        arr = np.asarray(values, dtype=np.float64).reshape(-1).copy()
        if grid is not None and arr.size != grid.n_nodes:
            raise ScenarioError(
                f"elevation has {arr.size} values, grid needs {grid.n_nodes}",
                field="elevation.values")
        if np.any(np.isnan(arr)) or np.any(arr == -INF):
            raise ScenarioError("elevation values must be finite or +inf",
                                field="elevation.values")
        arr.setflags(write=False)
        self.values = arr

    def __len__(self):
        return self.values.size

    @classmethod
    def flat(cls, grid: GridSpec, value: float = 0.0) -> "ElevationField":
        return cls(np.full(grid.n_nodes, value), grid)


# ---------------------------------------------------------------------------
# Wind models


class WindModel:
    """Horizontal wind vector field W(x, z)."""

    variant = "base"

    def evaluate(self, xy, z: float) -> np.ndarray:
        raise NotImplementedError

    def max_speed(self, grid: GridSpec, z_lo: float, z_hi: float) -> float:
        """Upper bound on the wind speed over the grid and altitude band."""
        raise NotImplementedError

    def is_zero(self) -> bool:
        return False


class ZeroWind(WindModel):
    variant = "zero"

    def evaluate(self, xy, z):
        return np.zeros(2)

    def max_speed(self, grid, z_lo, z_hi):
        return 0.0

    def is_zero(self):
        return True


def bearing_vector(bearing_deg: float) -> np.ndarray:
    """Unit vector for a bearing measured counterclockwise from east (+x).

    The bearing is the direction the air moves toward.
    """
    rad = math.radians(bearing_deg)
    return np.array([math.cos(rad), math.sin(rad)])


class UniformWind(WindModel):
    variant = "uniform"

    def __init__(self, speed: float | None = None, bearing_deg: float | None = None,
                 vector=None):
        if vector is not None:
            self.vector = np.asarray(vector, dtype=float).copy()
            self.speed = float(np.hypot(*self.vector))
            self.bearing_deg = math.degrees(math.atan2(self.vector[1], self.vector[0]))
        else:
            if speed is None or bearing_deg is None:
                raise ScenarioError("uniform wind needs speed and bearing_deg or a vector",
                                    field="wind")
            if speed < 0:
                raise ScenarioError("wind speed must be >= 0", field="wind.speed")
            self.speed = float(speed)
            self.bearing_deg = float(bearing_deg)
            self.vector = self.speed * bearing_vector(self.bearing_deg)
        self.vector.setflags(write=False)

    def evaluate(self, xy, z):
        return self.vector

    def max_speed(self, grid, z_lo, z_hi):
        return self.speed


class LayeredWind(WindModel):
    """Wind from (altitude, speed, bearing_deg) breakpoints.

    Speed and bearing are interpolated linearly between breakpoints and
    clamped outside the listed altitude range.
    """

    variant = "layered"

    def __init__(self, layers):
        layers = [(float(a), float(s), float(b)) for a, s, b in layers]
        if not layers:
            raise ScenarioError("layered wind needs at least one breakpoint",
                                field="wind.layers")
        alts = [a for a, _, _ in layers]
        if any(b <= a for a, b in zip(alts, alts[1:])):
            raise ScenarioError("layer altitudes must be strictly increasing",
                                field="wind.layers")
        if any(s < 0 for _, s, _ in layers):
            raise ScenarioError("wind speed must be >= 0", field="wind.layers")
        self.layers = tuple(layers)
        self._alts = np.array(alts)
        self._speeds = np.array([s for _, s, _ in layers])
        self._bearings = np.array([b for _, _, b in layers])

    def _speed_bearing(self, z: float) -> tuple[float, float]:
        s = float(np.interp(z, self._alts, self._speeds))
        b = float(np.interp(z, self._alts, self._bearings))
        return s, b

    def evaluate(self, xy, z):
        s, b = self._speed_bearing(z)
        return s * bearing_vector(b)

    def max_speed(self, grid, z_lo, z_hi):
        zs = np.concatenate([[z_lo, z_hi], self._alts[(self._alts >= z_lo) & (self._alts <= z_hi)]])
        return max(self._speed_bearing(z)[0] for z in zs)


class GridWind(WindModel):
    """Per-node wind vectors, bilinearly interpolated in the plane.

    An optional list of (altitude, scale) breakpoints multiplies the
    vectors as a function of altitude (clamped outside the range).
    """

    variant = "grid"

    def __init__(self, grid: GridSpec, vectors, altitude_scale=None):
        arr = np.asarray(vectors, dtype=float).reshape(grid.n_nodes, 2).copy()
        if not np.all(np.isfinite(arr)):
            raise ScenarioError("grid wind vectors must be finite", field="wind.vectors")
        arr.setflags(write=False)
        self.grid = grid
        self.vectors = arr
        if altitude_scale is not None:
            pairs = [(float(a), float(s)) for a, s in altitude_scale]
            self._scale_alts = np.array([a for a, _ in pairs])
            self._scale_vals = np.array([s for _, s in pairs])
        else:
            self._scale_alts = None
            self._scale_vals = None

    def _scale(self, z: float) -> float:
        if self._scale_alts is None:
            return 1.0
        return float(np.interp(z, self._scale_alts, self._scale_vals))

    def evaluate(self, xy, z):
        g = self.grid
        fc, fr = g.frac_coords(xy)
        fc = min(max(fc, 0.0), g.n_cols - 1.0)
        fr = min(max(fr, 0.0), g.n_rows - 1.0)
        c0 = min(int(fc), g.n_cols - 2)
        r0 = min(int(fr), g.n_rows - 2)
        tx, ty = fc - c0, fr - r0
        v = self.vectors
        i00 = g.index(c0, r0)
        w = ((1 - tx) * (1 - ty) * v[i00]
             + tx * (1 - ty) * v[i00 + 1]
             + (1 - tx) * ty * v[i00 + g.n_cols]
             + tx * ty * v[i00 + g.n_cols + 1])
        return w * self._scale(z)

    def max_speed(self, grid, z_lo, z_hi):
        speeds = np.hypot(self.vectors[:, 0], self.vectors[:, 1])
        smax = float(speeds.max(initial=0.0))
        if self._scale_alts is None:
            return smax
        zs = np.concatenate([[z_lo, z_hi],
                             self._scale_alts[(self._scale_alts >= z_lo) & (self._scale_alts <= z_hi)]])
        return smax * max(abs(self._scale(z)) for z in zs)


def wind_from_config(cfg, grid: GridSpec) -> WindModel:
    if cfg is None:
        return ZeroWind()
    variant = cfg.get("variant")
    if variant is None:
        if cfg:
            raise ScenarioError("wind.variant missing", field="wind.variant")
        variant = "zero"
    try:
        if variant == "zero":
            return ZeroWind()
        if variant == "uniform":
            if "vector" in cfg:
                return UniformWind(vector=cfg["vector"])
            return UniformWind(speed=cfg.get("speed"),
                               bearing_deg=cfg.get("bearing_deg"))
        if variant == "layered":
            return LayeredWind(cfg.get("layers", []))
        if variant == "grid":
            return GridWind(grid, cfg.get("vectors"), cfg.get("altitude_scale"))
    except ScenarioError:
        raise
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"malformed wind section: {exc}",
                            field="wind") from exc
    raise ScenarioError(f"unknown wind variant {variant!r}", field="wind.variant")


def wind_to_config(wind: WindModel) -> dict:
    if isinstance(wind, ZeroWind):
        return {"variant": "zero"}
    if isinstance(wind, UniformWind):
        return {"variant": "uniform", "vector": list(map(float, wind.vector))}
    if isinstance(wind, LayeredWind):
        return {"variant": "layered", "layers": [list(l) for l in wind.layers]}
    if isinstance(wind, GridWind):
        cfg = {"variant": "grid", "vectors": wind.vectors.tolist()}
        if wind._scale_alts is not None:
            cfg["altitude_scale"] = [[float(a), float(s)] for a, s in
                                     zip(wind._scale_alts, wind._scale_vals)]
        return cfg
    raise ScenarioError("unserializable wind model", field="wind")


# ---------------------------------------------------------------------------
# Aircraft and the glide-ratio field


@dataclass(frozen=True)
class AircraftModel:
    """Glide performance model.

    ``constant`` mode gives a direction-independent glide ratio ``g0``
    (only meaningful without wind).  ``fixed-airspeed`` mode flies every
    ground track at horizontal airspeed ``airspeed`` with sink rate
    magnitude ``sink``.  ``glide_hook`` overrides both when provided; it
    is called as hook(xy, z, a_hat) and must return a positive ratio.
    """

    mode: str = "constant"
    g0: float = 1.0
    airspeed: float = 1.0
    sink: float = 1.0
    glide_hook: object = None

    def __post_init__(self):
        if self.mode not in ("constant", "fixed-airspeed", "custom"):
            raise ScenarioError(f"unknown aircraft mode {self.mode!r}", field="aircraft.mode")
        if self.mode == "constant" and not (self.g0 > 0):
            raise ScenarioError("g0 must be > 0", field="aircraft.g0")
        if self.mode == "fixed-airspeed":
            if not (self.airspeed > 0):
                raise ScenarioError("airspeed must be > 0", field="aircraft.airspeed")
            if not (self.sink > 0):
                raise ScenarioError("sink must be > 0", field="aircraft.sink")
        if self.mode == "custom" and self.glide_hook is None:
            raise ScenarioError("custom mode needs glide_hook", field="aircraft.glide_hook")


def aircraft_from_config(cfg) -> AircraftModel:
    if cfg is None:
        raise ScenarioError("aircraft section missing", field="aircraft")
    mode = cfg.get("mode", "constant")
    if mode == "constant":
        return AircraftModel(mode="constant", g0=float(cfg.get("g0", 1.0)))
    if mode == "fixed-airspeed":
        return AircraftModel(mode="fixed-airspeed",
                             airspeed=float(cfg.get("airspeed", 1.0)),
                             sink=float(cfg.get("sink", 1.0)))
    raise ScenarioError(f"unknown aircraft mode {mode!r}", field="aircraft.mode")


def aircraft_to_config(aircraft: AircraftModel) -> dict:
    if aircraft.mode == "constant":
        return {"mode": "constant", "g0": aircraft.g0}
    if aircraft.mode == "fixed-airspeed":
        return {"mode": "fixed-airspeed", "airspeed": aircraft.airspeed,
                "sink": aircraft.sink}
    raise ScenarioError("custom aircraft models cannot be serialized",
                        field="aircraft.mode")


class GlideField:
    """Direction-dependent glide ratio g(x, z, a_hat) > 0.

    Wraps a wind model and aircraft model; also carries anisotropy
    bounds (g_min, g_max) over the domain.
    """

    def __init__(self, wind: WindModel, aircraft: AircraftModel,
                 grid: GridSpec, z_lo: float, z_hi: float):
        self.wind = wind
        self.aircraft = aircraft
        if aircraft.mode == "constant":
            self.mode = "constant"
            self.g_min = self.g_max = aircraft.g0
        elif aircraft.mode == "fixed-airspeed":
            self.mode = "fixed-airspeed"
            wmax = wind.max_speed(grid, z_lo, z_hi)
            if wmax >= aircraft.airspeed:
                raise ScenarioError(
                    f"max wind speed {wmax} is not below airspeed {aircraft.airspeed}",
                    field="aircraft.airspeed")
            self.g_min = (aircraft.airspeed - wmax) / aircraft.sink
            self.g_max = (aircraft.airspeed + wmax) / aircraft.sink
        else:
            self.mode = "custom"
            self.g_min, self.g_max = self._sample_bounds(grid, z_lo, z_hi)

    def _sample_bounds(self, grid, z_lo, z_hi, n_dirs=72, n_pts=25):
        hook = self.aircraft.glide_hook
        angles = np.linspace(0, 2 * math.pi, n_dirs, endpoint=False)
        dirs = np.stack([np.cos(angles), np.sin(angles)], axis=1)
        rng = np.random.default_rng(0)
        pts = grid.positions()[rng.choice(grid.n_nodes, size=min(n_pts, grid.n_nodes),
                                          replace=False)]
        vals = [hook(p, z, d) for p in pts for d in dirs for z in (z_lo, z_hi)]
        lo, hi = min(vals), max(vals)
        if not (lo > 0):
            raise ScenarioError("glide hook returned a non-positive ratio",
                                field="aircraft.glide_hook")
        return lo, hi

    @property
    def anisotropy_ratio(self) -> float:
        return self.g_max / self.g_min

    def evaluate(self, xy, z: float, a_hat) -> float:
        """Glide ratio for ground-track direction a_hat (unit vector)."""
        a_hat = np.asarray(a_hat, dtype=float)
        norm = math.hypot(a_hat[0], a_hat[1])
        if abs(norm - 1.0) > 1e-9:
            raise ValueError("a_hat must be a unit vector")
        if self.mode == "constant":
            return self.aircraft.g0
        if self.mode == "custom":
            return float(self.aircraft.glide_hook(xy, z, a_hat))
        w = self.wind.evaluate(xy, z)
        return fixed_airspeed_glide_ratio(a_hat, w, self.aircraft.airspeed,
                                          self.aircraft.sink)

    def evaluate_many(self, xy, z: float, a_hats: np.ndarray) -> np.ndarray:
        """Vectorized glide ratios for an (n, 2) array of unit directions."""
        if self.mode == "constant":
            return np.full(len(a_hats), self.aircraft.g0)
        if self.mode == "custom":
            return np.array([float(self.aircraft.glide_hook(xy, z, a)) for a in a_hats])
        w = self.wind.evaluate(xy, z)
        v, sv = self.aircraft.airspeed, self.aircraft.sink
        d = a_hats @ w
        disc = d * d - float(w @ w) + v * v
        if np.any(disc <= 0):
            raise WindExceedsAirspeedError(
                "wind speed reaches the airspeed; ground track cannot be held")
        return (d + np.sqrt(disc)) / sv


def fixed_airspeed_glide_ratio(a_hat, w, airspeed: float, sink: float) -> float:
    """Glide ratio when flying ground direction a_hat at fixed airspeed.

    The ground-speed magnitude m solves ||m*a_hat - W|| = airspeed.
    """
    d = float(a_hat[0] * w[0] + a_hat[1] * w[1])
    disc = d * d - float(w[0] * w[0] + w[1] * w[1]) + airspeed * airspeed
    if disc <= 0:
        raise WindExceedsAirspeedError(
            "wind speed reaches the airspeed; ground track cannot be held")
    return (d + math.sqrt(disc)) / sink


def evaluate_glide_ratio(field: GlideField, xy, z: float, a_hat) -> float:
    return field.evaluate(xy, z, a_hat)


# ---------------------------------------------------------------------------
# Scenario


@dataclass(frozen=True)
class GrrProblem:
    """Reachable-region problem: glider at start_xy, altitude z0."""

    start_xy: tuple[float, float]
    z0: float

    kind = "grr"


@dataclass(frozen=True)
class MrapProblem:
    """Minimal return altitude problem: airfield at airfield_xy."""

    airfield_xy: tuple[float, float]

    kind = "mrap"


@dataclass(frozen=True)
class SolveOptions:
    seed_radius: float | None = None     # None = auto: max(2h, anisotropy*h)
    direction_samples: int = 720
    safety_margin: float = 0.0

    def __post_init__(self):
        if self.direction_samples < 1:
            raise ScenarioError("direction_samples must be positive",
                                field="options.direction_samples")


@dataclass(frozen=True)
class Scenario:
    """Fully validated problem description.

    The safety margin is already folded into ``elevation``; solvers see
    a single minimum-altitude surface.
    """

    grid: GridSpec
    elevation: ElevationField
    wind: WindModel
    aircraft: AircraftModel
    problem: object
    options: SolveOptions = field(default_factory=SolveOptions)
    name: str | None = None

    def __post_init__(self):
        if len(self.elevation) != self.grid.n_nodes:
            raise ScenarioError("elevation size does not match grid",
                                field="elevation.values")
        if isinstance(self.problem, GrrProblem):
            if not self.grid.contains(self.problem.start_xy):
                raise ScenarioError("start_xy outside grid bounds",
                                    field="problem.start_xy")
            node = self.grid.nearest_node(self.problem.start_xy)
            e = self.elevation.values[node]
            if not (self.problem.z0 >= e):
                raise ScenarioError(
                    f"z0={self.problem.z0} is below the minimum altitude {e} at the start",
                    field="problem.z0")
        elif isinstance(self.problem, MrapProblem):
            if not self.grid.contains(self.problem.airfield_xy):
                raise ScenarioError("airfield_xy outside grid bounds",
                                    field="problem.airfield_xy")
            node = self.grid.nearest_node(self.problem.airfield_xy)
            if not np.isfinite(self.elevation.values[node]):
                raise ScenarioError("airfield sits on impassable elevation",
                                    field="problem.airfield_xy")
        else:
            raise ScenarioError("problem must be GrrProblem or MrapProblem",
                                field="problem")
        # Validates wind-vs-airspeed compatibility as a side effect.
        self.glide_field()

    def z_range(self) -> tuple[float, float]:
        finite = self.elevation.values[np.isfinite(self.elevation.values)]
        lo = float(finite.min()) if finite.size else 0.0
        if isinstance(self.problem, GrrProblem):
            hi = max(self.problem.z0, lo)
        else:
            hi = float(finite.max()) + (self.grid.n_cols + self.grid.n_rows) * self.grid.spacing
        return lo, hi

    def glide_field(self) -> GlideField:
        lo, hi = self.z_range()
        return GlideField(self.wind, self.aircraft, self.grid, lo, hi)

    def seed_radius(self) -> float:
        if self.options.seed_radius is not None:
            return self.options.seed_radius
        h = self.grid.spacing
        return max(2 * h, self.glide_field().anisotropy_ratio * h)

    def with_problem(self, problem) -> "Scenario":
        return replace(self, problem=problem)


# ---------------------------------------------------------------------------
# Loading from documents


def _problem_from_config(cfg) -> object:
    if cfg is None:
        raise ScenarioError("problem section missing", field="problem")
    kind = cfg.get("kind")
    if kind == "grr":
        if "start_xy" not in cfg or "z0" not in cfg:
            raise ScenarioError("grr problem needs start_xy and z0", field="problem")
        return GrrProblem(start_xy=tuple(map(float, cfg["start_xy"])), z0=float(cfg["z0"]))
    if kind == "mrap":
        if "airfield_xy" not in cfg:
            raise ScenarioError("mrap problem needs airfield_xy", field="problem")
        return MrapProblem(airfield_xy=tuple(map(float, cfg["airfield_xy"])))
    raise ScenarioError(f"unknown problem kind {kind!r}", field="problem.kind")


def _problem_to_config(problem) -> dict:
    if isinstance(problem, GrrProblem):
        return {"kind": "grr", "start_xy": list(map(float, problem.start_xy)),
                "z0": float(problem.z0)}
    return {"kind": "mrap", "airfield_xy": list(map(float, problem.airfield_xy))}


def scenario_to_config(scenario: Scenario) -> dict:
    """Plain-JSON document for a scenario (inline elevation)."""
    values = [None if not np.isfinite(v) else float(v)
              for v in scenario.elevation.values]
    doc = {
        "grid": {"n_cols": scenario.grid.n_cols, "n_rows": scenario.grid.n_rows,
                 "spacing": scenario.grid.spacing,
                 "origin": list(scenario.grid.origin)},
        "elevation": {"values": values},
        "wind": wind_to_config(scenario.wind),
        "aircraft": aircraft_to_config(scenario.aircraft),
        "problem": _problem_to_config(scenario.problem),
        "options": {"seed_radius": scenario.options.seed_radius,
                    "direction_samples": scenario.options.direction_samples,
                    "safety_margin": scenario.options.safety_margin},
    }
    if scenario.name:
        doc["name"] = scenario.name
    return doc


def load_scenario(source, overrides: dict | None = None) -> tuple[Scenario, list[str]]:
    """Build a validated Scenario from a document, path, or preset name.

    Returns the scenario and the list of defaults that were applied.
    """
    from . import presets as presets_mod

    if isinstance(source, (str, Path)):
        name = str(source)
        if name in presets_mod.preset_names():
            scenario = presets_mod.build_preset(name)
            if overrides:
                doc = scenario_to_config(scenario)
                _deep_update(doc, overrides)
                return load_scenario(doc)
            return scenario, ["preset:" + name]
        path = Path(source)
        if not path.exists():
            raise ScenarioError(f"no preset or file named {name!r}")
        try:
            doc = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"malformed scenario document: {exc}") from exc
        return load_scenario(doc, overrides)

    if not isinstance(source, dict):
        raise ScenarioError("scenario source must be a dict, path, or preset name")
    doc = dict(source)
    if overrides:
        _deep_update(doc, overrides)

    if isinstance(doc.get("elevation"), dict) and "preset" in doc["elevation"]:
        raise ScenarioError("elevation presets are referenced by top-level preset name",
                            field="elevation")
    if "preset" in doc:
        base = presets_mod.build_preset(doc["preset"])
        merged = scenario_to_config(base)
        rest = {k: v for k, v in doc.items() if k != "preset"}
        _deep_update(merged, rest)
        scenario, _ = load_scenario(merged)
        return scenario, ["preset:" + doc["preset"]]

    applied = []
    grid_cfg = doc.get("grid")
    if grid_cfg is None:
        raise ScenarioError("grid section missing", field="grid")
    if "origin" not in grid_cfg:
        applied.append("grid.origin=(0,0)")
    grid = GridSpec(n_cols=int(grid_cfg.get("n_cols", 0)),
                    n_rows=int(grid_cfg.get("n_rows", 0)),
                    spacing=float(grid_cfg.get("spacing", 0.0)),
                    origin=tuple(grid_cfg.get("origin", (0.0, 0.0))))

    elev_cfg = doc.get("elevation")
    if elev_cfg is None:
        raise ScenarioError("elevation section missing", field="elevation")
    if isinstance(elev_cfg, dict) and "raster" in elev_cfg:
        from .ascii_grid import import_ascii_grid
        rgrid, elevation = import_ascii_grid(elev_cfg["raster"])
        if (rgrid.n_cols, rgrid.n_rows) != (grid.n_cols, grid.n_rows):
            raise ScenarioError(
                f"raster is {rgrid.n_cols}x{rgrid.n_rows}, grid says "
                f"{grid.n_cols}x{grid.n_rows}", field="elevation.raster")
    else:
        values = elev_cfg["values"] if isinstance(elev_cfg, dict) else elev_cfg
        values = [INF if v is None else v for v in values]
        elevation = ElevationField(values, grid)

    opt_cfg = doc.get("options") or {}
    if "options" not in doc:
        applied.append("options=defaults")
    options = SolveOptions(
        seed_radius=opt_cfg.get("seed_radius"),
        direction_samples=int(opt_cfg.get("direction_samples", 720)),
        safety_margin=float(opt_cfg.get("safety_margin", 0.0)))
    if options.safety_margin:
        elevation = ElevationField(elevation.values + options.safety_margin, grid)

    if "wind" not in doc:
        applied.append("wind=zero")
    wind = wind_from_config(doc.get("wind"), grid)
    aircraft = aircraft_from_config(doc.get("aircraft"))
    problem = _problem_from_config(doc.get("problem"))

    scenario = Scenario(grid=grid, elevation=elevation, wind=wind,
                        aircraft=aircraft, problem=problem, options=options,
                        name=doc.get("name"))
    return scenario, applied


def _deep_update(base: dict, extra: dict) -> None:
    for key, value in extra.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _deep_update(base[key], value)
        else:
            base[key] = value
