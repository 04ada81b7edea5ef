"""HTTP facade over the solvers for interactive clients.

Endpoints:
  POST /api/solve    synchronous solve of an inline scenario document
  GET  /api/presets  built-in preset names and descriptions
  POST /api/trace    path trace for a cached result id or inline scenario

Errors are JSON with a machine-readable ``code``: 400 for validation
problems, 422 for infeasible/unsupported requests, 500 otherwise.
Solves are stateless; the small result cache only short-circuits traces
against a recent solve and may be dropped at any time.
"""

from __future__ import annotations

import threading
import uuid
from collections import OrderedDict

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .dispatch import solve_scenario, trace_scenario
from .document import result_to_document, trajectory_to_dict
from .errors import (ScenarioError, UndefinedDirectionError,
                     UnreachableTargetError, UnsupportedConfigurationError,
                     WindExceedsAirspeedError)
from .presets import preset_description, preset_names
from .scenario import load_scenario

MAX_NODES = 1_000_000
_CACHE_SIZE = 16


class _ResultCache:
    """Tiny thread-safe LRU of (scenario, result) keyed by result id."""

    def __init__(self, capacity: int = _CACHE_SIZE):
        self._lock = threading.Lock()
        self._items: OrderedDict = OrderedDict()
        self._capacity = capacity

    def put(self, scenario, result) -> str:
        rid = uuid.uuid4().hex
        with self._lock:
            self._items[rid] = (scenario, result)
            while len(self._items) > self._capacity:
                self._items.popitem(last=False)
        return rid

    def get(self, rid: str):
        with self._lock:
            item = self._items.get(rid)
            if item is not None:
                self._items.move_to_end(rid)
            return item


def _error(status: int, code: str, message: str, field=None) -> JSONResponse:
    body = {"code": code, "message": message}
    if field:
        body["field"] = field
    return JSONResponse(status_code=status, content=body)


def _load_checked(config):
    scenario, _ = load_scenario(config)
    if scenario.grid.n_nodes > MAX_NODES:
        raise UnsupportedConfigurationError(
            f"grid has {scenario.grid.n_nodes} nodes; the synchronous service "
            f"accepts at most {MAX_NODES}")
    return scenario


def create_app() -> FastAPI:
    app = FastAPI(title="gliderange", version="1")
    cache = _ResultCache()

    @app.exception_handler(ScenarioError)
    async def _scenario_error(request: Request, exc: ScenarioError):
        return _error(400, "invalid-scenario", str(exc),
                      getattr(exc, "field", None))

    @app.exception_handler(UnsupportedConfigurationError)
    async def _unsupported(request: Request, exc):
        return _error(422, "unsupported-configuration", str(exc))

    @app.exception_handler(WindExceedsAirspeedError)
    async def _wind(request: Request, exc):
        return _error(422, "wind-exceeds-airspeed", str(exc))

    @app.exception_handler(UnreachableTargetError)
    async def _unreachable(request: Request, exc):
        return _error(422, "unreachable-target", str(exc))

    @app.exception_handler(UndefinedDirectionError)
    async def _undefined(request: Request, exc):
        return _error(422, "undefined-direction", str(exc))

    @app.exception_handler(Exception)
    async def _internal(request: Request, exc):
        return _error(500, "internal-error", str(exc))

    @app.get("/api/presets")
    async def presets():
        return [{"name": name, "description": preset_description(name)}
                for name in preset_names()]

    @app.post("/api/solve")
    async def solve(request: Request):
        try:
            config = await request.json()
        except Exception:
            return _error(400, "invalid-json", "request body is not valid JSON")
        if not isinstance(config, dict):
            return _error(400, "invalid-scenario", "scenario must be an object")
        scenario = _load_checked(config)
        result = solve_scenario(scenario)
        doc = result_to_document(result).to_dict()
        doc["result_id"] = cache.put(scenario, result)
        return doc

    @app.post("/api/trace")
    async def trace(request: Request):
        try:
            body = await request.json()
        except Exception:
            return _error(400, "invalid-json", "request body is not valid JSON")
        if not isinstance(body, dict) or "target" not in body:
            return _error(400, "invalid-request", "body needs a target",
                          field="target")
        target = body["target"]
        if (not isinstance(target, (list, tuple)) or len(target) != 2):
            return _error(400, "invalid-request", "target must be [x, y]",
                          field="target")
        target = (float(target[0]), float(target[1]))
        rid = body.get("result_id")
        if rid:
            item = cache.get(rid)
            if item is None:
                return _error(422, "unknown-result",
                              f"result id {rid!r} is not cached; "
                              "re-solve and retry")
            scenario, result = item
        elif "scenario" in body:
            scenario = _load_checked(body["scenario"])
            result = solve_scenario(scenario)
        else:
            return _error(400, "invalid-request",
                          "body needs result_id or scenario")
        traj = trace_scenario(result, scenario, target)
        return {"trajectory": trajectory_to_dict(traj)}

    return app
