"""Result serialization: a versioned, JSON-safe document for one solve.

+inf has no JSON literal, so field values use null with the reachability
mask carried separately.  Serialization is canonical (sorted keys, fixed
separators), so serialize -> parse -> serialize is byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .grrp import GrrpResult
from .mrap import MrapResult
from .scenario import scenario_to_config
from .trajectories import Trajectory

SCHEMA_VERSION = 1


@dataclass
class ResultDocument:
    """One solve result with optional contours and trajectories."""

    schema_version: int
    scenario: dict
    field: list
    reachable_mask: list
    contours: list
    trajectories: list
    meta: dict

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "scenario": self.scenario,
            "field": self.field,
            "reachable_mask": self.reachable_mask,
            "contours": self.contours,
            "trajectories": self.trajectories,
            "meta": self.meta,
        }


def _field_to_json(values: np.ndarray) -> list:
    return [float(v) if np.isfinite(v) else None for v in values]


def trajectory_to_dict(traj: Trajectory) -> dict:
    return {
        "vertices": [[float(x), float(y), float(z)]
                     for x, y, z in traj.vertices],
        "kind": traj.kind,
        "termination": traj.termination,
        "arc_length": float(traj.arc_length),
    }


def contours_to_json(contour_sets) -> list:
    return [{"level": float(level),
             "polylines": [[[float(x), float(y)] for x, y in poly]
                           for poly in polys]}
            for level, polys in contour_sets]


def result_to_document(result, contour_sets=None,
                       trajectories=None) -> ResultDocument:
    """Build a document from a reachable-region or return-altitude result."""
    scenario = result.scenario
    if isinstance(result, GrrpResult):
        values = result.U
        mask = result.reachable_mask
        variant = result.meta.get("variant", "grr")
        kind = "grr"
    elif isinstance(result, MrapResult):
        values = result.V
        mask = np.isfinite(result.V)
        variant = "mra"
        kind = "mra"
    else:
        raise TypeError(f"unsupported result type {type(result).__name__}")
    meta = {
        "kind": kind,
        "variant": variant,
        "runtime": float(result.meta.get("runtime", 0.0)),
        "grid": {"n_cols": scenario.grid.n_cols,
                 "n_rows": scenario.grid.n_rows,
                 "spacing": float(scenario.grid.spacing),
                 "origin": [float(scenario.grid.origin[0]),
                            float(scenario.grid.origin[1])]},
    }
    return ResultDocument(
        schema_version=SCHEMA_VERSION,
        scenario=scenario_to_config(scenario),
        field=_field_to_json(values),
        reachable_mask=[bool(m) for m in mask],
        contours=contours_to_json(contour_sets) if contour_sets else [],
        trajectories=[trajectory_to_dict(t) for t in (trajectories or [])],
        meta=meta,
    )


def document_to_json(doc: ResultDocument) -> str:
    """Canonical JSON text (stable key order and separators)."""
    return json.dumps(doc.to_dict(), sort_keys=True, separators=(",", ":"),
                      allow_nan=False)


def parse_document(source) -> ResultDocument:
    """Parse a document from JSON text or an already-parsed dict."""
    data = json.loads(source) if isinstance(source, str) else dict(source)
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(
            f"unsupported schema_version {data.get('schema_version')!r}")
    n = len(data["field"])
    if len(data["reachable_mask"]) != n:
        raise ValueError("reachable_mask length differs from field length")
    return ResultDocument(
        schema_version=data["schema_version"],
        scenario=data["scenario"],
        field=data["field"],
        reachable_mask=data["reachable_mask"],
        contours=data.get("contours", []),
        trajectories=data.get("trajectories", []),
        meta=data.get("meta", {}),
    )


def field_array(doc: ResultDocument) -> np.ndarray:
    """Per-node values with null restored to +inf."""
    return np.array([np.inf if v is None else float(v) for v in doc.field])
