/** Explorer state: controls plus the last completed solve.
 *
 * The displayed mask/contours always derive from `lastResult`; a pending
 * solve never blends into the view until it completes and wins the
 * sequence race (see recompute.ts).
 */

import type { GridMeta, ResultDocument, Trajectory } from "./types.js";

export type Mode = "grrp" | "mrap";

export interface ExplorerState {
  preset: string | null;
  scenario: Record<string, unknown> | null;
  mode: Mode;
  marker: [number, number];
  z0: number;
  windSpeed: number;
  windBearingDeg: number;
  glideRatio: number;
  grid: GridMeta;
  lastResult: ResultDocument | null;
  traceTarget: [number, number] | null;
  lastTrace: Trajectory | null;
  errorBanner: string | null;
}

export function initialState(grid: GridMeta): ExplorerState {
  return {
    preset: null,
    scenario: null,
    mode: "grrp",
    marker: [grid.origin[0], grid.origin[1]],
    z0: 100,
    windSpeed: 0,
    windBearingDeg: 0,
    glideRatio: 1,
    grid,
    lastResult: null,
    traceTarget: null,
    lastTrace: null,
    errorBanner: null,
  };
}

/** Keep the marker inside the grid bounds. */
export function clampMarker(
  grid: GridMeta,
  xy: [number, number],
): [number, number] {
  const [ox, oy] = grid.origin;
  const maxX = ox + (grid.n_cols - 1) * grid.spacing;
  const maxY = oy + (grid.n_rows - 1) * grid.spacing;
  return [
    Math.min(Math.max(xy[0], ox), maxX),
    Math.min(Math.max(xy[1], oy), maxY),
  ];
}

export function moveMarker(
  state: ExplorerState,
  xy: [number, number],
): ExplorerState {
  return { ...state, marker: clampMarker(state.grid, xy) };
}

/** Row-major node index nearest to a map position. */
export function nearestNode(grid: GridMeta, xy: [number, number]): number {
  const col = Math.min(
    Math.max(Math.round((xy[0] - grid.origin[0]) / grid.spacing), 0),
    grid.n_cols - 1,
  );
  const row = Math.min(
    Math.max(Math.round((xy[1] - grid.origin[1]) / grid.spacing), 0),
    grid.n_rows - 1,
  );
  return row * grid.n_cols + col;
}

/** Value shown under the cursor: the API field value at the nearest
 * node, verbatim — the client never recomputes or interpolates it.
 */
export function readout(
  result: ResultDocument,
  xy: [number, number],
): number | null {
  return result.field[nearestNode(result.meta.grid, xy)];
}

/** Scenario document for the current controls, sent to POST /api/solve. */
export function buildScenario(state: ExplorerState): Record<string, unknown> {
  const problem =
    state.mode === "grrp"
      ? { kind: "grr", start_xy: state.marker, z0: state.z0 }
      : { kind: "mrap", airfield_xy: state.marker };
  const wind =
    state.windSpeed === 0
      ? { variant: "zero" }
      : {
          variant: "uniform",
          speed: state.windSpeed,
          bearing_deg: state.windBearingDeg,
        };
  const base: Record<string, unknown> = state.preset
    ? { preset: state.preset }
    : { ...(state.scenario ?? {}) };
  return { ...base, problem, wind };
}
