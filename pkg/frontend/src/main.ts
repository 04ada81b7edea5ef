/** Browser entry point: wires the controls, canvas, and recompute loop.
 *
 * Everything numeric on screen comes from the solve service; this file
 * only moves data between DOM events and the API.
 */

import { ApiClient, ApiRequestError } from "./api.js";
import { Recomputer } from "./recompute.js";
import {
  blit,
  isRedPixel,
  mapToPixel,
  overlayPolylines,
  renderField,
} from "./render.js";
import {
  initialState,
  moveMarker,
  readout,
  type ExplorerState,
} from "./state.js";
import type { GridMeta, ResultDocument, Trajectory } from "./types.js";

const DEFAULT_GRID: GridMeta = {
  n_cols: 101,
  n_rows: 101,
  spacing: 1,
  origin: [0, 0],
};

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

export function startExplorer(baseUrl: string): void {
  const canvas = byId<HTMLCanvasElement>("map");
  const ctx = canvas.getContext("2d");
  if (!ctx) throw new Error("2D canvas unavailable");
  const banner = byId<HTMLElement>("banner");
  const cursorReadout = byId<HTMLElement>("readout");

  let state: ExplorerState = { ...initialState(DEFAULT_GRID), preset: "grrp-flat" };
  let trace: Trajectory | null = null;

  const api = new ApiClient(baseUrl);

  function canvasToMap(ev: MouseEvent): [number, number] {
    const rect = canvas.getBoundingClientRect();
    const grid = state.lastResult?.meta.grid ?? state.grid;
    const fx = (ev.clientX - rect.left) / rect.width;
    const fy = 1 - (ev.clientY - rect.top) / rect.height;
    return [
      grid.origin[0] + fx * grid.spacing * (grid.n_cols - 1),
      grid.origin[1] + fy * grid.spacing * (grid.n_rows - 1),
    ];
  }

  function draw(doc: ResultDocument): void {
    const pixels = renderField(doc, canvas);
    blit(ctx!, pixels, canvas);
    ctx!.strokeStyle = "#222";
    for (const line of overlayPolylines(doc, canvas, trace)) {
      ctx!.beginPath();
      line.forEach(([px, py], i) => (i ? ctx!.lineTo(px, py) : ctx!.moveTo(px, py)));
      ctx!.stroke();
    }
    const [mx, my] = mapToPixel(state.marker, doc, canvas);
    ctx!.fillStyle = isRedPixel(pixels, canvas.width, Math.round(mx), Math.round(my))
      ? "#fff"
      : "#000";
    ctx!.beginPath();
    ctx!.arc(mx, my, 5, 0, 2 * Math.PI);
    ctx!.fill();
  }

  const recomputer = new Recomputer(api, {
    onResult: (doc) => {
      state = { ...state, lastResult: doc, errorBanner: null };
      banner.hidden = true;
      draw(doc);
    },
    onError: (message) => {
      state = { ...state, errorBanner: message };
      banner.hidden = false;
      banner.textContent = message; // previous view stays on the canvas
    },
  });

  let dragging = false;
  canvas.addEventListener("mousedown", () => (dragging = true));
  window.addEventListener("mouseup", () => (dragging = false));
  canvas.addEventListener("mousemove", (ev) => {
    const xy = canvasToMap(ev);
    if (dragging) {
      state = moveMarker(state, xy);
      trace = null;
      recomputer.requestSolve(state);
    }
    if (state.lastResult) {
      const value = readout(state.lastResult, xy);
      cursorReadout.textContent = value === null ? "unreachable" : value.toFixed(2);
    }
  });

  canvas.addEventListener("click", async (ev) => {
    const doc = state.lastResult;
    if (dragging || !doc?.result_id) return;
    try {
      trace = await api.trace(doc.result_id, canvasToMap(ev));
      draw(doc);
    } catch (err) {
      banner.hidden = false;
      banner.textContent =
        err instanceof ApiRequestError ? err.message : "trace failed";
    }
  });

  const bind = (id: string, apply: (value: number) => void) => {
    byId<HTMLInputElement>(id).addEventListener("input", (ev) => {
      apply(Number((ev.target as HTMLInputElement).value));
      trace = null;
      recomputer.requestSolve(state);
    });
  };
  bind("z0", (v) => (state = { ...state, z0: v }));
  bind("wind-speed", (v) => (state = { ...state, windSpeed: v }));
  bind("wind-bearing", (v) => (state = { ...state, windBearingDeg: v }));
  byId<HTMLSelectElement>("mode").addEventListener("change", (ev) => {
    const mode = (ev.target as HTMLSelectElement).value === "mrap" ? "mrap" : "grrp";
    state = {
      ...state,
      mode,
      preset: mode === "mrap" ? "mrap-flat" : "grrp-flat",
    };
    trace = null;
    recomputer.requestSolve(state);
  });

  void recomputer.solveNow(state);
}
