import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { Recomputer } from "../src/recompute.js";
import { initialState, moveMarker, type ExplorerState } from "../src/state.js";
import type { GridMeta, ResultDocument } from "../src/types.js";
import { deferredFetch, fakeService, loadFixture } from "./helpers.js";

const grid: GridMeta = { n_cols: 101, n_rows: 101, spacing: 1, origin: [0, 0] };

function flatState(): ExplorerState {
  return { ...initialState(grid), preset: "grrp-flat", z0: 40 };
}

describe("recompute loop", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("turns a rapid-drag storm into exactly one solve and one render", async () => {
    const service = fakeService();
    const results: ResultDocument[] = [];
    const recomputer = new Recomputer(
      new ApiClient("http://test", service.fetch),
      { onResult: (r) => results.push(r), onError: () => {} },
    );

    let state = flatState();
    for (let i = 0; i < 40; i++) {
      // Wander the marker, ending on the shifted fixture position.
      state = moveMarker(state, [50 + (i % 11), 50]);
      recomputer.requestSolve(state);
      vi.advanceTimersByTime(5);
    }
    state = moveMarker(state, [60, 50]);
    recomputer.requestSolve(state);

    await vi.advanceTimersByTimeAsync(150);

    expect(service.solveCalls.length).toBe(1); // last writer wins
    expect(results.length).toBe(1);
    const problem = service.solveCalls[0].problem as { start_xy: [number, number] };
    expect(problem.start_xy).toEqual([60, 50]);
    expect(results[0].scenario.problem).toMatchObject({ start_xy: [60.0, 50.0] });
  });

  it("discards a superseded response even when it resolves last", async () => {
    const deferred = deferredFetch();
    const results: ResultDocument[] = [];
    const recomputer = new Recomputer(
      new ApiClient("http://test", deferred.fetch),
      { onResult: (r) => results.push(r), onError: () => {} },
    );

    const center = loadFixture("flat-grr-center.json");
    const shifted = loadFixture("flat-grr-shifted.json");

    const first = recomputer.solveNow(flatState());
    const second = recomputer.solveNow(moveMarker(flatState(), [60, 50]));
    expect(deferred.calls).toBe(2);

    deferred.resolve(1, shifted); // newest answer arrives first
    await second;
    deferred.resolve(0, center); // stale answer arrives late
    await first;

    expect(results.length).toBe(1);
    expect(results[0]).toBe(shifted);
  });

  it("keeps the previous view and raises a banner on API failure", async () => {
    const deferred = deferredFetch();
    const results: ResultDocument[] = [];
    const banners: string[] = [];
    const recomputer = new Recomputer(
      new ApiClient("http://test", deferred.fetch),
      { onResult: (r) => results.push(r), onError: (m) => banners.push(m) },
    );

    const center = loadFixture("flat-grr-center.json");
    const first = recomputer.solveNow(flatState());
    deferred.resolve(0, center);
    await first;
    expect(results.length).toBe(1);

    const second = recomputer.solveNow(moveMarker(flatState(), [60, 50]));
    deferred.reject(1, "connection refused");
    await second;

    expect(banners).toEqual(["connection refused"]);
    expect(results.length).toBe(1); // previous view untouched
  });

  it("reports a failure only if no newer request superseded it", async () => {
    const deferred = deferredFetch();
    const banners: string[] = [];
    const results: ResultDocument[] = [];
    const recomputer = new Recomputer(
      new ApiClient("http://test", deferred.fetch),
      { onResult: (r) => results.push(r), onError: (m) => banners.push(m) },
    );

    const first = recomputer.solveNow(flatState());
    const second = recomputer.solveNow(moveMarker(flatState(), [60, 50]));
    deferred.resolve(1, loadFixture("flat-grr-shifted.json"));
    await second;
    deferred.reject(0, "late failure of a stale request");
    await first;

    expect(results.length).toBe(1);
    expect(banners).toEqual([]);
  });
});
