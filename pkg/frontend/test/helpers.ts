/** Shared test plumbing: fixture loading and a fake solve service.
 *
 * Fixtures are real solver output captured from the HTTP-facing
 * document serializer, so the tests exercise genuine field/mask/contour
 * data without a live server.
 */

import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";

import type { FetchLike } from "../src/api.js";
import type { ResultDocument } from "../src/types.js";

export function loadFixture(name: string): ResultDocument {
  const path = fileURLToPath(new URL(`./fixtures/${name}`, import.meta.url));
  return JSON.parse(readFileSync(path, "utf-8")) as ResultDocument;
}

function jsonResponse(status: number, payload: unknown) {
  return {
    ok: status < 400,
    status,
    json: () => Promise.resolve(payload),
  };
}

export interface FakeService {
  fetch: FetchLike;
  /** Scenario documents received by POST /api/solve, in order. */
  solveCalls: Record<string, unknown>[];
}

/** Solve endpoint backed by the captured fixtures, keyed on the posted
 * marker position. When `latencyMs` is set each solve resolves after
 * that delay, standing in for server round-trip plus solver runtime.
 */
export function fakeService(latencyMs = 0): FakeService {
  const center = loadFixture("flat-grr-center.json");
  const shifted = loadFixture("flat-grr-shifted.json");
  const solveCalls: Record<string, unknown>[] = [];

  const fetch: FetchLike = async (url, init) => {
    if (!url.endsWith("/api/solve")) {
      return jsonResponse(404, { code: "unknown-route", message: url });
    }
    const scenario = JSON.parse(init?.body ?? "{}") as Record<string, unknown>;
    solveCalls.push(scenario);
    if (latencyMs > 0) {
      await new Promise((resolve) => setTimeout(resolve, latencyMs));
    }
    const problem = scenario.problem as { start_xy?: [number, number] };
    const x = problem?.start_xy?.[0];
    if (x === 60) return jsonResponse(200, shifted);
    if (x === 50) return jsonResponse(200, center);
    return jsonResponse(422, {
      code: "unreachable-target",
      message: "no fixture for this marker",
    });
  };

  return { fetch, solveCalls };
}

/** A fetch whose responses are resolved manually by the test. */
export function deferredFetch(): {
  fetch: FetchLike;
  resolve(index: number, doc: ResultDocument): void;
  reject(index: number, message: string): void;
  calls: number;
} {
  const pending: ((r: {
    ok: boolean;
    status: number;
    json(): Promise<unknown>;
  }) => void)[] = [];
  const rejecters: ((err: Error) => void)[] = [];
  const fetch: FetchLike = () =>
    new Promise((resolve, reject) => {
      pending.push(resolve);
      rejecters.push(reject);
    });
  return {
    fetch,
    resolve: (index, doc) => pending[index](jsonResponse(200, doc)),
    reject: (index, message) => rejecters[index](new Error(message)),
    get calls() {
      return pending.length;
    },
  };
}
