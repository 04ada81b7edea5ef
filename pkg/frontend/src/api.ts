/** Thin fetch wrapper over the solve service.
 *
 * The client never computes field values itself; everything rendered or
 * displayed comes back from these endpoints.
 */

import type { PresetInfo, ResultDocument, Trajectory } from "./types.js";

export type FetchLike = (
  url: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<{ ok: boolean; status: number; json(): Promise<unknown> }>;

export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly field?: string,
  ) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = fetch as unknown as FetchLike,
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    const payload = (await response.json()) as Record<string, unknown>;
    if (!response.ok) {
      throw new ApiRequestError(
        response.status,
        String(payload.code ?? "unknown"),
        String(payload.message ?? "request failed"),
        payload.field === undefined ? undefined : String(payload.field),
      );
    }
    return payload as T;
  }

  async presets(): Promise<PresetInfo[]> {
    const response = await this.fetchFn(this.baseUrl + "/api/presets");
    return (await response.json()) as PresetInfo[];
  }

  solve(scenario: Record<string, unknown>): Promise<ResultDocument> {
    return this.post<ResultDocument>("/api/solve", scenario);
  }

  async trace(
    resultId: string,
    target: [number, number],
  ): Promise<Trajectory> {
    const payload = await this.post<{ trajectory: Trajectory }>("/api/trace", {
      result_id: resultId,
      target,
    });
    return payload.trajectory;
  }
}
