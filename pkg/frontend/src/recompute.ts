/** Live recompute loop: debounce control changes, solve via the API,
 * discard superseded responses, render only the winner.
 */

import { ApiClient } from "./api.js";
import { debounce } from "./debounce.js";
import { buildScenario, type ExplorerState } from "./state.js";
import type { ResultDocument } from "./types.js";

export const DEBOUNCE_MS = 150;

export interface RecomputerHooks {
  /** Called with each result that wins the sequence race. */
  onResult(result: ResultDocument): void;
  /** API failure: show a non-blocking banner, keep the previous view. */
  onError(message: string): void;
}

export class Recomputer {
  private seq = 0;
  private readonly fire: (state: ExplorerState) => void;

  constructor(
    private readonly api: ApiClient,
    private readonly hooks: RecomputerHooks,
    waitMs: number = DEBOUNCE_MS,
  ) {
    this.fire = debounce((state: ExplorerState) => {
      void this.solveNow(state);
    }, waitMs);
  }

  /** Debounced entry point for every control change. */
  requestSolve(state: ExplorerState): void {
    this.fire(state);
  }

  /** Immediate solve; still participates in the sequence race. */
  async solveNow(state: ExplorerState): Promise<void> {
    const mySeq = ++this.seq;
    try {
      const result = await this.api.solve(buildScenario(state));
      if (mySeq !== this.seq) return; // superseded: a newer change won
      this.hooks.onResult(result);
    } catch (err) {
      if (mySeq !== this.seq) return;
      this.hooks.onError(err instanceof Error ? err.message : String(err));
    }
  }
}
