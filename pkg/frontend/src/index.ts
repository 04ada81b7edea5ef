export * from "./types.js";
export * from "./api.js";
export * from "./debounce.js";
export * from "./state.js";
export * from "./recompute.js";
export * from "./render.js";
