/** Canvas rendering for the value field and overlays.
 *
 * Pure pixel-buffer functions so tests can assert on exact RGBA values;
 * `blit` is the only piece that touches a real 2D context.
 */

import type { ResultDocument, Trajectory } from "./types.js";

export interface CanvasSize {
  width: number;
  height: number;
}

export class RenderError extends Error {}

const RED: [number, number, number] = [255, 0, 0];

/** Blue-to-yellow ramp for finite field values. */
function colorFor(value: number, lo: number, hi: number): [number, number, number] {
  const t = hi > lo ? (value - lo) / (hi - lo) : 0;
  return [Math.round(40 + 215 * t), Math.round(60 + 180 * t), Math.round(200 - 160 * t)];
}

/** Row-major node index for a pixel, nearest-node sampling.
 *
 * Pixel row 0 is the top of the canvas, node row 0 the south edge, so
 * rows flip.
 */
export function pixelToNode(
  px: number,
  py: number,
  canvas: CanvasSize,
  nCols: number,
  nRows: number,
): number {
  const col = Math.min(Math.floor(((px + 0.5) / canvas.width) * nCols), nCols - 1);
  const rowFromTop = Math.min(
    Math.floor(((py + 0.5) / canvas.height) * nRows),
    nRows - 1,
  );
  return (nRows - 1 - rowFromTop) * nCols + col;
}

/** Paint the value field: nearest-node coloring, null (unreachable)
 * nodes solid red. Returns the RGBA buffer.
 */
export function renderField(
  result: ResultDocument,
  canvas: CanvasSize,
): Uint8ClampedArray {
  const { n_cols: nCols, n_rows: nRows } = result.meta.grid;
  if (result.field.length !== nCols * nRows) {
    throw new RenderError(
      `field has ${result.field.length} values for a ${nCols}x${nRows} grid`,
    );
  }
  if (canvas.width <= 0 || canvas.height <= 0) {
    throw new RenderError("canvas has no area");
  }

  let lo = Infinity;
  let hi = -Infinity;
  for (const v of result.field) {
    if (v !== null) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }

  const pixels = new Uint8ClampedArray(canvas.width * canvas.height * 4);
  for (let py = 0; py < canvas.height; py++) {
    for (let px = 0; px < canvas.width; px++) {
      const value = result.field[pixelToNode(px, py, canvas, nCols, nRows)];
      const rgb = value === null ? RED : colorFor(value, lo, hi);
      const at = (py * canvas.width + px) * 4;
      pixels[at] = rgb[0];
      pixels[at + 1] = rgb[1];
      pixels[at + 2] = rgb[2];
      pixels[at + 3] = 255;
    }
  }
  return pixels;
}

/** True when the pixel carries the unreachable (red) shade. */
export function isRedPixel(pixels: Uint8ClampedArray, width: number, px: number, py: number): boolean {
  const at = (py * width + px) * 4;
  return pixels[at] === RED[0] && pixels[at + 1] === RED[1] && pixels[at + 2] === RED[2];
}

/** Canvas pixel at the center of a grid cell (node row 0 = south). */
export function cellCenterPixel(
  col: number,
  row: number,
  canvas: CanvasSize,
  nCols: number,
  nRows: number,
): [number, number] {
  const px = Math.floor(((col + 0.5) / nCols) * canvas.width);
  const py = Math.floor(((nRows - 1 - row + 0.5) / nRows) * canvas.height);
  return [px, py];
}

/** Map coordinates -> canvas pixel coordinates. */
export function mapToPixel(
  xy: [number, number],
  result: ResultDocument,
  canvas: CanvasSize,
): [number, number] {
  const { n_cols: nCols, n_rows: nRows, spacing, origin } = result.meta.grid;
  const fx = (xy[0] - origin[0]) / (spacing * (nCols - 1));
  const fy = (xy[1] - origin[1]) / (spacing * (nRows - 1));
  return [fx * (canvas.width - 1), (1 - fy) * (canvas.height - 1)];
}

/** Contour polylines and a trace path as pixel-space polylines, ready
 * for a stroke loop.
 */
export function overlayPolylines(
  result: ResultDocument,
  canvas: CanvasSize,
  trace: Trajectory | null,
): [number, number][][] {
  const lines: [number, number][][] = [];
  for (const set of result.contours) {
    for (const poly of set.polylines) {
      lines.push(poly.map((p) => mapToPixel(p, result, canvas)));
    }
  }
  if (trace) {
    lines.push(trace.vertices.map((v) => mapToPixel([v[0], v[1]], result, canvas)));
  }
  return lines;
}

interface Context2DLike {
  putImageData(data: { data: Uint8ClampedArray; width: number; height: number }, x: number, y: number): void;
}

/** Push a rendered buffer onto a real canvas context. */
export function blit(
  ctx: Context2DLike,
  pixels: Uint8ClampedArray,
  canvas: CanvasSize,
): void {
  ctx.putImageData({ data: pixels, width: canvas.width, height: canvas.height }, 0, 0);
}
