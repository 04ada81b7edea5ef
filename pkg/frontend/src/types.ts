/** Wire types for the solve service.
 *
 * Field values are per-node, row-major from the south-west corner; +inf
 * has no JSON literal, so unreachable nodes arrive as null with the
 * reachability mask carried separately.
 */

export interface GridMeta {
  n_cols: number;
  n_rows: number;
  spacing: number;
  origin: [number, number];
}

export interface ResultMeta {
  kind: "grr" | "mra";
  variant: string;
  runtime: number;
  grid: GridMeta;
}

export interface ContourSet {
  level: number;
  polylines: [number, number][][];
}

export interface Trajectory {
  vertices: [number, number, number][];
  kind: string;
  termination: string;
  arc_length: number;
}

export interface ResultDocument {
  schema_version: number;
  scenario: Record<string, unknown>;
  field: (number | null)[];
  reachable_mask: boolean[];
  contours: ContourSet[];
  trajectories: Trajectory[];
  meta: ResultMeta;
  result_id?: string;
}

export interface ApiError {
  code: string;
  message: string;
  field?: string;
}

export interface PresetInfo {
  name: string;
  description: string;
}
