/** Shared types for the portal and its service client. */

/** Matrix document on the wire: cells are explicit subscript lists. */
export interface MatrixDoc {
  tau: number;
  n: number;
  cells: number[][][];
}

/** One cell of the entry grid: min and max subscript of the hesitant run. */
export interface MinMaxCell {
  min: number;
  max: number;
}

/** The whole form: an n x n grid of Min/Max pairs over scale tau. */
export interface FormMatrix {
  tau: number;
  n: number;
  grid: MinMaxCell[][];
}

export interface ConsistencyParams {
  alpha?: number;
  beta?: number;
  threshold?: number;
}

export interface ConsistencyReport {
  input: MatrixDoc;
  accepted: boolean;
  iterations: number;
  adjustments: number;
  hflgci: number;
  hflgci_trace: number[];
  optimal_slice: number;
  priority: number[];
  revised: MatrixDoc;
  message: string;
}

export interface SessionInfo {
  id: string;
  n: number;
  tau: number;
  gamma: number;
}

export interface SubmitAck {
  person: number;
  summary: string;
}

export interface SolveResult {
  ranking_weights: number[];
  ranking: number[];
  ranking_string: string;
  rounds_to_consensus: number;
  dm_weights: number[];
  message: string;
}

/** Field-level validation problem, anchored at a grid cell (1-based). */
export interface CellError {
  i: number;
  j: number;
  field: "min" | "max" | "both";
  message: string;
}
