/**
 * Client-side form validation, mirroring the server's rules:
 *
 *   1. every entry is a subscript number within [0, 2*tau];
 *   2. Min(i,j) <= Max(i,j) in every cell;
 *   3. Max(i,j) + Min(j,i) = 2*tau across the matrix (reciprocity);
 *   plus the diagonal is locked to the indifference term tau.
 *
 * Anything this module accepts the service accepts too (the contract test
 * fuzzes exactly that); the converse is not required.
 */

import type { CellError, FormMatrix, MatrixDoc, MinMaxCell } from "./types.js";

/** Parse one input box; NaN marks a non-numeric or empty entry. */
export function parseSubscript(raw: string): number {
  const trimmed = raw.trim();
  if (trimmed === "" || !/^-?\d+(\.\d+)?$/.test(trimmed)) return NaN;
  return Number(trimmed);
}

/** All rule violations in the form, anchored to cells (1-based). */
export function validateForm(form: FormMatrix): CellError[] {
  const errors: CellError[] = [];
  const top = 2 * form.tau;
  const { n, grid } = form;

  for (let i = 0; i < n; i++) {
    for (let j = 0; j < n; j++) {
      const cell = grid[i][j];
      for (const field of ["min", "max"] as const) {
        const v = cell[field];
        if (!Number.isFinite(v)) {
          errors.push({ i: i + 1, j: j + 1, field, message: "enter a number" });
        } else if (v < 0 || v > top) {
          errors.push({
            i: i + 1,
            j: j + 1,
            field,
            message: `subscript must be between 0 and ${top}`,
          });
        }
      }
    }
  }
  if (errors.length > 0) return errors; // range first, structure second

  for (let i = 0; i < n; i++) {
    const d = grid[i][i];
    if (d.min !== form.tau || d.max !== form.tau) {
      errors.push({
        i: i + 1,
        j: i + 1,
        field: "both",
        message: `diagonal is the indifference term s_${form.tau}`,
      });
    }
  }

  for (let i = 0; i < n; i++) {
    for (let j = 0; j < n; j++) {
      if (grid[i][j].min > grid[i][j].max) {
        errors.push({
          i: i + 1,
          j: j + 1,
          field: "both",
          message: "Min must not exceed Max",
        });
      }
    }
  }
  if (errors.length > 0) return errors;

  for (let i = 0; i < n; i++) {
    for (let j = i + 1; j < n; j++) {
      if (grid[i][j].max + grid[j][i].min !== top) {
        errors.push({
          i: i + 1,
          j: j + 1,
          field: "both",
          message: `Max(${i + 1},${j + 1}) + Min(${j + 1},${i + 1}) must equal ${top}`,
        });
      }
      if (grid[i][j].min + grid[j][i].max !== top) {
        errors.push({
          i: j + 1,
          j: i + 1,
          field: "both",
          message: `Max(${j + 1},${i + 1}) + Min(${i + 1},${j + 1}) must equal ${top}`,
        });
      }
    }
  }
  return errors;
}

/** Expand the validated Min/Max grid into the wire format (full runs). */
export function formToMatrixDoc(form: FormMatrix): MatrixDoc {
  const cells: number[][][] = [];
  for (let i = 0; i < form.n; i++) {
    const row: number[][] = [];
    for (let j = 0; j < form.n; j++) {
      const { min, max } = form.grid[i][j];
      const run: number[] = [];
      for (let v = min; v <= max; v++) run.push(v);
      row.push(run);
    }
    cells.push(row);
  }
  return { tau: form.tau, n: form.n, cells };
}

/** A fresh all-indifference grid (every cell s_tau). */
export function neutralForm(n: number, tau = 4): FormMatrix {
  const grid: MinMaxCell[][] = [];
  for (let i = 0; i < n; i++) {
    const row: MinMaxCell[] = [];
    for (let j = 0; j < n; j++) row.push({ min: tau, max: tau });
    grid.push(row);
  }
  return { tau, n, grid };
}
