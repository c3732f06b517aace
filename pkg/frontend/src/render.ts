/** Pure rendering helpers for result panels (kept DOM-free for testing). */

import type { ConsistencyReport, MatrixDoc, SolveResult } from "./types.js";

/** One matrix row as the portal prints it, 2-decimal fractional subscripts. */
export function matrixLine(row: number[][]): string {
  return row
    .map((cell) => "(" + cell.map((v) => trimNumber(v, 2)).join(",") + ")")
    .join(" ");
}

export function matrixText(doc: MatrixDoc): string {
  return doc.cells.map((row) => matrixLine(row) + ";").join("\n");
}

function trimNumber(v: number, decimals: number): string {
  return Number.isInteger(v) ? String(v) : v.toFixed(decimals);
}

export function consistencyResultText(report: ConsistencyReport): string {
  return (
    matrixText(report.revised) +
    "\n\n" +
    `After adjusting the individual HFLPR ${report.adjustments} times, ` +
    "the HFLPR with acceptable consistency can be obtained."
  );
}

export function rankingText(result: SolveResult): string {
  const weights = result.ranking_weights.map((w) => trimNumber(w, 4)).join(",");
  return (
    `Ranking weight:${weights}\n` +
    `The numbers of iterations for this method to reach consensus is ` +
    `${result.rounds_to_consensus}\n` +
    `Ranking: ${result.ranking_string}`
  );
}
