/**
 * Contract tests against the live service: anything the client-side
 * validator accepts, POST /api/consistency must accept too, and the
 * rendered results must agree with the service's numbers.
 *
 * The service is spawned by tests/global-setup.ts on port 8123.
 */
import { describe, expect, it } from "vitest";

import { PortalClient } from "../src/api.js";
import { consistencyResultText, matrixLine, rankingText } from "../src/render.js";
import type { FormMatrix, MinMaxCell } from "../src/types.js";
import { formToMatrixDoc, validateForm } from "../src/validation.js";

const BASE = process.env.HFLGDM_TEST_API ?? "http://127.0.0.1:8123";
const client = new PortalClient(BASE);

/** Deterministic small PRNG so the fuzz corpus is reproducible. */
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function randomValidForm(rand: () => number): FormMatrix {
  const n = 3 + Math.floor(rand() * 3); // 3..5
  const tau = 4;
  const grid: MinMaxCell[][] = Array.from({ length: n }, () =>
    Array.from({ length: n }, () => ({ min: tau, max: tau }))
  );
  for (let i = 0; i < n; i++) {
    for (let j = i + 1; j < n; j++) {
      const lo = Math.floor(rand() * 9);
      const hi = lo + Math.floor(rand() * (9 - lo));
      grid[i][j] = { min: lo, max: hi };
      grid[j][i] = { min: 2 * tau - hi, max: 2 * tau - lo };
    }
  }
  return { tau, n, grid };
}

const FIGURE6: FormMatrix = {
  tau: 4,
  n: 3,
  grid: [
    [[4, 4], [5, 6], [4, 6]],
    [[2, 3], [4, 4], [2, 4]],
    [[2, 4], [4, 6], [4, 4]],
  ].map((row) => row.map(([min, max]) => ({ min, max }))),
};

const INDEX2_GROUP: FormMatrix[] = [
  [
    [[4, 4], [5, 6], [4, 6]],
    [[2, 3], [4, 4], [2, 4]],
    [[2, 4], [4, 6], [4, 4]],
  ],
  [
    [[4, 4], [4, 5], [5, 6]],
    [[3, 4], [4, 4], [3, 5]],
    [[2, 3], [3, 5], [4, 4]],
  ],
  [
    [[4, 4], [4, 6], [4, 5]],
    [[2, 4], [4, 4], [3, 5]],
    [[3, 4], [3, 5], [4, 4]],
  ],
  [
    [[4, 4], [5, 6], [5, 6]],
    [[2, 3], [4, 4], [3, 5]],
    [[2, 3], [3, 5], [4, 4]],
  ],
].map((rows) => ({
  tau: 4,
  n: 3,
  grid: rows.map((row) => row.map(([min, max]) => ({ min, max }))),
}));

describe("client validation is a subset of server validation", () => {
  it("200 fuzzed valid forms are all accepted by /api/consistency", async () => {
    const rand = mulberry32(20240);
    let accepted = 0;
    for (let k = 0; k < 200; k++) {
      const form = randomValidForm(rand);
      expect(validateForm(form)).toEqual([]);
      const report = await client.checkConsistency(formToMatrixDoc(form), {
        beta: 0.5,
      });
      expect(report.accepted).toBe(true);
      expect(report.revised.n).toBe(form.n);
      accepted += 1;
    }
    expect(accepted).toBe(200);
  }, 120_000);
});

describe("portal rendering matches the service", () => {
  it("renders the revised matrix exactly as the service reports it", async () => {
    const report = await client.checkConsistency(formToMatrixDoc(FIGURE6), {
      alpha: 1.2,
      beta: 0.5,
    });
    const text = consistencyResultText(report);
    // every revised row appears verbatim in the rendered panel
    for (const row of report.revised.cells) {
      expect(text).toContain(matrixLine(row));
    }
    expect(text).toContain(
      `After adjusting the individual HFLPR ${report.adjustments} times`
    );
    expect(report.adjustments).toBe(3);
    // revised values follow the published repair of this matrix
    expect(report.revised.cells[0][1][0]).toBeCloseTo(5.5408, 2);
    expect(report.revised.cells[0][1][1]).toBeCloseTo(5.6658, 2);
  });

  it("group flow at gamma=0.9 renders weights within 0.01 of the published run", async () => {
    const session = await client.createSession(3, 4, 0.9, { alpha: 1.2, beta: 0.5 });
    for (const form of INDEX2_GROUP) {
      expect(validateForm(form)).toEqual([]);
      await client.submitMatrix(session.id, formToMatrixDoc(form));
    }
    const result = await client.solve(session.id);
    const published = [0.416, 0.2312, 0.3527];
    result.ranking_weights.forEach((w, k) => {
      expect(Math.abs(w - published[k])).toBeLessThan(0.01);
    });
    const text = rankingText(result);
    expect(text).toContain("Ranking weight:");
    expect(text).toContain(`reach consensus is ${result.rounds_to_consensus}`);
    expect(text).toContain("X1 > X3 > X2");
  });

  it("server rejections carry the cell coordinates the portal needs", async () => {
    const doc = formToMatrixDoc(FIGURE6);
    doc.cells[0][1] = [5, 6];
    doc.cells[1][0] = [1, 2]; // breaks reciprocity
    await expect(client.checkConsistency(doc)).rejects.toMatchObject({
      status: 400,
      detail: expect.objectContaining({ i: 1, j: 2 }),
    });
  });
});
