import { describe, expect, it } from "vitest";

import type { FormMatrix } from "../src/types.js";
import {
  formToMatrixDoc,
  neutralForm,
  parseSubscript,
  validateForm,
} from "../src/validation.js";

function figure6Form(): FormMatrix {
  // Min/Max pairs of the economic-efficiency example matrix
  const grid = [
    [[4, 4], [5, 6], [4, 6]],
    [[2, 3], [4, 4], [2, 4]],
    [[2, 4], [4, 6], [4, 4]],
  ];
  return {
    tau: 4,
    n: 3,
    grid: grid.map((row) => row.map(([min, max]) => ({ min, max }))),
  };
}

describe("parseSubscript", () => {
  it("accepts plain integers", () => {
    expect(parseSubscript(" 5 ")).toBe(5);
    expect(parseSubscript("0")).toBe(0);
  });

  it("rejects non-numeric input", () => {
    expect(Number.isNaN(parseSubscript("abc"))).toBe(true);
    expect(Number.isNaN(parseSubscript(""))).toBe(true);
    expect(Number.isNaN(parseSubscript("1e3"))).toBe(true);
  });
});

describe("validateForm", () => {
  it("accepts the portal example matrix", () => {
    expect(validateForm(figure6Form())).toEqual([]);
  });

  it("accepts the neutral form", () => {
    expect(validateForm(neutralForm(4))).toEqual([]);
  });

  it("flags min greater than max at the cell", () => {
    const form = figure6Form();
    form.grid[0][1] = { min: 5, max: 3 };
    const errors = validateForm(form);
    expect(errors.some((e) => e.i === 1 && e.j === 2)).toBe(true);
  });

  it("flags reciprocity violations across the diagonal", () => {
    const form = figure6Form();
    form.grid[1][0] = { min: 2, max: 2 }; // Max(1,2)+Min(2,1) = 8 still, but Min(1,2)+Max(2,1)=7
    const errors = validateForm(form);
    expect(errors.length).toBeGreaterThan(0);
  });

  it("flags out-of-range subscripts", () => {
    const form = figure6Form();
    form.grid[0][1] = { min: 5, max: 9 };
    const errors = validateForm(form);
    expect(errors.some((e) => e.message.includes("between 0 and 8"))).toBe(true);
  });

  it("flags non-numeric entries", () => {
    const form = figure6Form();
    form.grid[0][1] = { min: NaN, max: 6 };
    expect(validateForm(form).some((e) => e.field === "min")).toBe(true);
  });

  it("locks the diagonal to indifference", () => {
    const form = figure6Form();
    form.grid[1][1] = { min: 5, max: 5 };
    const errors = validateForm(form);
    expect(errors.some((e) => e.i === 2 && e.j === 2)).toBe(true);
  });
});

describe("formToMatrixDoc", () => {
  it("expands min/max pairs to consecutive runs", () => {
    const doc = formToMatrixDoc(figure6Form());
    expect(doc.cells[0][1]).toEqual([5, 6]);
    expect(doc.cells[0][2]).toEqual([4, 5, 6]);
    expect(doc.cells[1][1]).toEqual([4]);
    expect(doc.cells[2][0]).toEqual([2, 3, 4]);
  });
});
