/** DOM grid of Min/Max subscript inputs with inline rule errors. */

import type { CellError, FormMatrix, MatrixDoc } from "./types.js";
import { neutralForm, parseSubscript, validateForm } from "./validation.js";

export class MatrixForm {
  private container: HTMLElement;
  private tau: number;
  private size = 3;

  constructor(container: HTMLElement, tau = 4) {
    this.container = container;
    this.tau = tau;
  }

  /** (Re)build the grid for n alternatives, all cells at indifference. */
  render(n: number): void {
    this.size = n;
    this.container.textContent = "";
    const table = document.createElement("table");
    table.className = "matrix-grid";
    for (let i = 0; i < n; i++) {
      const row = document.createElement("tr");
      for (let j = 0; j < n; j++) {
        const cell = document.createElement("td");
        cell.dataset.i = String(i + 1);
        cell.dataset.j = String(j + 1);
        const label = document.createElement("div");
        label.className = "cell-label";
        label.textContent = `${i + 1},${j + 1}`;
        cell.appendChild(label);
        for (const field of ["min", "max"] as const) {
          const input = document.createElement("input");
          input.type = "text";
          input.inputMode = "numeric";
          input.value = String(this.tau);
          input.dataset.field = field;
          input.setAttribute(
            "aria-label",
            `${i + 1},${j + 1}${field === "min" ? "Min" : "Max"}`
          );
          if (i === j) input.disabled = true; // diagonal locked to s_tau
          cell.appendChild(input);
        }
        const note = document.createElement("div");
        note.className = "cell-error";
        cell.appendChild(note);
        row.appendChild(cell);
      }
      table.appendChild(row);
    }
    this.container.appendChild(table);
  }

  /** Reset every editable input box to indifference and clear errors. */
  clear(): void {
    this.render(this.size);
  }

  read(): FormMatrix {
    const form = neutralForm(this.size, this.tau);
    for (const td of this.cells()) {
      const i = Number(td.dataset.i) - 1;
      const j = Number(td.dataset.j) - 1;
      const inputs = td.querySelectorAll<HTMLInputElement>("input");
      form.grid[i][j] = {
        min: parseSubscript(inputs[0].value),
        max: parseSubscript(inputs[1].value),
      };
    }
    return form;
  }

  /** Validate and paint inline errors; returns the error list. */
  validate(): CellError[] {
    const errors = validateForm(this.read());
    this.showErrors(errors);
    return errors;
  }

  showErrors(errors: CellError[]): void {
    for (const td of this.cells()) {
      const note = td.querySelector<HTMLElement>(".cell-error")!;
      note.textContent = "";
      td.classList.remove("invalid");
    }
    for (const err of errors) {
      const td = this.cellAt(err.i, err.j);
      if (!td) continue;
      td.classList.add("invalid");
      const note = td.querySelector<HTMLElement>(".cell-error")!;
      if (note.textContent === "") note.textContent = err.message;
    }
  }

  /** Fill the grid from a matrix document (min/max of each cell). */
  setFromDoc(doc: MatrixDoc): void {
    this.render(doc.n);
    for (const td of this.cells()) {
      const i = Number(td.dataset.i) - 1;
      const j = Number(td.dataset.j) - 1;
      const run = doc.cells[i][j];
      const inputs = td.querySelectorAll<HTMLInputElement>("input");
      inputs[0].value = String(Math.min(...run));
      inputs[1].value = String(Math.max(...run));
    }
  }

  private cells(): HTMLTableCellElement[] {
    return Array.from(this.container.querySelectorAll("td"));
  }

  private cellAt(i: number, j: number): HTMLTableCellElement | null {
    return this.container.querySelector(`td[data-i="${i}"][data-j="${j}"]`);
  }
}
