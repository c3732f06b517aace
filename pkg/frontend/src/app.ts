/** Portal wiring: algorithm selection, entry grid, roster, result panels. */

import { ApiError, PortalClient } from "./api.js";
import { MatrixForm } from "./matrix-form.js";
import { consistencyResultText, matrixText, rankingText } from "./render.js";
import type { CellError, MatrixDoc } from "./types.js";
import { formToMatrixDoc } from "./validation.js";

const GAMMA_CHOICES = [0.8, 0.85, 0.9, 0.95];

interface Elements {
  algorithm: HTMLSelectElement;
  alternatives: HTMLSelectElement;
  gamma: HTMLSelectElement;
  gammaRow: HTMLElement;
  alpha: HTMLInputElement;
  beta: HTMLInputElement;
  grid: HTMLElement;
  submit: HTMLButtonElement;
  proceed: HTMLButtonElement;
  clear: HTMLButtonElement;
  remove: HTMLButtonElement;
  hint: HTMLElement;
  roster: HTMLElement;
  inputEcho: HTMLElement;
  result: HTMLElement;
  download: HTMLAnchorElement;
}

export class PortalApp {
  private form: MatrixForm;
  private client: PortalClient;
  private el: Elements;
  private roster: MatrixDoc[] = [];
  private summaries: string[] = [];
  private solving = false;
  private lastResult: unknown = null;

  constructor(root: Document, client: PortalClient) {
    this.client = client;
    this.el = {
      algorithm: root.querySelector("#algorithm")!,
      alternatives: root.querySelector("#alternatives")!,
      gamma: root.querySelector("#gamma")!,
      gammaRow: root.querySelector("#gamma-row")!,
      alpha: root.querySelector("#alpha")!,
      beta: root.querySelector("#beta")!,
      grid: root.querySelector("#grid")!,
      submit: root.querySelector("#submit")!,
      proceed: root.querySelector("#proceed")!,
      clear: root.querySelector("#clear")!,
      remove: root.querySelector("#delete")!,
      hint: root.querySelector("#hint")!,
      roster: root.querySelector("#roster")!,
      inputEcho: root.querySelector("#input-echo")!,
      result: root.querySelector("#result")!,
      download: root.querySelector("#download")!,
    };
    this.form = new MatrixForm(this.el.grid);

    for (const g of GAMMA_CHOICES) {
      const option = root.createElement("option");
      option.value = String(g);
      option.textContent = g.toFixed(2);
      if (g === 0.9) option.selected = true;
      this.el.gamma.appendChild(option);
    }

    this.el.algorithm.addEventListener("change", () => this.onModeChange());
    this.el.alternatives.addEventListener("change", () => this.onSizeChange());
    this.el.grid.addEventListener("input", () => this.refreshControls());
    this.el.submit.addEventListener("click", () => void this.onSubmit());
    this.el.proceed.addEventListener("click", () => void this.onProceed());
    this.el.clear.addEventListener("click", () => this.onClear());
    this.el.remove.addEventListener("click", () => this.onDelete());
    this.el.download.addEventListener("click", (e) => this.onDownload(e));

    this.form.render(this.n);
    this.onModeChange();
  }

  get n(): number {
    return Number(this.el.alternatives.value);
  }

  get isGdm(): boolean {
    return this.el.algorithm.value === "gdm";
  }

  private params() {
    const alpha = Number(this.el.alpha.value);
    const beta = Number(this.el.beta.value);
    const out: { alpha?: number; beta?: number } = {};
    if (Number.isFinite(alpha) && this.el.alpha.value.trim() !== "") out.alpha = alpha;
    if (Number.isFinite(beta) && this.el.beta.value.trim() !== "") out.beta = beta;
    return out;
  }

  private onModeChange(): void {
    this.el.gammaRow.hidden = !this.isGdm;
    this.el.proceed.hidden = !this.isGdm;
    this.el.remove.hidden = !this.isGdm;
    this.roster = [];
    this.summaries = [];
    this.renderRoster();
    this.refreshControls();
  }

  private onSizeChange(): void {
    this.form.render(this.n);
    this.roster = [];
    this.summaries = [];
    this.renderRoster();
    this.refreshControls();
  }

  private onClear(): void {
    this.form.clear();
    this.refreshControls();
  }

  private onDelete(): void {
    this.roster.pop();
    this.summaries.pop();
    this.renderRoster();
    this.refreshControls();
  }

  /** Submit is live only when the grid is valid (and, for GDM, 2+ members). */
  refreshControls(): void {
    const errors = this.form.validate();
    const valid = errors.length === 0;
    if (this.isGdm) {
      this.el.proceed.disabled = !valid || this.roster.length >= 5 || this.solving;
      const enough = this.roster.length >= 2;
      this.el.submit.disabled = !enough || this.solving;
      this.el.hint.textContent = enough
        ? ""
        : "add at least 2 decision makers with Proceed before submitting";
    } else {
      this.el.submit.disabled = !valid || this.solving;
      this.el.hint.textContent = valid ? "" : "fix the highlighted cells";
    }
  }

  private async onProceed(): Promise<void> {
    const errors = this.form.validate();
    if (errors.length > 0) return;
    const doc = formToMatrixDoc(this.form.read());
    this.roster.push(doc);
    // summary mirrors the service digest: n, max run length, min/max per cell
    const maxLen = Math.max(
      ...doc.cells.flat().map((run) => run.length)
    );
    const digits = [String(doc.n), String(maxLen)];
    for (const row of doc.cells) {
      for (const run of row) {
        digits.push(String(Math.min(...run)), String(Math.max(...run)));
      }
    }
    this.summaries.push(digits.join(""));
    this.el.inputEcho.textContent = matrixText(doc);
    this.form.clear();
    this.renderRoster();
    this.refreshControls();
  }

  private renderRoster(): void {
    this.el.roster.textContent = "";
    this.summaries.forEach((summary, k) => {
      const panel = this.el.roster.ownerDocument.createElement("div");
      panel.className = "person";
      const title = this.el.roster.ownerDocument.createElement("strong");
      title.textContent = `Person ${k + 1} information`;
      const body = this.el.roster.ownerDocument.createElement("code");
      body.textContent = summary;
      panel.append(title, body);
      this.el.roster.appendChild(panel);
    });
  }

  private async onSubmit(): Promise<void> {
    if (this.solving) return;
    this.solving = true;
    this.refreshControls();
    try {
      if (this.isGdm) {
        await this.solveGroup();
      } else {
        await this.solveConsistency();
      }
    } catch (err) {
      this.showError(err);
    } finally {
      this.solving = false;
      this.refreshControls();
    }
  }

  private async solveConsistency(): Promise<void> {
    const errors = this.form.validate();
    if (errors.length > 0) return;
    const doc = formToMatrixDoc(this.form.read());
    const report = await this.client.checkConsistency(doc, this.params());
    this.lastResult = report;
    this.el.inputEcho.textContent = matrixText(report.input);
    this.el.result.textContent = consistencyResultText(report);
  }

  private async solveGroup(): Promise<void> {
    const gamma = Number(this.el.gamma.value);
    const session = await this.client.createSession(this.n, 4, gamma, this.params());
    for (const doc of this.roster) {
      await this.client.submitMatrix(session.id, doc);
    }
    const result = await this.client.solve(session.id);
    this.lastResult = result;
    this.el.result.textContent = rankingText(result);
  }

  private showError(err: unknown): void {
    if (err instanceof ApiError && typeof err.detail === "object" && err.detail) {
      const detail = err.detail as { message?: string; i?: number; j?: number };
      if (detail.i && detail.j) {
        const cellErr: CellError = {
          i: detail.i,
          j: detail.j,
          field: "both",
          message: detail.message ?? "rejected by the service",
        };
        this.form.showErrors([cellErr]);
      }
      this.el.result.textContent = `error: ${detail.message ?? err.message}`;
      return;
    }
    this.el.result.textContent = `error: ${String(err)}`;
  }

  private onDownload(event: Event): void {
    event.preventDefault();
    if (this.lastResult == null) return;
    const blob = new Blob([JSON.stringify(this.lastResult, null, 2)], {
      type: "application/json",
    });
    const url = URL.createObjectURL(blob);
    const a = this.el.download.ownerDocument.createElement("a");
    a.href = url;
    a.download = "result.json";
    a.click();
    URL.revokeObjectURL(url);
  }
}

/** Entry point for the browser build. */
export function boot(): void {
  const base = (window as { HFLGDM_API?: string }).HFLGDM_API ?? "";
  new PortalApp(document, new PortalClient(base));
}

if (typeof document !== "undefined" && document.getElementById("grid")) {
  boot();
}
