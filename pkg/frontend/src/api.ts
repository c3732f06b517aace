/** Thin fetch client for the decision service; all numerics happen server-side. */

import type {
  ConsistencyParams,
  ConsistencyReport,
  MatrixDoc,
  SessionInfo,
  SolveResult,
  SubmitAck,
} from "./types.js";

export class ApiError extends Error {
  status: number;
  detail: unknown;

  constructor(status: number, detail: unknown) {
    super(typeof detail === "string" ? detail : JSON.stringify(detail));
    this.status = status;
    this.detail = detail;
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(base + path, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    throw new ApiError(response.status, (body as { detail?: unknown }).detail ?? body);
  }
  return body as T;
}

export class PortalClient {
  constructor(readonly base: string = "") {}

  checkConsistency(matrix: MatrixDoc, params: ConsistencyParams = {}): Promise<ConsistencyReport> {
    return request(this.base, "/api/consistency", {
      method: "POST",
      body: JSON.stringify({ ...matrix, ...params }),
    });
  }

  createSession(n: number, tau: number, gamma: number, params: ConsistencyParams = {}): Promise<SessionInfo> {
    return request(this.base, "/api/sessions", {
      method: "POST",
      body: JSON.stringify({ n, tau, gamma, ...params }),
    });
  }

  submitMatrix(sessionId: string, matrix: MatrixDoc): Promise<SubmitAck> {
    return request(this.base, `/api/sessions/${sessionId}/hflpr`, {
      method: "POST",
      body: JSON.stringify(matrix),
    });
  }

  solve(sessionId: string): Promise<SolveResult> {
    return request(this.base, `/api/sessions/${sessionId}/solve`, { method: "POST" });
  }

  criticalValue(n: number, offset = 0): Promise<{ value: number }> {
    return request(this.base, `/api/critical-values?n=${n}&offset=${offset}`);
  }
}
