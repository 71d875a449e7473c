/**
 * Typed client for the proof-session HTTP API.
 *
 * The UI performs no proof logic: every displayed fact comes verbatim
 * from the last SessionView returned by the server.  One request is in
 * flight per session at a time; callers should disable inputs while
 * `busy` is true.
 */

export interface RowFlags {
  currentGoal: boolean;
  currentResource: boolean;
  outOfScope: boolean;
}

export interface ProofRow {
  creation: number;
  depth: number;
  formulaUnicode: string;
  formulaPrefix: string;
  justification: string;
  status: "Goal" | "Justified";
  flags: RowFlags;
  boxOpens: number;
  boxCloses: number;
}

export interface ApplicableRule {
  rule: string;
  needs: string[];
  side?: "left" | "right";
  axiomName?: string;
}

export interface SessionView {
  sessionId: string;
  system: string;
  palette: string[];
  complete: boolean;
  rows: ProofRow[];
  applicable: ApplicableRule[];
}

export interface FrameRow {
  creation: number;
  depth: number;
  formulaUnicode: string;
  justification: string;
  boxOpens: number;
  boxCloses: number;
}

export interface ApiError {
  code: string;
  message: string;
  at?: number;
}

export interface ApplyArgs {
  side?: string;
  witness?: string;
  refLine?: number;
  axiomName?: string;
}

export class SessionApiError extends Error {
  constructor(readonly error: ApiError, readonly status: number) {
    super(`${error.code}: ${error.message}`);
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class SessionApi {
  busy = false;

  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    if (this.busy) {
      throw new SessionApiError(
        { code: "Busy", message: "a request is already in flight" },
        0,
      );
    }
    this.busy = true;
    try {
      const init: RequestInit = { method, headers: { "Content-Type": "application/json" } };
      if (body !== undefined) {
        init.body = JSON.stringify(body);
      }
      const response = await this.fetchImpl(this.base + path, init);
      if (!response.ok) {
        throw new SessionApiError((await response.json()) as ApiError, response.status);
      }
      return (await response.json()) as T;
    } finally {
      this.busy = false;
    }
  }

  createSession(premises: string[], conclusion: string, system: string): Promise<SessionView> {
    return this.request("POST", "/sessions", { premises, conclusion, system });
  }

  selectGoal(id: string, creation: number): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/select`, { goal: creation });
  }

  selectResource(id: string, creation: number): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/select`, { resource: creation });
  }

  apply(id: string, rule: string, args: ApplyArgs = {}): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/apply`, { rule, args });
  }

  undo(id: string): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/undo`);
  }

  redo(id: string): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/redo`);
  }

  magic(id: string): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/magic`);
  }

  setPalette(id: string, rule: string, on: boolean): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/palette`, { rule, on });
  }

  frames(id: string): Promise<{ frames: FrameRow[][] }> {
    return this.request("GET", `/sessions/${id}/export?format=frames`);
  }

  /** Raw export body for downloads (latex/text/ndp). */
  async exportBody(id: string, format: string): Promise<string> {
    const response = await this.fetchImpl(`${this.base}/sessions/${id}/export?format=${format}`);
    if (!response.ok) {
      throw new SessionApiError((await response.json()) as ApiError, response.status);
    }
    return response.text();
  }
}
