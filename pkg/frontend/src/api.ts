/** Typed client for the game service. The server is authoritative: the UI
 * never decides legality, it only submits vertices from the `legal` set. */

export interface GraphDoc {
  name?: string;
  n: number;
  edges: [number, number][];
}

export interface Outcome {
  captured: boolean;
  violation: boolean;
  certificate: { type: string; cycle: number[] } | null;
}

export interface SessionState {
  id: string;
  t: number;
  k: number;
  phase: "robber_to_place" | "robber_to_move" | "captured" | "aborted";
  cops: number[];
  robber: number | null;
  cop_turns: number;
  legal: number[];
  outcome: Outcome;
  graph?: GraphDoc;
  cop_reply?: number[] | null;
  confinement?: string | null;
}

export interface Analysis {
  t: number;
  v0: number;
  path: number[];
  component: number[];
  tip_stack: number;
  cop_lo: number;
  phase: number;
  confinement: string | null;
  z: number;
  n: number;
}

export interface CreateRequest {
  graph?: GraphDoc;
  generator?: { kind: string; params?: Record<string, unknown>; seed?: number };
  t: number;
  v0_rule?: string;
  analysis?: boolean;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
    public legal?: number[],
  ) {
    super(message);
  }
}

async function parseError(res: Response): Promise<never> {
  let code = "unknown";
  let message = res.statusText;
  let legal: number[] | undefined;
  try {
    const body = await res.json();
    code = body.error ?? code;
    message = body.message ?? JSON.stringify(body);
    legal = body.legal;
  } catch {
    /* non-JSON error body */
  }
  throw new ApiError(res.status, code, message, legal);
}

export class GameApi {
  constructor(private base: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await fetch(this.base + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    if (!res.ok) await parseError(res);
    return (await res.json()) as T;
  }

  createSession(req: CreateRequest): Promise<SessionState> {
    return this.request("/sessions", { method: "POST", body: JSON.stringify(req) });
  }

  getState(id: string): Promise<SessionState> {
    return this.request(`/sessions/${id}`);
  }

  moveRobber(id: string, vertex: number): Promise<SessionState> {
    return this.request(`/sessions/${id}/robber`, {
      method: "POST",
      body: JSON.stringify({ vertex }),
    });
  }

  getAnalysis(id: string): Promise<Analysis> {
    return this.request(`/sessions/${id}/analysis`);
  }

  deleteSession(id: string): Promise<unknown> {
    return this.request(`/sessions/${id}`, { method: "DELETE" });
  }
}
