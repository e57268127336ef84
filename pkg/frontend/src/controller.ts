/** Session controller: wires the API to the board and a status line.
 * All game state lives on the server; the controller forwards clicks from
 * the legal set and re-renders from responses. */

import { Analysis, ApiError, CreateRequest, GameApi, SessionState } from "./api.js";
import { Board } from "./board.js";

export interface StatusView {
  setBanner(text: string, kind: "info" | "win" | "lose" | "error"): void;
  setTurn(text: string): void;
}

export class GameController {
  private sessionId: string | null = null;
  private analysisWanted: boolean;
  lastState: SessionState | null = null;
  lastAnalysis: Analysis | null = null;

  constructor(
    private api: GameApi,
    private board: Board,
    private status: StatusView,
    opts: { analysis?: boolean } = {},
  ) {
    this.analysisWanted = opts.analysis ?? true;
    board.onVertexClick = (v) => void this.clickMove(v);
  }

  get id(): string | null {
    return this.sessionId;
  }

  async start(req: CreateRequest): Promise<SessionState> {
    const state = await this.api.createSession(req);
    this.sessionId = state.id;
    if (!state.graph) throw new Error("service omitted the graph document");
    this.board.setGraph(state.graph);
    await this.refreshViews(state);
    this.status.setBanner(
      `${state.k} cop${state.k === 1 ? "" : "s"} placed - choose the robber's start`,
      "info",
    );
    return state;
  }

  async clickMove(vertex: number): Promise<SessionState | null> {
    if (!this.sessionId) return null;
    try {
      const state = await this.api.moveRobber(this.sessionId, vertex);
      await this.refreshViews(state);
      this.announce(state);
      return state;
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        // stale phase (double click, lost race): re-sync from the server
        const state = await this.api.getState(this.sessionId);
        await this.refreshViews(state);
        return state;
      }
      if (err instanceof ApiError) {
        this.status.setBanner(`${err.code}: ${err.message}`, "error");
        return null;
      }
      throw err;
    }
  }

  async refresh(): Promise<SessionState | null> {
    if (!this.sessionId) return null;
    const state = await this.api.getState(this.sessionId);
    await this.refreshViews(state);
    return state;
  }

  setOverlay(on: boolean): void {
    this.board.setOverlay(on);
  }

  private async refreshViews(state: SessionState): Promise<void> {
    this.lastState = state;
    if (this.analysisWanted && this.sessionId) {
      try {
        this.lastAnalysis = await this.api.getAnalysis(this.sessionId);
      } catch {
        this.lastAnalysis = null; // analysis disabled server-side
      }
    }
    this.board.update(state, this.lastAnalysis);
    this.status.setTurn(`cop turns: ${state.cop_turns}`);
  }

  private announce(state: SessionState): void {
    if (state.outcome.captured) {
      const bounds = this.lastAnalysis
        ? ` (bounds: |V| = ${this.lastAnalysis.n}, z = ${this.lastAnalysis.z})`
        : "";
      this.status.setBanner(
        `Captured in ${state.cop_turns} cop turn${state.cop_turns === 1 ? "" : "s"}${bounds}`,
        "lose",
      );
    } else if (state.outcome.violation && state.outcome.certificate) {
      this.status.setBanner(
        `You escaped the component! Long hole found: ` +
          `[${state.outcome.certificate.cycle.join(", ")}]`,
        "win",
      );
    } else if (state.phase === "robber_to_move") {
      this.status.setBanner("Your move - click a highlighted vertex", "info");
    }
  }
}
