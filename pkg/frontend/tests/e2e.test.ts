/** End-to-end: a scripted browser session against the real Python service.
 *
 * Spawns `python3 -m copsrobbers.cli serve` on a scratch port, creates a
 * Petersen t=7 session through the UI controller, plays 5 legal robber
 * moves, and checks after every turn that the rendered board equals the
 * service's state. The game must end in a capture banner or still be live
 * with the strategy path grown by exactly one vertex per cop turn.
 */

import { spawn, ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { GameApi } from "../src/api.js";
import { Board } from "../src/board.js";
import { GameController, StatusView } from "../src/controller.js";

const PORT = 8890 + (process.pid % 100);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForService(timeoutMs = 60_000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`${BASE}/healthz`);
      if (res.ok) return;
    } catch {
      /* not up yet */
    }
    await new Promise((r) => setTimeout(r, 250));
  }
  throw new Error("game service did not come up");
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "copsrobbers.cli", "serve", "--port", String(PORT)], {
    stdio: "ignore",
  });
  await waitForService();
});

afterAll(() => {
  server?.kill();
});

describe("petersen t=7 session", () => {
  it("board mirrors the service for five legal moves", async () => {
    document.body.innerHTML = '<div id="holder"></div>';
    const banners: string[] = [];
    const status: StatusView = {
      setBanner: (text) => banners.push(text),
      setTurn: () => undefined,
    };
    const api = new GameApi(BASE);
    const board = new Board(document.getElementById("holder") as HTMLElement);
    const controller = new GameController(api, board, status);

    const created = await controller.start({ generator: { kind: "petersen" }, t: 7 });
    expect(created.k).toBe(4);
    expect(created.cops).toEqual([0, 0, 0, 0]);
    const graph = created.graph!;
    const adjacent: Set<number>[] = Array.from({ length: graph.n }, () => new Set());
    for (const [u, v] of graph.edges) {
      adjacent[u].add(v);
      adjacent[v].add(u);
    }

    const pickMove = (): number => {
      const state = controller.lastState!;
      const analysis = controller.lastAnalysis;
      const legal = state.legal;
      expect(legal.length).toBeGreaterThan(0);
      if (analysis) {
        // prefer a component vertex that no cop can reach next turn: that
        // move always survives and forces a path extension
        const safe = legal.filter(
          (v) =>
            analysis.component.includes(v) &&
            !state.cops.some((c) => c === v || adjacent[c].has(v)),
        );
        if (safe.length > 0) return safe[0];
      }
      return state.robber !== null && legal.includes(state.robber)
        ? state.robber
        : legal[0];
    };

    let nonCapturingTurns = 0;
    for (let move = 0; move < 5; move++) {
      const before = controller.lastState!;
      if (before.phase !== "robber_to_place" && before.phase !== "robber_to_move") break;
      const reply = await controller.clickMove(pickMove());
      expect(reply).not.toBeNull();
      if (reply!.cop_reply) nonCapturingTurns = reply!.cop_turns - (reply!.outcome.captured ? 1 : 0);

      // the rendered board must equal the service's own account of the state
      const fresh = await api.getState(reply!.id);
      const model = board.model();
      expect(model.cops).toEqual([...fresh.cops].sort((a, b) => a - b));
      expect(model.robber).toBe(fresh.robber);
      expect(model.phase).toBe(fresh.phase);
      expect(model.copTurns).toBe(fresh.cop_turns);
      expect(model.legal).toEqual(fresh.legal);
      if (fresh.phase !== "robber_to_move") break;
    }

    const final = controller.lastState!;
    if (final.outcome.captured) {
      expect(banners.some((b) => b.startsWith("Captured in"))).toBe(true);
    } else {
      // live game: the path has one vertex per completed (non-capturing) cop
      // turn beyond the start vertex
      const analysis = await api.getAnalysis(final.id);
      expect(final.phase).toBe("robber_to_move");
      expect(analysis.path.length).toBe(1 + nonCapturingTurns);
      expect(analysis.path.length).toBe(1 + final.cop_turns);
    }
    await api.deleteSession(final.id);
  });

  it("server guards mirror into the UI error banner", async () => {
    document.body.innerHTML = '<div id="holder"></div>';
    const banners: { text: string; kind: string }[] = [];
    const status: StatusView = {
      setBanner: (text, kind) => banners.push({ text, kind }),
      setTurn: () => undefined,
    };
    const api = new GameApi(BASE);
    const board = new Board(document.getElementById("holder") as HTMLElement);
    const controller = new GameController(api, board, status);
    await expect(
      controller.start({ graph: { n: 2, edges: [] }, t: 4 }),
    ).rejects.toThrow(/connected/);
  });
});
