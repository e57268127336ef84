/** Page wiring: the start form, the board, and the analysis toggle. */

import { GameApi, GraphDoc } from "./api.js";
import { Board } from "./board.js";
import { GameController, StatusView } from "./controller.js";

function must<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el as T;
}

function generatorParams(kind: string, size: number): Record<string, unknown> {
  switch (kind) {
    case "cycle":
    case "path":
    case "complete":
      return { k: size };
    case "grid":
      return { r: Math.max(2, Math.floor(Math.sqrt(size))), c: Math.max(2, Math.ceil(size / Math.max(2, Math.floor(Math.sqrt(size))))) };
    case "petersen":
      return {};
    case "random_chordal":
      return { n: size, max_clique: 4 };
    case "random_connected":
      return { n: size, p: 0.35 };
    default:
      return {};
  }
}

export function boot(): void {
  const status: StatusView = {
    setBanner(text, kind) {
      const banner = must<HTMLDivElement>("banner");
      banner.textContent = text;
      banner.className = `banner ${kind}`;
    },
    setTurn(text) {
      must<HTMLSpanElement>("turn-counter").textContent = text;
    },
  };
  const api = new GameApi("");
  const board = new Board(must<HTMLDivElement>("board-holder"));
  const controller = new GameController(api, board, status);

  const overlayBox = must<HTMLInputElement>("overlay");
  overlayBox.addEventListener("change", () => controller.setOverlay(overlayBox.checked));

  must<HTMLButtonElement>("start").addEventListener("click", () => {
    const kind = must<HTMLSelectElement>("generator").value;
    const size = parseInt(must<HTMLInputElement>("size").value, 10) || 10;
    const t = parseInt(must<HTMLInputElement>("threshold").value, 10);
    const seed = parseInt(must<HTMLInputElement>("seed").value, 10) || 0;
    const uploaded = must<HTMLTextAreaElement>("graph-json").value.trim();
    if (!Number.isFinite(t) || t < 4) {
      status.setBanner("t must be an integer >= 4", "error"); // mirror the server guard
      return;
    }
    const req = uploaded
      ? { graph: JSON.parse(uploaded) as GraphDoc, t }
      : { generator: { kind, params: generatorParams(kind, size), seed }, t };
    void controller
      .start(req)
      .catch((err) => status.setBanner(String(err.message ?? err), "error"));
  });
}

if (typeof document !== "undefined" && document.getElementById("board-holder")) {
  boot();
}
