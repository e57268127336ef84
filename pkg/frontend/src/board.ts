/** SVG board: a pure projection of the last service response. The only
 * client-side "rule" is that clicks outside the server's legal set do not
 * fire at all. */

import type { Analysis, GraphDoc, SessionState } from "./api.js";
import { layoutFor, Point } from "./layout.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface BoardModel {
  cops: number[];
  robber: number | null;
  phase: string;
  copTurns: number;
  legal: number[];
}

export class Board {
  private svg: SVGSVGElement;
  private points: Point[] = [];
  private graph: GraphDoc | null = null;
  private lastState: SessionState | null = null;
  private lastAnalysis: Analysis | null = null;
  private overlay = false;

  onVertexClick: ((v: number) => void) | null = null;

  constructor(container: HTMLElement) {
    this.svg = document.createElementNS(SVG_NS, "svg");
    this.svg.setAttribute("viewBox", "0 0 100 100");
    this.svg.classList.add("board");
    container.appendChild(this.svg);
  }

  setGraph(graph: GraphDoc): void {
    this.graph = graph;
    this.points = layoutFor(graph);
  }

  setOverlay(on: boolean): void {
    this.overlay = on;
    this.redraw();
  }

  update(state: SessionState, analysis: Analysis | null): void {
    this.lastState = state;
    this.lastAnalysis = analysis;
    this.redraw();
  }

  model(): BoardModel {
    const s = this.lastState;
    if (!s) return { cops: [], robber: null, phase: "idle", copTurns: 0, legal: [] };
    return {
      cops: [...s.cops].sort((a, b) => a - b),
      robber: s.robber,
      phase: s.phase,
      copTurns: s.cop_turns,
      legal: [...s.legal],
    };
  }

  private el(tag: string, attrs: Record<string, string | number>): SVGElement {
    const node = document.createElementNS(SVG_NS, tag);
    for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, String(v));
    return node;
  }

  private redraw(): void {
    if (!this.graph) return;
    this.svg.replaceChildren();
    const state = this.lastState;
    const analysis = this.overlay ? this.lastAnalysis : null;
    const legal = new Set(state?.legal ?? []);
    const pathIndex = new Map<number, number>();
    const inComponent = new Set<number>();
    if (analysis) {
      analysis.path.forEach((v, i) => pathIndex.set(v, i));
      analysis.component.forEach((v) => inComponent.add(v));
    }

    for (const [u, v] of this.graph.edges) {
      this.svg.appendChild(
        this.el("line", {
          x1: this.points[u].x, y1: this.points[u].y,
          x2: this.points[v].x, y2: this.points[v].y,
          class: "edge",
        }),
      );
    }

    const copCount = new Map<number, number>();
    state?.cops.forEach((c) => copCount.set(c, (copCount.get(c) ?? 0) + 1));

    for (let v = 0; v < this.graph.n; v++) {
      const p = this.points[v];
      const group = this.el("g", { class: "vertex-group", "data-vertex": v });
      const classes = ["vertex"];
      if (legal.has(v)) classes.push("legal");
      if (inComponent.has(v)) classes.push("component");
      if (pathIndex.has(v)) classes.push("path-vertex");
      const circle = this.el("circle", {
        cx: p.x, cy: p.y, r: 4.2, class: classes.join(" "),
      });
      if (legal.has(v)) {
        circle.addEventListener("click", () => this.onVertexClick?.(v));
      }
      group.appendChild(circle);
      const label = this.el("text", { x: p.x, y: p.y + 1.3, class: "vertex-label" });
      label.textContent = String(v);
      group.appendChild(label);
      if (pathIndex.has(v)) {
        const badge = this.el("text", { x: p.x + 5, y: p.y - 4.5, class: "path-badge" });
        badge.textContent = `v${pathIndex.get(v)}`;
        group.appendChild(badge);
      }
      const cops = copCount.get(v) ?? 0;
      if (cops > 0) {
        group.appendChild(this.el("circle", {
          cx: p.x, cy: p.y, r: 5.6, class: "cop-ring",
        }));
        if (cops > 1) {
          const stack = this.el("text", { x: p.x - 6.5, y: p.y - 4.5, class: "stack-badge" });
          stack.textContent = `x${cops}`;
          group.appendChild(stack);
        }
      }
      if (state?.robber === v) {
        group.appendChild(this.el("circle", {
          cx: p.x, cy: p.y, r: 2.1, class: "robber-dot",
        }));
      }
      this.svg.appendChild(group);
    }
  }
}
