/** Vertex layouts. Generators with a natural embedding (cycles, paths,
 * grids, Petersen, complete graphs) get their canonical picture; everything
 * else falls back to a deterministic spring layout (fixed iteration count,
 * no randomness), so the same graph always renders the same way. */

import type { GraphDoc } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

const SIZE = 100; // layouts fill a [0,100]^2 box; the renderer scales

function ring(n: number, radius: number, phase = -Math.PI / 2): Point[] {
  const c = SIZE / 2;
  return Array.from({ length: n }, (_, i) => {
    const a = phase + (2 * Math.PI * i) / n;
    return { x: c + radius * Math.cos(a), y: c + radius * Math.sin(a) };
  });
}

function gridLayout(rows: number, cols: number): Point[] {
  const pts: Point[] = [];
  const pad = 12;
  const w = SIZE - 2 * pad;
  for (let i = 0; i < rows; i++) {
    for (let j = 0; j < cols; j++) {
      pts.push({
        x: pad + (cols === 1 ? w / 2 : (j * w) / (cols - 1)),
        y: pad + (rows === 1 ? w / 2 : (i * w) / (rows - 1)),
      });
    }
  }
  return pts;
}

function petersenLayout(): Point[] {
  return [...ring(5, 42), ...ring(5, 20)];
}

function pathLayout(n: number): Point[] {
  // a gentle arc reads better than a straight line for long paths
  const pts: Point[] = [];
  for (let i = 0; i < n; i++) {
    const frac = n === 1 ? 0.5 : i / (n - 1);
    pts.push({ x: 8 + 84 * frac, y: 50 + 18 * Math.sin(Math.PI * frac) });
  }
  return pts;
}

export function springLayout(graph: GraphDoc, iterations = 300): Point[] {
  const n = graph.n;
  if (n === 1) return [{ x: 50, y: 50 }];
  const pts = ring(n, 38); // deterministic start
  const adj: Set<number>[] = Array.from({ length: n }, () => new Set());
  for (const [u, v] of graph.edges) {
    adj[u].add(v);
    adj[v].add(u);
  }
  const ideal = 55 / Math.sqrt(n);
  for (let step = 0; step < iterations; step++) {
    const cool = 1 - step / iterations;
    const disp = pts.map(() => ({ x: 0, y: 0 }));
    for (let u = 0; u < n; u++) {
      for (let v = u + 1; v < n; v++) {
        let dx = pts[u].x - pts[v].x;
        let dy = pts[u].y - pts[v].y;
        const d = Math.max(0.01, Math.hypot(dx, dy));
        dx /= d;
        dy /= d;
        const repulse = (ideal * ideal) / d;
        disp[u].x += dx * repulse;
        disp[u].y += dy * repulse;
        disp[v].x -= dx * repulse;
        disp[v].y -= dy * repulse;
        if (adj[u].has(v)) {
          const attract = (d * d) / ideal;
          disp[u].x -= dx * attract;
          disp[u].y -= dy * attract;
          disp[v].x += dx * attract;
          disp[v].y += dy * attract;
        }
      }
    }
    for (let u = 0; u < n; u++) {
      const d = Math.max(0.01, Math.hypot(disp[u].x, disp[u].y));
      const limit = Math.min(d, 4 * cool);
      pts[u].x += (disp[u].x / d) * limit;
      pts[u].y += (disp[u].y / d) * limit;
      pts[u].x = Math.min(95, Math.max(5, pts[u].x));
      pts[u].y = Math.min(95, Math.max(5, pts[u].y));
    }
  }
  return pts;
}

export function layoutFor(graph: GraphDoc): Point[] {
  const name = graph.name ?? "";
  if (name === "petersen" && graph.n === 10) return petersenLayout();
  if (name.startsWith("cycle-") || name.startsWith("complete-")) return ring(graph.n, 40);
  if (name.startsWith("path-")) return pathLayout(graph.n);
  const grid = /^grid-(\d+)x(\d+)$/.exec(name);
  if (grid) {
    const rows = parseInt(grid[1], 10);
    const cols = parseInt(grid[2], 10);
    if (rows * cols === graph.n) return gridLayout(rows, cols);
  }
  return springLayout(graph);
}
