// Network canvas view: node positions, mass-proportional radii, degree colors.

import type { GraphMessage } from './protocol.js';
import { QUARTILE_COLORS } from './charts.js';
import { nodeRadius, quartileOfNode } from './viewmodel.js';

/** Simple spring embedding for layout=force; positions land in [-1, 1]^2. */
export function forceLayout(graph: GraphMessage, iterations = 120): [number, number][] {
  const n = graph.node_count;
  const pos: [number, number][] = [];
  // deterministic pseudo-random start (golden-angle spiral)
  for (let i = 0; i < n; i++) {
    const r = 0.05 + 0.9 * Math.sqrt((i + 0.5) / n);
    const a = i * 2.399963229728653;
    pos.push([r * Math.cos(a), r * Math.sin(a)]);
  }
  const k = 1.6 / Math.sqrt(n);
  for (let it = 0; it < iterations; it++) {
    const disp: [number, number][] = pos.map(() => [0, 0]);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = pos[i][0] - pos[j][0];
        let dy = pos[i][1] - pos[j][1];
        let d2 = dx * dx + dy * dy;
        if (d2 < 1e-9) {
          dx = 1e-3;
          dy = 1e-3;
          d2 = 2e-6;
        }
        const rep = (k * k) / d2;
        disp[i][0] += dx * rep;
        disp[i][1] += dy * rep;
        disp[j][0] -= dx * rep;
        disp[j][1] -= dy * rep;
      }
    }
    for (const [u, v] of graph.edges) {
      const dx = pos[u][0] - pos[v][0];
      const dy = pos[u][1] - pos[v][1];
      const d = Math.sqrt(dx * dx + dy * dy) + 1e-9;
      const att = d / k * 0.01;
      disp[u][0] -= dx * att;
      disp[u][1] -= dy * att;
      disp[v][0] += dx * att;
      disp[v][1] += dy * att;
    }
    const temp = 0.1 * (1 - it / iterations) + 0.005;
    for (let i = 0; i < n; i++) {
      const d = Math.sqrt(disp[i][0] ** 2 + disp[i][1] ** 2) + 1e-9;
      const scale = Math.min(d, temp) / d;
      pos[i][0] = Math.max(-1, Math.min(1, pos[i][0] + disp[i][0] * scale));
      pos[i][1] = Math.max(-1, Math.min(1, pos[i][1] + disp[i][1] * scale));
    }
  }
  return pos;
}

function degreeColor(graph: GraphMessage, node: number): string {
  const maxDeg = Math.max(...graph.degrees, 1);
  const t = graph.degrees[node] / maxDeg;
  const shade = Math.round(70 + 160 * t);
  return `rgb(${Math.round(40 + 30 * t)}, ${shade}, ${Math.round(120 + 100 * t)})`;
}

export function drawNetwork(
  ctx: CanvasRenderingContext2D,
  graph: GraphMessage,
  positions: [number, number][],
  nodeSizes: number[] | null,
): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  const margin = 24;
  const scale = Math.min(width, height) / 2 - margin;
  const cx = width / 2;
  const cy = height / 2;
  const sx = (p: [number, number]) => cx + p[0] * scale;
  const sy = (p: [number, number]) => cy + p[1] * scale;

  ctx.strokeStyle = 'rgba(150, 160, 180, 0.25)';
  ctx.lineWidth = 0.5;
  ctx.beginPath();
  for (const [u, v] of graph.edges) {
    ctx.moveTo(sx(positions[u]), sy(positions[u]));
    ctx.lineTo(sx(positions[v]), sy(positions[v]));
  }
  ctx.stroke();

  const maxMass = nodeSizes ? Math.max(...nodeSizes, 1e-12) : 0;
  for (let i = 0; i < graph.node_count; i++) {
    const r = nodeSizes ? nodeRadius(nodeSizes[i], maxMass) : 3;
    ctx.fillStyle =
      graph.coloring === 'multibin'
        ? QUARTILE_COLORS[quartileOfNode(graph, i)]
        : degreeColor(graph, i);
    ctx.beginPath();
    ctx.arc(sx(positions[i]), sy(positions[i]), r, 0, 2 * Math.PI);
    ctx.fill();
  }
}
