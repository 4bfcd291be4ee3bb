// Canvas 2D chart drawing; stateless functions over view-model data.

import type { ScatterPoint } from './viewmodel.js';
import { fitScatterLine } from './viewmodel.js';

export const QUARTILE_COLORS = ['#4e79a7', '#59a14f', '#edc949', '#e15759'];

interface Frame {
  x0: number;
  y0: number;
  w: number;
  h: number;
}

function clear(ctx: CanvasRenderingContext2D): Frame {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  return { x0: 36, y0: 8, w: width - 46, h: height - 30 };
}

function axes(ctx: CanvasRenderingContext2D, f: Frame, xLabel: string, yLabel: string) {
  ctx.strokeStyle = '#99a';
  ctx.lineWidth = 1;
  ctx.strokeRect(f.x0, f.y0, f.w, f.h);
  ctx.fillStyle = '#ccd';
  ctx.font = '10px sans-serif';
  ctx.fillText(xLabel, f.x0 + f.w / 2 - 20, f.y0 + f.h + 16);
  ctx.save();
  ctx.translate(10, f.y0 + f.h / 2 + 20);
  ctx.rotate(-Math.PI / 2);
  ctx.fillText(yLabel, 0, 0);
  ctx.restore();
}

export function drawDegreeHistogram(
  ctx: CanvasRenderingContext2D,
  histogram: Map<number, number>,
): void {
  const f = clear(ctx);
  axes(ctx, f, 'degree', 'nodes');
  if (histogram.size === 0) return;
  const degrees = [...histogram.keys()];
  const maxDeg = Math.max(...degrees);
  const maxCount = Math.max(...histogram.values());
  const barW = Math.max(1, f.w / (maxDeg + 2) - 1);
  ctx.fillStyle = '#76b7b2';
  for (const [d, count] of histogram) {
    const h = (count / maxCount) * (f.h - 4);
    ctx.fillRect(f.x0 + (d / (maxDeg + 1)) * f.w, f.y0 + f.h - h, barW, h);
  }
}

export function drawQuartileSeries(
  ctx: CanvasRenderingContext2D,
  ticks: number[],
  series: number[][],
  labels: string[],
): void {
  const f = clear(ctx);
  axes(ctx, f, 'tick', 'avg walkers');
  const maxY = Math.max(1e-12, ...series.flat());
  const maxX = Math.max(1, ticks[ticks.length - 1] ?? 1);
  series.forEach((ys, q) => {
    ctx.strokeStyle = QUARTILE_COLORS[q];
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    ys.forEach((y, i) => {
      const px = f.x0 + (ticks[i] / maxX) * f.w;
      const py = f.y0 + f.h - (y / maxY) * (f.h - 4);
      i === 0 ? ctx.moveTo(px, py) : ctx.lineTo(px, py);
    });
    ctx.stroke();
  });
  ctx.font = '10px sans-serif';
  labels.forEach((label, q) => {
    ctx.fillStyle = QUARTILE_COLORS[q];
    ctx.fillText(label, f.x0 + 6, f.y0 + 12 + q * 12);
  });
}

export function drawScatter(
  ctx: CanvasRenderingContext2D,
  points: ScatterPoint[],
  displayedR2: number,
): void {
  const f = clear(ctx);
  axes(ctx, f, 'degree', 'avg walkers');
  if (points.length === 0) return;
  const maxX = Math.max(...points.map((p) => p.degree), 1);
  const maxY = Math.max(...points.map((p) => p.avgWalkers), 1e-12);
  const px = (d: number) => f.x0 + (d / (maxX + 1)) * f.w;
  const py = (v: number) => f.y0 + f.h - (v / maxY) * (f.h - 8);

  const line = fitScatterLine(points);
  if (line) {
    ctx.strokeStyle = '#e15759';
    ctx.lineWidth = 1;
    ctx.beginPath();
    ctx.moveTo(px(0), py(line.intercept));
    ctx.lineTo(px(maxX), py(line.intercept + line.slope * maxX));
    ctx.stroke();
  }
  ctx.fillStyle = '#4e79a7';
  for (const p of points) {
    ctx.beginPath();
    ctx.arc(px(p.degree), py(p.avgWalkers), 2.5, 0, 2 * Math.PI);
    ctx.fill();
  }
  ctx.fillStyle = '#ccd';
  ctx.font = '11px sans-serif';
  ctx.fillText(`per-node R² = ${displayedR2.toFixed(4)}`, f.x0 + 6, f.y0 + 12);
}
