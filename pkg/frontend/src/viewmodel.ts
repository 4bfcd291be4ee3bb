// Pure view state: every displayed number originates from a server message.
// The view model never advances dynamics; it only records what the server
// said (the fitted line through the scatter is presentation of server data).

import type {
  GraphMessage,
  ServerMessage,
  SnapshotMessage,
} from './protocol.js';

export interface ScatterPoint {
  degree: number;
  avgWalkers: number;
}

export interface FitLine {
  slope: number;
  intercept: number;
}

const QUARTILE_NAMES = ['Q1', 'Q2', 'Q3', 'Q4'];

export class ViewModel {
  graph: GraphMessage | null = null;
  lastTick = -1;
  displayedR2 = 0;
  totalWalkers = 0;
  saturated = false;
  saturationTime: number | null = null;
  lastError: string | null = null;

  tickSeries: number[] = [];
  quartileSeries: [number[], number[], number[], number[]] = [[], [], [], []];
  nodeSizes: number[] | null = null;
  scatter: ScatterPoint[] = [];

  get quartileLabels(): string[] {
    if (!this.graph) return QUARTILE_NAMES.slice();
    return this.graph.quartiles.map((q, i) =>
      q === null
        ? QUARTILE_NAMES[i]
        : q.min_degree === q.max_degree
          ? `${QUARTILE_NAMES[i]} (k=${q.min_degree})`
          : `${QUARTILE_NAMES[i]} (k ${q.min_degree}-${q.max_degree})`,
    );
  }

  get degreeHistogram(): Map<number, number> {
    const hist = new Map<number, number>();
    if (this.graph) {
      for (const d of this.graph.degrees) hist.set(d, (hist.get(d) ?? 0) + 1);
    }
    return new Map([...hist.entries()].sort((a, b) => a[0] - b[0]));
  }

  apply(msg: ServerMessage): void {
    switch (msg.type) {
      case 'graph':
        this.graph = msg;
        this.clearRun();
        break;
      case 'snapshot':
        this.applySnapshot(msg);
        break;
      case 'saturated':
        this.saturated = true;
        this.saturationTime = msg.saturation_time;
        break;
      case 'error':
        this.lastError = msg.message;
        break;
    }
  }

  private clearRun(): void {
    this.lastTick = -1;
    this.displayedR2 = 0;
    this.saturated = false;
    this.saturationTime = null;
    this.tickSeries = [];
    this.quartileSeries = [[], [], [], []];
    this.nodeSizes = null;
    this.scatter = [];
  }

  private applySnapshot(snap: SnapshotMessage): void {
    if (snap.tick === 0) {
      this.clearRun(); // a fresh run (reset); start the buffers over
    } else if (snap.tick <= this.lastTick) {
      return; // stale snapshot out of a latest-wins stream
    }
    this.lastTick = snap.tick;
    this.displayedR2 = snap.r2;
    this.totalWalkers = snap.total_walkers;
    this.nodeSizes = snap.node_sizes;
    this.saturated = this.saturated || snap.saturated;
    this.tickSeries.push(snap.tick);
    for (let q = 0; q < 4; q++) {
      this.quartileSeries[q].push(snap.quartile_averages[q]);
    }
    this.scatter = Object.entries(snap.avg_walkers_by_degree)
      .map(([degree, avgWalkers]) => ({ degree: Number(degree), avgWalkers }))
      .sort((a, b) => a.degree - b.degree);
  }
}

/** Least-squares line through the scatter points, for drawing only; the
 * displayed R^2 stays the server's per-node value. */
export function fitScatterLine(points: ScatterPoint[]): FitLine | null {
  if (points.length < 2) return null;
  const n = points.length;
  const meanX = points.reduce((s, p) => s + p.degree, 0) / n;
  const meanY = points.reduce((s, p) => s + p.avgWalkers, 0) / n;
  let sxx = 0;
  let sxy = 0;
  for (const p of points) {
    sxx += (p.degree - meanX) ** 2;
    sxy += (p.degree - meanX) * (p.avgWalkers - meanY);
  }
  if (sxx === 0) return null;
  const slope = sxy / sxx;
  return { slope, intercept: meanY - slope * meanX };
}

/** Node radius in pixels, strictly monotone in walker mass. */
export function nodeRadius(mass: number, maxMass: number, rMin = 2, rMax = 14): number {
  if (maxMass <= 0) return rMin;
  return rMin + (rMax - rMin) * Math.sqrt(Math.max(0, mass) / maxMass);
}

/** Quartile index (0..3) of a node, from the graph message's degree ranges. */
export function quartileOfNode(graph: GraphMessage, node: number): number {
  const d = graph.degrees[node];
  for (let q = 0; q < 4; q++) {
    const range = graph.quartiles[q];
    if (range && d >= range.min_degree && d <= range.max_degree) return q;
  }
  return 0;
}
