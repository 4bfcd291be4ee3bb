// UI smoke: replay a recorded snapshot stream through the view model and
// check the displayed state (4 quartile series, verbatim R^2, banner).

import { describe, expect, it } from 'vitest';

import type { GraphMessage, SnapshotMessage } from '../src/protocol.js';
import {
  ViewModel,
  fitScatterLine,
  nodeRadius,
  quartileOfNode,
} from '../src/viewmodel.js';

function graphMessage(): GraphMessage {
  return {
    v: 1,
    type: 'graph',
    session_id: 'abc',
    node_count: 8,
    discarded_nodes: 1,
    edges: [[0, 1], [0, 2], [0, 3], [1, 2], [3, 4], [4, 5], [5, 6], [6, 7]],
    degrees: [3, 2, 2, 2, 2, 2, 2, 1],
    layout: 'circular',
    coloring: 'multibin',
    layout_positions: null,
    quartiles: [
      { min_degree: 1, max_degree: 2 },
      { min_degree: 2, max_degree: 2 },
      { min_degree: 2, max_degree: 2 },
      { min_degree: 2, max_degree: 3 },
    ],
  };
}

function snapshot(tick: number, r2: number, saturated = false): SnapshotMessage {
  return {
    v: 1,
    type: 'snapshot',
    tick,
    r2,
    total_walkers: 100,
    quartile_averages: [1 + tick, 2 + tick, 3 + tick, 4 + tick],
    node_sizes: [10, 20, 10, 10, 10, 10, 20, 10],
    avg_walkers_by_degree: { '1': 5.0, '2': 12.5, '3': 30.0 },
    saturated,
  };
}

describe('recorded stream replay', () => {
  it('produces 4 quartile series, verbatim R2, and a saturation banner', () => {
    const vm = new ViewModel();
    vm.apply(graphMessage());
    const stream = [
      snapshot(1, 0.21),
      snapshot(2, 0.55),
      snapshot(3, 0.9931, true),
    ];
    for (const snap of stream) vm.apply(snap);
    vm.apply({ v: 1, type: 'saturated', saturation_time: 3 });

    expect(vm.quartileSeries).toHaveLength(4);
    for (const series of vm.quartileSeries) expect(series).toHaveLength(3);
    // displayed R^2 is exactly the stream's final value, never recomputed
    expect(vm.displayedR2).toBe(0.9931);
    expect(vm.saturated).toBe(true);
    expect(vm.saturationTime).toBe(3);
    expect(vm.tickSeries).toEqual([1, 2, 3]);
  });

  it('displays server numbers verbatim even when they are physically wrong', () => {
    // pure-consumer check: a nonsense R^2 for a collinear scatter must be
    // shown as-is, proving the client does not compute dynamics
    const vm = new ViewModel();
    vm.apply(graphMessage());
    const snap = snapshot(1, 0.123);
    snap.avg_walkers_by_degree = { '1': 1, '2': 2, '3': 3 }; // perfect line
    vm.apply(snap);
    expect(vm.displayedR2).toBe(0.123);
    expect(vm.scatter).toEqual([
      { degree: 1, avgWalkers: 1 },
      { degree: 2, avgWalkers: 2 },
      { degree: 3, avgWalkers: 3 },
    ]);
    expect(vm.quartileSeries.map((s) => s[0])).toEqual(snap.quartile_averages);
  });

  it('ignores stale ticks and restarts on tick 0', () => {
    const vm = new ViewModel();
    vm.apply(graphMessage());
    vm.apply(snapshot(3, 0.5));
    vm.apply(snapshot(2, 0.4)); // stale: dropped
    expect(vm.tickSeries).toEqual([3]);
    expect(vm.displayedR2).toBe(0.5);
    vm.apply(snapshot(0, 0.01)); // reset marker: buffers start over
    expect(vm.tickSeries).toEqual([0]);
    expect(vm.quartileSeries[0]).toHaveLength(1);
  });

  it('clears state on a new graph message', () => {
    const vm = new ViewModel();
    vm.apply(graphMessage());
    vm.apply(snapshot(5, 0.7));
    vm.apply(graphMessage());
    expect(vm.tickSeries).toEqual([]);
    expect(vm.saturationTime).toBeNull();
  });

  it('labels quartile legends with degree ranges from the graph message', () => {
    const vm = new ViewModel();
    vm.apply(graphMessage());
    expect(vm.quartileLabels).toEqual([
      'Q1 (k 1-2)',
      'Q2 (k=2)',
      'Q3 (k=2)',
      'Q4 (k 2-3)',
    ]);
  });

  it('derives the degree histogram from the graph message only', () => {
    const vm = new ViewModel();
    vm.apply(graphMessage());
    expect([...vm.degreeHistogram.entries()]).toEqual([[1, 1], [2, 6], [3, 1]]);
  });
});

describe('presentation helpers', () => {
  it('node radius is monotone in mass', () => {
    const masses = [0, 1, 2, 5, 10, 50];
    const radii = masses.map((m) => nodeRadius(m, 50));
    for (let i = 1; i < radii.length; i++) expect(radii[i]).toBeGreaterThan(radii[i - 1]);
  });

  it('fits the scatter line for drawing', () => {
    const line = fitScatterLine([
      { degree: 1, avgWalkers: 3 },
      { degree: 2, avgWalkers: 5 },
      { degree: 3, avgWalkers: 7 },
    ]);
    expect(line).not.toBeNull();
    expect(line!.slope).toBeCloseTo(2, 12);
    expect(line!.intercept).toBeCloseTo(1, 12);
    expect(fitScatterLine([{ degree: 2, avgWalkers: 1 }])).toBeNull();
  });

  it('assigns nodes to quartile color bins consistently', () => {
    const graph = graphMessage();
    expect(quartileOfNode(graph, 7)).toBe(0); // degree 1 only fits Q1
    expect(quartileOfNode(graph, 0)).toBe(3); // degree 3 only fits Q4
    const repeat = Array.from({ length: 5 }, () => quartileOfNode(graph, 1));
    expect(new Set(repeat).size).toBe(1);
  });
});
