// Bootstrap: connect, wire the controls, render on animation frames.

import { SessionClient } from './client.js';
import { drawDegreeHistogram, drawQuartileSeries, drawScatter } from './charts.js';
import { attachControls, findControls } from './controls.js';
import { drawNetwork, forceLayout } from './network.js';
import type { Layout } from './protocol.js';
import { ViewModel } from './viewmodel.js';

function canvasCtx(id: string): CanvasRenderingContext2D {
  const canvas = document.getElementById(id) as HTMLCanvasElement;
  const ctx = canvas.getContext('2d');
  if (!ctx) throw new Error(`no 2d context for #${id}`);
  return ctx;
}

window.addEventListener('DOMContentLoaded', () => {
  const vm = new ViewModel();
  let positions: [number, number][] | null = null;
  let requestedLayout: Layout = 'circular';
  let dirty = false;

  const network = canvasCtx('network');
  const histogram = canvasCtx('histogram');
  const quartiles = canvasCtx('quartiles');
  const scatter = canvasCtx('scatter');
  const banner = document.getElementById('banner') as HTMLDivElement;
  const status = document.getElementById('status') as HTMLSpanElement;

  const url = `${location.protocol === 'https:' ? 'wss' : 'ws'}://${location.host}/ws`;
  const client = new SessionClient(url);
  client.onOpen = () => (status.textContent = 'connected');
  client.onClose = () => (status.textContent = 'disconnected');

  client.onMessage = (msg) => {
    vm.apply(msg);
    if (msg.type === 'graph') {
      positions =
        msg.layout_positions ??
        (requestedLayout === 'force' ? forceLayout(msg) : null);
    }
    if (msg.type === 'error') {
      status.textContent = `server: ${msg.message}`;
    }
    dirty = true;
  };

  const controls = findControls();
  attachControls(controls, (cmd) => client.send(cmd), (layout) => {
    requestedLayout = layout;
  });

  function render() {
    if (dirty) {
      dirty = false; // latest snapshot wins; one draw per frame
      if (vm.graph && positions) {
        drawNetwork(network, vm.graph, positions, vm.nodeSizes);
      }
      drawDegreeHistogram(histogram, vm.degreeHistogram);
      drawQuartileSeries(quartiles, vm.tickSeries, vm.quartileSeries, vm.quartileLabels);
      drawScatter(scatter, vm.scatter, vm.displayedR2);
      if (vm.saturationTime !== null) {
        banner.textContent = `Saturated at tick ${vm.saturationTime} (R² ≥ threshold)`;
        banner.classList.add('visible');
      } else {
        banner.textContent = '';
        banner.classList.remove('visible');
      }
      const tickLabel = vm.lastTick >= 0 ? `tick ${vm.lastTick}` : 'no run';
      const r2Label = `R² ${vm.displayedR2.toFixed(4)}`;
      document.getElementById('readout')!.textContent = `${tickLabel} | ${r2Label}`;
    }
    requestAnimationFrame(render);
  }
  requestAnimationFrame(render);
});
