// Control panel: reads the form, validates inline, emits session commands.

import {
  pauseMessage,
  playMessage,
  resetMessage,
  setRateMessage,
  setSpeedMessage,
  setupMessage,
  stepMessage,
  type Coloring,
  type GraphModel,
  type Layout,
} from './protocol.js';

export interface ControlElements {
  model: HTMLSelectElement;
  nodes: HTMLInputElement;
  avgDegree: HTMLInputElement;
  layout: HTMLSelectElement;
  coloring: HTMLSelectElement;
  walkers: HTMLInputElement;
  seedNodes: HTMLInputElement;
  seed: HTMLInputElement;
  rate: HTMLInputElement;
  rateValue: HTMLSpanElement;
  speed: HTMLInputElement;
  speedValue: HTMLSpanElement;
  setup: HTMLButtonElement;
  play: HTMLButtonElement;
  pause: HTMLButtonElement;
  step: HTMLButtonElement;
  reset: HTMLButtonElement;
  message: HTMLSpanElement;
}

function grab(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing control #${id}`);
  return el;
}

export function findControls(): ControlElements {
  return {
    model: grab('model') as HTMLSelectElement,
    nodes: grab('nodes') as HTMLInputElement,
    avgDegree: grab('avg-degree') as HTMLInputElement,
    layout: grab('layout') as HTMLSelectElement,
    coloring: grab('coloring') as HTMLSelectElement,
    walkers: grab('walkers') as HTMLInputElement,
    seedNodes: grab('seed-nodes') as HTMLInputElement,
    seed: grab('seed') as HTMLInputElement,
    rate: grab('rate') as HTMLInputElement,
    rateValue: grab('rate-value') as HTMLSpanElement,
    speed: grab('speed') as HTMLInputElement,
    speedValue: grab('speed-value') as HTMLSpanElement,
    setup: grab('setup') as HTMLButtonElement,
    play: grab('play') as HTMLButtonElement,
    pause: grab('pause') as HTMLButtonElement,
    step: grab('step') as HTMLButtonElement,
    reset: grab('reset') as HTMLButtonElement,
    message: grab('form-message') as HTMLSpanElement,
  };
}

/** Validate the setup form; returns an error string or null when valid. */
export function validateSetupForm(values: {
  nodes: number;
  avgDegree: number;
  walkers: number;
  seedNodes: number;
  rate: number;
}): string | null {
  if (!Number.isInteger(values.nodes) || values.nodes < 2) {
    return 'node count must be an integer >= 2';
  }
  if (!(values.avgDegree > 0) || values.avgDegree > values.nodes - 1) {
    return 'average degree must be in (0, nodes-1]';
  }
  if (!(values.walkers > 0)) return 'total walkers must be positive';
  if (!Number.isInteger(values.seedNodes) || values.seedNodes < 1 ||
      values.seedNodes > values.nodes) {
    return 'seed nodes must be an integer in [1, nodes]';
  }
  if (!(values.rate > 0 && values.rate < 1)) {
    return 'diffusion rate must be strictly between 0 and 1';
  }
  return null;
}

export function attachControls(
  els: ControlElements,
  send: (command: object) => void,
  onSetup: (layout: Layout) => void,
): void {
  const showRate = () => (els.rateValue.textContent = Number(els.rate.value).toFixed(2));
  const showSpeed = () => (els.speedValue.textContent = `${els.speed.value} ms`);
  showRate();
  showSpeed();

  els.setup.onclick = () => {
    const values = {
      nodes: Number(els.nodes.value),
      avgDegree: Number(els.avgDegree.value),
      walkers: Number(els.walkers.value),
      seedNodes: Number(els.seedNodes.value),
      rate: Number(els.rate.value),
    };
    const problem = validateSetupForm(values);
    els.message.textContent = problem ?? '';
    if (problem) return;
    const layout = els.layout.value as Layout;
    onSetup(layout);
    send(
      setupMessage(
        {
          model: els.model.value as GraphModel,
          node_count: values.nodes,
          avg_degree: values.avgDegree,
          rng_seed: Number(els.seed.value) || 0,
        },
        {
          diffusion_rate: values.rate,
          total_walkers: values.walkers,
          seed_node_count: values.seedNodes,
          rng_seed: Number(els.seed.value) || 0,
        },
        layout,
        els.coloring.value as Coloring,
      ),
    );
  };

  els.play.onclick = () => send(playMessage());
  els.pause.onclick = () => send(pauseMessage());
  els.step.onclick = () => send(stepMessage(1));
  els.reset.onclick = () => send(resetMessage());

  els.rate.oninput = () => {
    showRate();
    const p = Number(els.rate.value);
    if (p > 0 && p < 1) send(setRateMessage(p)); // live change while running
  };
  els.speed.oninput = () => {
    showSpeed();
    const ms = Number(els.speed.value);
    if (ms > 0) send(setSpeedMessage(ms));
  };
}
