// Session protocol v1: message shapes shared with the diffwalk server.

export const PROTOCOL_VERSION = 1;

export type GraphModel = 'er' | 'ba';
export type Layout = 'circular' | 'force';
export type Coloring = 'single' | 'multibin';

export interface GraphSpec {
  model: GraphModel;
  node_count: number;
  avg_degree: number;
  rng_seed: number;
}

export interface SimConfig {
  diffusion_rate: number;
  total_walkers: number;
  seed_node_count: number;
  r2_threshold?: number;
  max_steps?: number;
  rng_seed?: number;
}

export interface QuartileRange {
  min_degree: number;
  max_degree: number;
}

export interface GraphMessage {
  v: number;
  type: 'graph';
  session_id: string;
  node_count: number;
  discarded_nodes: number;
  edges: [number, number][];
  degrees: number[];
  layout: Layout;
  coloring: Coloring;
  layout_positions: [number, number][] | null;
  quartiles: (QuartileRange | null)[];
}

export interface SnapshotMessage {
  v: number;
  type: 'snapshot';
  tick: number;
  r2: number;
  total_walkers: number;
  quartile_averages: number[];
  node_sizes: number[] | null;
  avg_walkers_by_degree: Record<string, number>;
  saturated: boolean;
}

export interface SaturatedMessage {
  v: number;
  type: 'saturated';
  saturation_time: number;
}

export interface ErrorMessage {
  v: number;
  type: 'error';
  message: string;
}

export type ServerMessage =
  | GraphMessage
  | SnapshotMessage
  | SaturatedMessage
  | ErrorMessage;

export function parseServerMessage(raw: string): ServerMessage | null {
  let data: unknown;
  try {
    data = JSON.parse(raw);
  } catch {
    return null;
  }
  if (typeof data !== 'object' || data === null) return null;
  const msg = data as Record<string, unknown>;
  if (msg.v !== PROTOCOL_VERSION) return null;
  switch (msg.type) {
    case 'graph':
      return typeof msg.node_count === 'number' && Array.isArray(msg.degrees)
        ? (msg as unknown as GraphMessage)
        : null;
    case 'snapshot':
      return typeof msg.tick === 'number' &&
        typeof msg.r2 === 'number' &&
        Array.isArray(msg.quartile_averages)
        ? (msg as unknown as SnapshotMessage)
        : null;
    case 'saturated':
      return typeof msg.saturation_time === 'number'
        ? (msg as unknown as SaturatedMessage)
        : null;
    case 'error':
      return typeof msg.message === 'string' ? (msg as unknown as ErrorMessage) : null;
    default:
      return null;
  }
}

// Client -> server builders.

export function setupMessage(
  graphSpec: GraphSpec,
  simConfig: SimConfig,
  layout: Layout,
  coloring: Coloring,
) {
  return { type: 'setup', graph_spec: graphSpec, sim_config: simConfig, layout, coloring };
}

export const playMessage = () => ({ type: 'play' });
export const pauseMessage = () => ({ type: 'pause' });
export const stepMessage = (count = 1) => ({ type: 'step', count });
export const setRateMessage = (p: number) => ({ type: 'set_rate', p });
export const setSpeedMessage = (msPerTick: number) => ({
  type: 'set_speed',
  ms_per_tick: msPerTick,
});
export const resetMessage = () => ({ type: 'reset' });
