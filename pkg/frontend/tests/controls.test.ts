import { describe, expect, it } from 'vitest';

import { validateSetupForm } from '../src/controls.js';

const valid = { nodes: 180, avgDegree: 6, walkers: 600, seedNodes: 6, rate: 0.4 };

describe('setup form validation', () => {
  it('accepts the teaching defaults', () => {
    expect(validateSetupForm(valid)).toBeNull();
  });

  it('blocks bad values with an inline message', () => {
    expect(validateSetupForm({ ...valid, nodes: 1 })).toMatch(/node count/);
    expect(validateSetupForm({ ...valid, nodes: 10.5 })).toMatch(/node count/);
    expect(validateSetupForm({ ...valid, avgDegree: 0 })).toMatch(/average degree/);
    expect(validateSetupForm({ ...valid, avgDegree: 400 })).toMatch(/average degree/);
    expect(validateSetupForm({ ...valid, walkers: -5 })).toMatch(/walkers/);
    expect(validateSetupForm({ ...valid, seedNodes: 0 })).toMatch(/seed nodes/);
    expect(validateSetupForm({ ...valid, seedNodes: 999 })).toMatch(/seed nodes/);
    expect(validateSetupForm({ ...valid, rate: 0 })).toMatch(/diffusion rate/);
    expect(validateSetupForm({ ...valid, rate: 1 })).toMatch(/diffusion rate/);
  });
});
