"""Numpy fallback for the hot kernels; same surface as the compiled module.

All functions assume every node has degree >= 1 (enforced by callers).
"""

import numpy as np

BACKEND_NAME = "python"


def diffusion_step(indptr, indices, inv_deg, masses, p, out):
    """out_i = (1-p) * masses_i + sum_{j in N(i)} p * masses_j / deg_j."""
    share = p * masses * inv_deg
    np.multiply(masses, 1.0 - p, out=out)
    out += np.add.reduceat(share[indices], indptr[:-1])


def regression_r2(dx, sxx, masses):
    """R^2 of the per-node OLS fit of masses against degree.

    dx is the centered degree vector and sxx = dx @ dx > 0, both fixed per
    graph. Returns 0 when the masses carry no variance.
    """
    dy = masses - masses.mean()
    syy = float(dy @ dy)
    if syy <= 0.0:
        return 0.0
    sxy = float(dx @ dy)
    return min(1.0, max(0.0, (sxy * sxy) / (sxx * syy)))


def uniformity(masses):
    """1 - max relative deviation from the mean; regular-graph stand-in for R^2."""
    mean = masses.mean()
    return max(0.0, 1.0 - float(np.abs(masses - mean).max()) / mean)


def run_saturation(indptr, indices, inv_deg, dx, sxx, masses0, p, threshold, max_steps):
    """Step until the saturation indicator crosses `threshold`.

    Returns (converged, r2_trajectory, final_masses); the trajectory holds one
    entry per step taken (max_steps entries when not converged).
    """
    m = masses0.copy()
    out = np.empty_like(m)
    traj = np.empty(max_steps, dtype=np.float64)
    regular = sxx <= 0.0
    for t in range(max_steps):
        diffusion_step(indptr, indices, inv_deg, m, p, out)
        m, out = out, m
        r2 = uniformity(m) if regular else regression_r2(dx, sxx, m)
        traj[t] = r2
        if r2 >= threshold:
            return True, traj[: t + 1].copy(), m
    return False, traj, m
