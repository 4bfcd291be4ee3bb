"""Deterministic random-walk dynamics and saturation detection.

Per tick, every node keeps a (1 - p) fraction of its walker mass and splits
the departing p fraction equally among its neighbors:

    m_i' = (1 - p) * m_i + sum_{j in N(i)} p * m_j / deg(j)

The update conserves total mass and, on a connected graph with p in (0, 1),
converges to the degree-proportional equilibrium w_i = total * k_i / sum(k).
Saturation is the first tick at which the per-node OLS fit of mass against
degree reaches R^2 >= threshold; on regular graphs (where that regression is
undefined) the stand-in indicator is 1 - max_i |m_i - mean| / mean, so the
default 0.99 threshold corresponds to all nodes within 1% of the mean.

Randomness enters only through the choice of seed nodes; the dynamics
themselves are deterministic.
"""

from dataclasses import dataclass

import numpy as np

from ._backend import kernel
from .graphs import Graph
from .stats import ols_fit

__all__ = [
    "SimConfig",
    "WalkerState",
    "SimResult",
    "draw_seed_nodes",
    "place_walkers",
    "init_state",
    "step",
    "run_steps",
    "stationary_prediction",
    "r2_vs_degree",
    "uniformity_indicator",
    "run_to_saturation",
    "degree_quartile_slices",
    "quartile_averages",
    "average_mass_by_degree",
]


@dataclass(frozen=True)
class SimConfig:
    """Simulation parameters; rng_seed drives only the seed-node selection."""

    diffusion_rate: float
    total_walkers: float
    seed_node_count: int
    r2_threshold: float = 0.99
    max_steps: int = 100_000
    rng_seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.diffusion_rate < 1.0:
            raise ValueError("diffusion_rate must be in the open interval (0, 1)")
        if self.total_walkers <= 0:
            raise ValueError("total_walkers must be positive")
        if self.seed_node_count < 1:
            raise ValueError("seed_node_count must be positive")
        if not 0.0 < self.r2_threshold <= 1.0:
            raise ValueError("r2_threshold must be in (0, 1]")
        if self.max_steps < 1:
            raise ValueError("max_steps must be positive")


@dataclass
class WalkerState:
    """Real-valued walker mass per node at one tick."""

    masses: np.ndarray
    tick: int = 0


@dataclass
class SimResult:
    converged: bool
    saturation_time: int | None
    r2_trajectory: np.ndarray
    final_state: WalkerState
    seed_nodes: np.ndarray

    def to_json_dict(self) -> dict:
        return {
            "saturation_time": self.saturation_time,
            "converged": self.converged,
            "seed_nodes": [int(i) for i in self.seed_nodes],
            "r2_trajectory": [float(v) for v in self.r2_trajectory],
            "final_masses": [float(v) for v in self.final_state.masses],
        }


def draw_seed_nodes(g: Graph, cfg: SimConfig) -> np.ndarray:
    """cfg.seed_node_count distinct nodes, uniform over the graph."""
    if cfg.seed_node_count > g.node_count:
        raise ValueError(
            f"seed_node_count {cfg.seed_node_count} exceeds node_count {g.node_count}"
        )
    rng = np.random.default_rng(cfg.rng_seed)
    return np.sort(rng.choice(g.node_count, size=cfg.seed_node_count, replace=False))


def place_walkers(g: Graph, seed_nodes: np.ndarray, total_walkers: float) -> WalkerState:
    """Distribute total_walkers uniformly over seed_nodes at tick 0."""
    masses = np.zeros(g.node_count, dtype=np.float64)
    masses[np.asarray(seed_nodes, dtype=np.int64)] = total_walkers / len(seed_nodes)
    return WalkerState(masses=masses, tick=0)


def init_state(g: Graph, cfg: SimConfig) -> WalkerState:
    return place_walkers(g, draw_seed_nodes(g, cfg), cfg.total_walkers)


def _require_positive_degrees(g: Graph) -> None:
    if g.node_count and int(g.degrees.min()) == 0:
        raise ValueError(
            "graph has a degree-0 node; run dynamics on the giant component"
        )


def _inv_degrees(g: Graph) -> np.ndarray:
    return 1.0 / g.degrees.astype(np.float64)


def step(state: WalkerState, g: Graph, p: float) -> WalkerState:
    """One diffusion tick; total mass is conserved."""
    if state.masses.shape[0] != g.node_count:
        raise ValueError("state size does not match graph")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    _require_positive_degrees(g)
    out = np.empty_like(state.masses)
    kernel.diffusion_step(g.indptr, g.indices, _inv_degrees(g), state.masses, p, out)
    return WalkerState(masses=out, tick=state.tick + 1)


def run_steps(state: WalkerState, g: Graph, p: float, count: int) -> WalkerState:
    """Advance `count` ticks without any convergence check."""
    if count < 0:
        raise ValueError("count must be >= 0")
    _require_positive_degrees(g)
    inv_deg = _inv_degrees(g)
    cur = state.masses.copy()
    out = np.empty_like(cur)
    for _ in range(count):
        kernel.diffusion_step(g.indptr, g.indices, inv_deg, cur, p, out)
        cur, out = out, cur
    return WalkerState(masses=cur, tick=state.tick + count)


def stationary_prediction(g: Graph, total_walkers: float) -> np.ndarray:
    """Equilibrium masses w_i = total * k_i / sum(k) on a connected graph."""
    deg = g.degrees.astype(np.float64)
    return total_walkers * deg / deg.sum()


def r2_vs_degree(state: WalkerState, g: Graph, per_degree_average: bool = False) -> float:
    """R^2 of the OLS fit of walker mass against degree.

    The canonical form regresses per-node mass over all nodes. With
    per_degree_average=True the fit uses one (degree, mean mass) point per
    distinct degree instead, for comparison with binned plots. Raises
    DegenerateInputError on regular graphs (see uniformity_indicator).
    """
    if state.masses.shape[0] != g.node_count:
        raise ValueError("state size does not match graph")
    if per_degree_average:
        by_degree = average_mass_by_degree(state.masses, g.degrees)
        xs = np.array(sorted(by_degree), dtype=np.float64)
        ys = np.array([by_degree[int(d)] for d in xs])
        return ols_fit(xs, ys).r_squared
    return ols_fit(g.degrees.astype(np.float64), state.masses).r_squared


def uniformity_indicator(state: WalkerState) -> float:
    """1 - max relative deviation from the mean mass; the regular-graph
    stand-in for R^2 (clamped at 0)."""
    return kernel.uniformity(np.ascontiguousarray(state.masses, dtype=np.float64))


def run_to_saturation(g: Graph, cfg: SimConfig) -> SimResult:
    """Run from a fresh seeded state until saturation or cfg.max_steps.

    The saturation indicator is evaluated after every step; the first tick at
    which it reaches cfg.r2_threshold is the saturation time. Hitting
    max_steps without crossing yields converged=False (a valid result).
    """
    _require_positive_degrees(g)
    seed_nodes = draw_seed_nodes(g, cfg)
    state0 = place_walkers(g, seed_nodes, cfg.total_walkers)
    deg = g.degrees.astype(np.float64)
    dx = deg - deg.mean()
    sxx = float(dx @ dx)
    converged, traj, final = kernel.run_saturation(
        g.indptr,
        g.indices,
        _inv_degrees(g),
        dx,
        sxx,
        state0.masses,
        cfg.diffusion_rate,
        cfg.r2_threshold,
        cfg.max_steps,
    )
    ticks = int(traj.shape[0])
    return SimResult(
        converged=bool(converged),
        saturation_time=ticks if converged else None,
        r2_trajectory=traj,
        final_state=WalkerState(masses=final, tick=ticks),
        seed_nodes=seed_nodes,
    )


def degree_quartile_slices(degrees: np.ndarray) -> list[np.ndarray]:
    """Partition node indices into 4 groups by degree rank (Q1 low .. Q4 high).

    Nodes are sorted by degree (ties broken by node index) and split at
    boundaries floor(q * n / 4); with n < 4 some groups are empty.
    """
    order = np.argsort(degrees, kind="stable")
    n = order.shape[0]
    bounds = [(q * n) // 4 for q in range(5)]
    return [order[bounds[q] : bounds[q + 1]] for q in range(4)]


def quartile_averages(masses: np.ndarray, quartiles: list[np.ndarray]) -> list[float]:
    """Mean walker mass per degree quartile (0.0 for an empty group)."""
    return [float(masses[q].mean()) if q.size else 0.0 for q in quartiles]


def average_mass_by_degree(masses: np.ndarray, degrees: np.ndarray) -> dict[int, float]:
    """Mean walker mass over the nodes of each distinct degree."""
    deg = np.asarray(degrees)
    totals = np.bincount(deg, weights=masses)
    counts = np.bincount(deg)
    return {
        int(d): float(totals[d] / counts[d])
        for d in np.flatnonzero(counts)
    }
