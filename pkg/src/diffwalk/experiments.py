"""Ensemble harness: saturation-time sweeps, skewness censuses, and hub
correlations over ER/BA graph ensembles.

Every random choice in an ensemble is keyed by a task seed derived from the
master seed and the task coordinates through a fixed mixing function
(:func:`derive_seed`), so results are byte-identical on replay regardless of
worker count or scheduling. All dynamics run on the giant component of each
generated graph; hub counts are taken on the same substrate, and the
component size is recorded with every graph so nothing is dropped silently.
"""

import hashlib
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace
from functools import partial
from typing import Callable, Sequence

from .dynamics import SimConfig, run_to_saturation
from .graphs import Graph, GraphSpec, count_hubs, generate, giant_component
from .stats import DegenerateInputError, SampleSummary, pearson, summarize

__all__ = [
    "EnsembleConfig",
    "GraphRecord",
    "SkewnessEnsembleResult",
    "RateSweepRow",
    "HubCorrelationResult",
    "derive_seed",
    "run_saturation_ensemble",
    "run_skewness_ensemble",
    "run_density_sweep",
    "run_size_sweep",
    "run_hub_correlation",
    "records_csv",
    "rate_records_csv",
    "RECORDS_CSV_HEADER",
]

_U64 = (1 << 64) - 1


def derive_seed(master_seed: int, label: str, *indices: int) -> int:
    """64-bit task seed from (master_seed, label, indices).

    Mixing function: BLAKE2b with 8-byte digest over the little-endian
    master seed, the UTF-8 label, and each index as a little-endian signed
    64-bit integer. Distinct (label, indices) tuples give independent seeds.
    """
    h = hashlib.blake2b(digest_size=8)
    h.update(struct.pack("<Q", master_seed & _U64))
    h.update(label.encode("utf-8"))
    for ix in indices:
        h.update(struct.pack("<q", ix))
    return int.from_bytes(h.digest(), "little")


@dataclass(frozen=True)
class EnsembleConfig:
    """Plan for n_graphs independent graphs x n_sims_per_graph simulations.

    The rng_seed fields inside graph_spec and sim_config are ignored; per-task
    seeds are derived from master_seed.
    """

    graph_spec: GraphSpec
    sim_config: SimConfig
    n_graphs: int
    n_sims_per_graph: int
    master_seed: int
    skew_threshold: float = 1.0

    def __post_init__(self):
        if self.n_graphs < 1:
            raise ValueError("n_graphs must be positive")
        if self.n_sims_per_graph < 1:
            raise ValueError("n_sims_per_graph must be positive")

    def to_json_dict(self) -> dict:
        d = asdict(self)
        d["graph_spec"]["avg_degree"] = float(d["graph_spec"]["avg_degree"])
        return d


@dataclass
class GraphRecord:
    """Per-graph outcome of one ensemble member.

    ``saturation_times`` lists converged runs only (in simulation order);
    ``per_sim_times`` keeps one entry per simulation with None marking an
    unconverged run, so the per-simulation records can be persisted exactly.
    """

    graph_index: int
    hub_count: int
    giant_component_size: int
    saturation_times: list[int]
    summary: SampleSummary | None
    unconverged_count: int
    per_sim_times: list[int | None]

    @property
    def skewness(self) -> float | None:
        return self.summary.skewness if self.summary is not None else None


@dataclass
class SkewnessEnsembleResult:
    config: EnsembleConfig
    records: list[GraphRecord]
    fraction_above_threshold: float | None
    evaluated_graph_count: int


@dataclass
class RateSweepRow:
    diffusion_rate: float
    summary: SampleSummary | None
    unconverged_count: int
    per_sim_times: list[int | None]


@dataclass
class HubCorrelationResult:
    ensemble: SkewnessEnsembleResult
    corr_hubs_median: float | None
    corr_hubs_skewness: float | None
    median_pair_count: int
    skewness_pair_count: int


def _map_tasks(fn: Callable, args: Sequence, jobs: int) -> list:
    """Run fn over args, optionally on a process pool; output order is fixed
    by input order, so scheduling cannot affect results."""
    if jobs <= 1 or len(args) <= 1:
        return [fn(a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, args))


def prepared_substrate(spec: GraphSpec) -> tuple[Graph, int, int]:
    """Generate a graph and reduce it to its giant component.

    Returns (giant, hub_count, discarded_node_count); hubs are counted on the
    giant component, the substrate the dynamics actually run on.
    """
    raw = generate(spec)
    giant, _ = giant_component(raw)
    return giant, count_hubs(giant), raw.node_count - giant.node_count


def _graph_task(cfg: EnsembleConfig, graph_index: int) -> GraphRecord:
    spec = replace(
        cfg.graph_spec,
        rng_seed=derive_seed(cfg.master_seed, "graph", graph_index),
    )
    giant, hubs, _ = prepared_substrate(spec)
    per_sim: list[int | None] = []
    for s in range(cfg.n_sims_per_graph):
        sim_cfg = replace(
            cfg.sim_config,
            rng_seed=derive_seed(cfg.master_seed, "sim", graph_index, s),
        )
        result = run_to_saturation(giant, sim_cfg)
        per_sim.append(result.saturation_time)
    converged = [t for t in per_sim if t is not None]
    return GraphRecord(
        graph_index=graph_index,
        hub_count=hubs,
        giant_component_size=giant.node_count,
        saturation_times=converged,
        summary=summarize(converged) if converged else None,
        unconverged_count=len(per_sim) - len(converged),
        per_sim_times=per_sim,
    )


def run_skewness_ensemble(cfg: EnsembleConfig, jobs: int = 1) -> SkewnessEnsembleResult:
    """Per-graph skewness of saturation times and the fraction of graphs at or
    above cfg.skew_threshold.

    Graphs whose skewness is undefined (fewer than 3 converged runs, or zero
    variance) stay in the records but are excluded from the fraction's
    denominator; with no evaluable graph the fraction is None.
    """
    if cfg.n_sims_per_graph < 3:
        raise ValueError("skewness needs n_sims_per_graph >= 3")
    records = _map_tasks(partial(_graph_task, cfg), range(cfg.n_graphs), jobs)
    evaluated = [r for r in records if r.skewness is not None]
    above = sum(1 for r in evaluated if r.skewness >= cfg.skew_threshold)
    fraction = above / len(evaluated) if evaluated else None
    return SkewnessEnsembleResult(
        config=cfg,
        records=records,
        fraction_above_threshold=fraction,
        evaluated_graph_count=len(evaluated),
    )


def _rate_task(g: Graph, template: SimConfig, n_sims: int, master_seed: int,
               indexed_rate: tuple[int, float]) -> RateSweepRow:
    rate_index, p = indexed_rate
    per_sim: list[int | None] = []
    for s in range(n_sims):
        cfg = replace(
            template,
            diffusion_rate=p,
            rng_seed=derive_seed(master_seed, "rate-sim", rate_index, s),
        )
        result = run_to_saturation(g, cfg)
        per_sim.append(result.saturation_time)
    converged = [t for t in per_sim if t is not None]
    return RateSweepRow(
        diffusion_rate=p,
        summary=summarize(converged) if converged else None,
        unconverged_count=len(per_sim) - len(converged),
        per_sim_times=per_sim,
    )


def run_saturation_ensemble(
    g: Graph,
    sim_template: SimConfig,
    n_sims: int,
    p_values: Sequence[float],
    master_seed: int,
    jobs: int = 1,
) -> list[RateSweepRow]:
    """Saturation-time spread per diffusion rate on one fixed graph.

    All variation across the n_sims runs of a rate comes from fresh seed-node
    selections; the dynamics are deterministic given the seeds.
    """
    task = partial(_rate_task, g, sim_template, n_sims, master_seed)
    return _map_tasks(task, list(enumerate(p_values)), jobs)


def run_density_sweep(
    avg_degrees: Sequence[float],
    node_count: int,
    template: EnsembleConfig,
    jobs: int = 1,
) -> list[tuple[float, SkewnessEnsembleResult]]:
    """Skewness ensemble per average degree on ER graphs of fixed size."""
    out = []
    for i, k in enumerate(avg_degrees):
        cfg = replace(
            template,
            graph_spec=replace(
                template.graph_spec, model="er", node_count=node_count, avg_degree=k
            ),
            master_seed=derive_seed(template.master_seed, "density-cell", i),
        )
        out.append((k, run_skewness_ensemble(cfg, jobs=jobs)))
    return out


def run_size_sweep(
    node_counts: Sequence[int],
    avg_degrees: Sequence[float],
    template: EnsembleConfig,
    jobs: int = 1,
) -> list[tuple[int, float, SkewnessEnsembleResult]]:
    """Skewness ensembles over the (node_count, avg_degree) grid (ER)."""
    out = []
    cell = 0
    for n in node_counts:
        for k in avg_degrees:
            cfg = replace(
                template,
                graph_spec=replace(
                    template.graph_spec, model="er", node_count=n, avg_degree=k
                ),
                master_seed=derive_seed(template.master_seed, "size-cell", cell),
            )
            out.append((n, k, run_skewness_ensemble(cfg, jobs=jobs)))
            cell += 1
    return out


def hub_correlations(ensemble: SkewnessEnsembleResult) -> HubCorrelationResult:
    """Pearson correlations of hub count vs median saturation time and vs
    skewness, across the graphs of an ensemble."""
    med_pairs = [
        (r.hub_count, r.summary.median)
        for r in ensemble.records
        if r.summary is not None
    ]
    skew_pairs = [
        (r.hub_count, r.skewness) for r in ensemble.records if r.skewness is not None
    ]

    def _corr(pairs):
        if len(pairs) < 2:
            return None
        try:
            return pearson([a for a, _ in pairs], [b for _, b in pairs])
        except DegenerateInputError:
            return None

    return HubCorrelationResult(
        ensemble=ensemble,
        corr_hubs_median=_corr(med_pairs),
        corr_hubs_skewness=_corr(skew_pairs),
        median_pair_count=len(med_pairs),
        skewness_pair_count=len(skew_pairs),
    )


def run_hub_correlation(cfg: EnsembleConfig, jobs: int = 1) -> HubCorrelationResult:
    return hub_correlations(run_skewness_ensemble(cfg, jobs=jobs))


RECORDS_CSV_HEADER = (
    "graph_index,sim_index,saturation_time,converged,hub_count,giant_component_size"
)


def records_csv(records: Sequence[GraphRecord]) -> str:
    """Per-simulation records for a skewness ensemble (spec'd CSV schema)."""
    lines = [RECORDS_CSV_HEADER]
    for rec in records:
        for s, t in enumerate(rec.per_sim_times):
            time_field = "" if t is None else str(t)
            flag = "true" if t is not None else "false"
            lines.append(
                f"{rec.graph_index},{s},{time_field},{flag},"
                f"{rec.hub_count},{rec.giant_component_size}"
            )
    return "\n".join(lines) + "\n"


def rate_records_csv(rows: Sequence[RateSweepRow], hub_count: int,
                     giant_component_size: int, n_sims: int) -> str:
    """Per-simulation records for a rate sweep on one graph.

    The single graph is index 0 and sim_index runs globally in rate order
    (rate block r occupies sim indices [r * n_sims, (r+1) * n_sims)).
    """
    lines = [RECORDS_CSV_HEADER]
    for r, row in enumerate(rows):
        for s, t in enumerate(row.per_sim_times):
            time_field = "" if t is None else str(t)
            flag = "true" if t is not None else "false"
            lines.append(
                f"0,{r * n_sims + s},{time_field},{flag},"
                f"{hub_count},{giant_component_size}"
            )
    return "\n".join(lines) + "\n"
