"""Named experiment presets behind `diffwalk experiment {fig3a,...,fig5}`.

Each preset returns a JSON-ready summary dict and emits per-simulation CSV
records through a sink callback as soon as each block finishes, so partial
results survive an interrupted run. The `paper` profile is the full-scale
ensemble sizing; `smoke` is a scaled-down profile for CI.
"""

import json
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from .dynamics import SimConfig
from .experiments import (
    EnsembleConfig,
    derive_seed,
    hub_correlations,
    prepared_substrate,
    rate_records_csv,
    records_csv,
    run_density_sweep,
    run_saturation_ensemble,
    run_size_sweep,
    run_skewness_ensemble,
)
from .graphs import GraphSpec

__all__ = ["PROFILES", "EXPERIMENTS", "run_experiment", "summary_json_bytes"]

Sink = Callable[[str, str], None]

DIFFUSION_RATES = tuple(round(0.1 * i, 1) for i in range(1, 10))
DENSITY_DEGREES = (4.0, 6.0, 8.0, 12.0, 16.0, 20.0)
SIZE_GRID_NODES = (250, 500, 1000, 2000)


@dataclass(frozen=True)
class Profile:
    n_graphs: int
    n_sims: int
    rate_sims: int
    sweep_graphs: int
    sweep_sims: int
    size_grid_nodes: tuple[int, ...]
    size_grid_degrees: tuple[float, ...]


PROFILES = {
    "paper": Profile(
        n_graphs=100,
        n_sims=100,
        rate_sims=100,
        sweep_graphs=100,
        sweep_sims=100,
        size_grid_nodes=SIZE_GRID_NODES,
        size_grid_degrees=DENSITY_DEGREES,
    ),
    "smoke": Profile(
        n_graphs=10,
        n_sims=20,
        rate_sims=20,
        sweep_graphs=25,
        sweep_sims=50,
        size_grid_nodes=(250, 500, 1000),
        size_grid_degrees=(6.0,),
    ),
}

_BASE_NODES = 1000
_BASE_DEGREE = 6.0


def _rate_sim_template() -> SimConfig:
    # 400 walkers on 8 seed nodes; diffusion_rate is replaced per sweep point.
    return SimConfig(diffusion_rate=0.5, total_walkers=400.0, seed_node_count=8)


def _census_sim() -> SimConfig:
    # 10,000 walkers on 4 seed nodes at p = 0.4.
    return SimConfig(diffusion_rate=0.4, total_walkers=10_000.0, seed_node_count=4)


def _summary_row(summary) -> dict:
    if summary is None:
        return {"count": 0}
    return {
        "count": summary.count,
        "median": float(summary.median),
        "p05": float(summary.p05),
        "p95": float(summary.p95),
        "skewness": None if summary.skewness is None else float(summary.skewness),
    }


def _fig3a(profile: Profile, master_seed: int, jobs: int, sink: Sink) -> dict:
    models = {}
    for model in ("er", "ba"):
        spec = GraphSpec(
            model=model,
            node_count=_BASE_NODES,
            avg_degree=_BASE_DEGREE,
            rng_seed=derive_seed(master_seed, f"fig3a-graph-{model}"),
        )
        giant, hubs, discarded = prepared_substrate(spec)
        rows = run_saturation_ensemble(
            giant,
            _rate_sim_template(),
            profile.rate_sims,
            DIFFUSION_RATES,
            master_seed=derive_seed(master_seed, f"fig3a-sims-{model}"),
            jobs=jobs,
        )
        sink(
            f"fig3a_{model}_records.csv",
            rate_records_csv(rows, hubs, giant.node_count, profile.rate_sims),
        )
        models[model] = {
            "graph_seed": spec.rng_seed,
            "giant_component_size": giant.node_count,
            "discarded_nodes": discarded,
            "hub_count": hubs,
            "rows": [
                {
                    "diffusion_rate": row.diffusion_rate,
                    "unconverged": row.unconverged_count,
                    **_summary_row(row.summary),
                }
                for row in rows
            ],
        }
    return {
        "settings": {
            "node_count": _BASE_NODES,
            "avg_degree": _BASE_DEGREE,
            "total_walkers": 400.0,
            "seed_node_count": 8,
            "n_sims_per_rate": profile.rate_sims,
            "diffusion_rates": list(DIFFUSION_RATES),
        },
        "models": models,
    }


def _census_config(model: str, master_seed: int, label: str, n_graphs: int,
                   n_sims: int, node_count: int = _BASE_NODES,
                   avg_degree: float = _BASE_DEGREE) -> EnsembleConfig:
    return EnsembleConfig(
        graph_spec=GraphSpec(model=model, node_count=node_count, avg_degree=avg_degree),
        sim_config=_census_sim(),
        n_graphs=n_graphs,
        n_sims_per_graph=n_sims,
        master_seed=derive_seed(master_seed, label),
    )


def _ensemble_summary(result) -> dict:
    return {
        "config": result.config.to_json_dict(),
        "fraction_above_threshold": result.fraction_above_threshold,
        "evaluated_graphs": result.evaluated_graph_count,
        "excluded_graphs": len(result.records) - result.evaluated_graph_count,
        "per_graph": [
            {
                "graph_index": r.graph_index,
                "hub_count": r.hub_count,
                "giant_component_size": r.giant_component_size,
                "unconverged": r.unconverged_count,
                **_summary_row(r.summary),
            }
            for r in result.records
        ],
    }


def _fig3b(profile: Profile, master_seed: int, jobs: int, sink: Sink) -> dict:
    models = {}
    for model in ("er", "ba"):
        cfg = _census_config(model, master_seed, f"fig3b-{model}",
                             profile.n_graphs, profile.n_sims)
        result = run_skewness_ensemble(cfg, jobs=jobs)
        sink(f"fig3b_{model}_records.csv", records_csv(result.records))
        models[model] = _ensemble_summary(result)
    return {"models": models}


def _fig4a(profile: Profile, master_seed: int, jobs: int, sink: Sink) -> dict:
    template = _census_config("er", master_seed, "fig4a",
                              profile.sweep_graphs, profile.sweep_sims)
    sweep = run_density_sweep(DENSITY_DEGREES, _BASE_NODES, template, jobs=jobs)
    rows = []
    for k, result in sweep:
        sink(f"fig4a_k{k:g}_records.csv", records_csv(result.records))
        rows.append({
            "avg_degree": k,
            "fraction_above_threshold": result.fraction_above_threshold,
            "evaluated_graphs": result.evaluated_graph_count,
        })
    return {"node_count": _BASE_NODES, "rows": rows}


def _fig4b(profile: Profile, master_seed: int, jobs: int, sink: Sink) -> dict:
    template = _census_config("er", master_seed, "fig4b",
                              profile.sweep_graphs, profile.sweep_sims)
    sweep = run_size_sweep(profile.size_grid_nodes, profile.size_grid_degrees,
                           template, jobs=jobs)
    cells = []
    for n, k, result in sweep:
        sink(f"fig4b_n{n}_k{k:g}_records.csv", records_csv(result.records))
        cells.append({
            "node_count": n,
            "avg_degree": k,
            "fraction_above_threshold": result.fraction_above_threshold,
            "evaluated_graphs": result.evaluated_graph_count,
        })
    return {"cells": cells}


def _fig5(profile: Profile, master_seed: int, jobs: int, sink: Sink) -> dict:
    models = {}
    for model in ("er", "ba"):
        cfg = _census_config(model, master_seed, f"fig5-{model}",
                             profile.n_graphs, profile.n_sims)
        corr = hub_correlations(run_skewness_ensemble(cfg, jobs=jobs))
        sink(f"fig5_{model}_records.csv", records_csv(corr.ensemble.records))
        models[model] = {
            "corr_hubs_median": corr.corr_hubs_median,
            "corr_hubs_skewness": corr.corr_hubs_skewness,
            "median_pair_count": corr.median_pair_count,
            "skewness_pair_count": corr.skewness_pair_count,
            **_ensemble_summary(corr.ensemble),
        }
    return {"models": models}


EXPERIMENTS = {
    "fig3a": _fig3a,
    "fig3b": _fig3b,
    "fig4a": _fig4a,
    "fig4b": _fig4b,
    "fig5": _fig5,
}


def run_experiment(name: str, profile_name: str, master_seed: int,
                   jobs: int = 1, sink: Sink | None = None) -> dict:
    """Run a named preset; returns its summary dict (see summary_json_bytes)."""
    if name not in EXPERIMENTS:
        raise ValueError(f"unknown experiment {name!r}; expected one of {sorted(EXPERIMENTS)}")
    if profile_name not in PROFILES:
        raise ValueError(f"unknown profile {profile_name!r}; expected one of {sorted(PROFILES)}")
    sink = sink or (lambda _name, _text: None)
    body = EXPERIMENTS[name](PROFILES[profile_name], master_seed, jobs, sink)
    return {
        "schema_version": 1,
        "experiment": name,
        "profile": profile_name,
        "master_seed": master_seed,
        **body,
    }


def _json_default(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    raise TypeError(f"not JSON serializable: {type(obj)!r}")


def summary_json_bytes(summary: dict) -> bytes:
    """Canonical bytes for a summary: sorted keys, no whitespace variance."""
    return (
        json.dumps(summary, sort_keys=True, separators=(",", ":"), default=_json_default)
        + "\n"
    ).encode("utf-8")
