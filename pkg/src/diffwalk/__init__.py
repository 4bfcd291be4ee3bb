"""Deterministic random-walk diffusion on ER/BA graphs.

Walker mass diffuses along edges at a fixed rate until the mass-vs-degree
regression saturates (R^2 >= threshold); the package provides the graph
generators, the dynamics, ensemble experiment harnesses, a CLI, and a
websocket session server for the interactive front-end.
"""

from ._backend import BACKEND
from .dynamics import (
    SimConfig,
    SimResult,
    WalkerState,
    init_state,
    r2_vs_degree,
    run_steps,
    run_to_saturation,
    stationary_prediction,
    step,
)
from .graphs import (
    Graph,
    GraphSpec,
    count_hubs,
    degree_histogram,
    generate,
    generate_ba,
    generate_er,
    giant_component,
    read_edge_list,
    write_edge_list,
)
from .stats import (
    DegenerateInputError,
    RegressionFit,
    SampleSummary,
    ols_fit,
    pearson,
    percentile,
    skewness,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    "Graph",
    "GraphSpec",
    "generate",
    "generate_er",
    "generate_ba",
    "giant_component",
    "count_hubs",
    "degree_histogram",
    "read_edge_list",
    "write_edge_list",
    "SimConfig",
    "SimResult",
    "WalkerState",
    "init_state",
    "step",
    "run_steps",
    "run_to_saturation",
    "stationary_prediction",
    "r2_vs_degree",
    "DegenerateInputError",
    "RegressionFit",
    "SampleSummary",
    "ols_fit",
    "pearson",
    "percentile",
    "skewness",
    "summarize",
]
