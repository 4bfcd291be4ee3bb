import numpy as np
import pytest

from diffwalk.graphs import Graph, GraphSpec, generate, giant_component


def random_small_graph(rng: np.random.Generator, max_nodes: int = 50) -> Graph:
    """A random connected graph (giant component of an ER or BA draw)."""
    if rng.random() < 0.5:
        n = int(rng.integers(5, max_nodes + 1))
        spec = GraphSpec("er", n, float(rng.uniform(2.0, min(8.0, n - 1))),
                         rng_seed=int(rng.integers(2**32)))
    else:
        n = int(rng.integers(6, max_nodes + 1))
        spec = GraphSpec("ba", n, 4.0, rng_seed=int(rng.integers(2**32)))
    g, _ = giant_component(generate(spec))
    return g


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)
