"""Undirected graph container and the ER / BA ensemble generators.

Graphs are stored in CSR form (``indptr``/``indices``) with a cached degree
array; instances are frozen and their arrays marked read-only, so they are
safe to share across threads and simulations.
"""

from dataclasses import dataclass, field
from typing import IO, Literal

import numpy as np

__all__ = [
    "Graph",
    "GraphSpec",
    "generate",
    "generate_er",
    "generate_ba",
    "giant_component",
    "count_hubs",
    "degree_histogram",
    "write_edge_list",
    "read_edge_list",
]


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph in CSR form.

    ``indices[indptr[i]:indptr[i+1]]`` lists node i's neighbors in ascending
    order. Symmetry, no self-loops, and no duplicate neighbors are invariants
    of every constructor here (checked by :meth:`validate`).
    """

    indptr: np.ndarray
    indices: np.ndarray
    degrees: np.ndarray = field(init=False)

    def __post_init__(self):
        indptr = np.ascontiguousarray(self.indptr, dtype=np.int64)
        indices = np.ascontiguousarray(self.indices, dtype=np.int64)
        degrees = indptr[1:] - indptr[:-1]
        for arr in (indptr, indices, degrees):
            arr.setflags(write=False)
        object.__setattr__(self, "indptr", indptr)
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "degrees", degrees)

    @property
    def node_count(self) -> int:
        return self.indptr.shape[0] - 1

    @property
    def edge_count(self) -> int:
        return self.indices.shape[0] // 2

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    def edges(self) -> np.ndarray:
        """All edges as an (E, 2) array with u < v, lexicographically sorted."""
        u = np.repeat(np.arange(self.node_count, dtype=np.int64), self.degrees)
        v = self.indices
        keep = u < v
        return np.column_stack((u[keep], v[keep]))

    @classmethod
    def from_edges(cls, node_count: int, edges) -> "Graph":
        """Build from an iterable of (u, v) pairs (self-loops/duplicates rejected)."""
        e = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        if e.size == 0:
            e = e.reshape(0, 2)
        if e.ndim != 2 or e.shape[1] != 2:
            raise ValueError("edges must be (u, v) pairs")
        if e.size and (e.min() < 0 or e.max() >= node_count):
            raise ValueError("edge endpoint out of range")
        if np.any(e[:, 0] == e[:, 1]):
            raise ValueError("self-loops are not allowed")
        lo = np.minimum(e[:, 0], e[:, 1])
        hi = np.maximum(e[:, 0], e[:, 1])
        key = lo * node_count + hi
        if np.unique(key).size != key.size:
            raise ValueError("duplicate edges are not allowed")
        src = np.concatenate((lo, hi))
        dst = np.concatenate((hi, lo))
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(node_count + 1, dtype=np.int64)
        np.add.at(indptr, src + 1, 1)
        np.cumsum(indptr, out=indptr)
        return cls(indptr=indptr, indices=dst)

    def validate(self) -> None:
        """Check all structural invariants; raises ValueError on violation."""
        n = self.node_count
        if n < 1:
            raise ValueError("graph must have at least one node")
        if self.indptr[0] != 0 or self.indptr[-1] != self.indices.shape[0]:
            raise ValueError("corrupt indptr")
        if np.any(np.diff(self.indptr) < 0):
            raise ValueError("indptr must be nondecreasing")
        if self.indices.size and (self.indices.min() < 0 or self.indices.max() >= n):
            raise ValueError("neighbor index out of range")
        if int(self.degrees.sum()) % 2 != 0:
            raise ValueError("degree sum must be even")
        rows = np.repeat(np.arange(n, dtype=np.int64), self.degrees)
        if np.any(rows == self.indices):
            raise ValueError("self-loop found")
        key = rows * n + self.indices
        if np.unique(key).size != key.size:
            raise ValueError("duplicate neighbor found")
        # Symmetry: the set of (u, v) arcs equals the set of (v, u) arcs.
        rev = np.sort(self.indices * n + rows)
        if not np.array_equal(np.sort(key), rev):
            raise ValueError("adjacency is not symmetric")


_Model = Literal["er", "ba"]


@dataclass(frozen=True)
class GraphSpec:
    """Recipe for one random graph instance; same spec => identical edge set."""

    model: _Model
    node_count: int
    avg_degree: float
    rng_seed: int = 0

    def __post_init__(self):
        if self.model not in ("er", "ba"):
            raise ValueError(f"unknown model {self.model!r}; expected 'er' or 'ba'")
        if self.node_count < 1:
            raise ValueError("node_count must be positive")
        if self.avg_degree <= 0:
            raise ValueError("avg_degree must be positive")
        if self.model == "er" and self.avg_degree > self.node_count - 1:
            raise ValueError(
                f"ER avg_degree {self.avg_degree} exceeds node_count-1 = {self.node_count - 1}"
            )
        if self.model == "ba":
            m = round(self.avg_degree / 2)
            if m < 1:
                raise ValueError("BA requires round(avg_degree / 2) >= 1")
            if self.node_count <= m + 1:
                raise ValueError(
                    f"BA requires node_count > m_attach + 1 = {m + 1}, got {self.node_count}"
                )


def generate(spec: GraphSpec) -> Graph:
    if spec.model == "er":
        return generate_er(spec)
    return generate_ba(spec)


def generate_er(spec: GraphSpec) -> Graph:
    """G(n, p) with p = avg_degree / (n - 1).

    Each unordered pair is an independent Bernoulli draw, consumed in fixed
    lexicographic order (i < j) so the edge set is a pure function of the seed.
    """
    if spec.model != "er":
        raise ValueError("spec.model must be 'er'")
    n = spec.node_count
    if n == 1:
        return Graph.from_edges(1, [])
    p_edge = spec.avg_degree / (n - 1)
    rng = np.random.default_rng(spec.rng_seed)
    n_pairs = n * (n - 1) // 2
    mask = rng.random(n_pairs) < p_edge
    flat = np.flatnonzero(mask).astype(np.int64)
    i = np.arange(n, dtype=np.int64)
    row_offsets = i * (n - 1) - i * (i - 1) // 2  # first flat index of row i
    u = np.searchsorted(row_offsets, flat, side="right") - 1
    v = flat - row_offsets[u] + u + 1
    return Graph.from_edges(n, np.column_stack((u, v)))


def generate_ba(spec: GraphSpec) -> Graph:
    """Preferential attachment from a clique seed of m_attach + 1 nodes.

    Each new node draws m_attach distinct targets proportionally to current
    degree (uniform picks from the edge-endpoint pool, re-drawing on
    collision); the pool is extended only after all targets are chosen, so a
    node never attaches to itself.
    """
    if spec.model != "ba":
        raise ValueError("spec.model must be 'ba'")
    n = spec.node_count
    m = round(spec.avg_degree / 2)
    rng = np.random.default_rng(spec.rng_seed)
    edges: list[tuple[int, int]] = []
    pool: list[int] = []  # one entry per edge endpoint => degree-proportional sampling
    for a in range(m + 1):
        for b in range(a + 1, m + 1):
            edges.append((a, b))
            pool.append(a)
            pool.append(b)
    for new in range(m + 1, n):
        targets: list[int] = []
        seen: set[int] = set()
        while len(targets) < m:
            pick = pool[rng.integers(len(pool))]
            if pick not in seen:
                seen.add(pick)
                targets.append(pick)
        for t in targets:
            edges.append((t, new))
            pool.append(t)
            pool.append(new)
    return Graph.from_edges(n, np.asarray(edges, dtype=np.int64))


def _component_labels(g: Graph) -> tuple[np.ndarray, int]:
    """Label connected components; labels assigned in order of smallest member index."""
    n = g.node_count
    labels = np.full(n, -1, dtype=np.int64)
    current = 0
    for start in range(n):
        if labels[start] != -1:
            continue
        stack = [start]
        labels[start] = current
        while stack:
            node = stack.pop()
            for nb in g.neighbors(node):
                if labels[nb] == -1:
                    labels[nb] = current
                    stack.append(int(nb))
        current += 1
    return labels, current


def giant_component(g: Graph) -> tuple[Graph, np.ndarray]:
    """Induced subgraph on the largest component plus the old->new index map.

    Ties go to the component containing the smallest original index; dropped
    nodes map to -1. Node order is preserved within the component.
    """
    labels, n_comps = _component_labels(g)
    if n_comps == 1:
        return g, np.arange(g.node_count, dtype=np.int64)
    sizes = np.bincount(labels, minlength=n_comps)
    best = int(np.argmax(sizes))  # argmax takes the first max => smallest min-index
    keep = labels == best
    mapping = np.where(keep, np.cumsum(keep) - 1, -1).astype(np.int64)
    old_edges = g.edges()
    kept = keep[old_edges[:, 0]]  # edges never cross components
    sub_edges = mapping[old_edges[kept]]
    return Graph.from_edges(int(sizes[best]), sub_edges), mapping


def count_hubs(g: Graph) -> int:
    """Nodes whose squared degree exceeds the sum of their neighbors' degrees."""
    n = g.node_count
    rows = np.repeat(np.arange(n, dtype=np.int64), g.degrees)
    neighbor_deg_sum = np.bincount(rows, weights=g.degrees[g.indices].astype(np.float64), minlength=n)
    deg = g.degrees.astype(np.float64)
    return int(np.count_nonzero(deg * deg > neighbor_deg_sum))


def degree_histogram(g: Graph) -> dict[int, int]:
    counts = np.bincount(g.degrees)
    return {int(d): int(c) for d, c in enumerate(counts) if c > 0}


def write_edge_list(g: Graph, f: IO[str]) -> None:
    """Text edge list: header line '# nodes=<N>' then one 'u v' pair per line (u < v)."""
    f.write(f"# nodes={g.node_count}\n")
    for u, v in g.edges():
        f.write(f"{u} {v}\n")


def read_edge_list(f: IO[str]) -> Graph:
    header = f.readline().strip()
    if not header.startswith("# nodes="):
        raise ValueError("edge list must start with a '# nodes=<N>' header")
    try:
        n = int(header.removeprefix("# nodes="))
    except ValueError as exc:
        raise ValueError(f"bad node count in header {header!r}") from exc
    edges = []
    for lineno, line in enumerate(f, start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)
