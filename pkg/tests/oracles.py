"""Independent reference implementations used to check the package.

Everything here recomputes results from first principles (dense matrices,
double loops, set-based BFS) so it shares no code path with the library.
"""

import numpy as np


def dense_adjacency(g) -> np.ndarray:
    n = g.node_count
    a = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in g.neighbors(i):
            a[i, int(j)] = 1.0
    return a


def dense_transition_matrix(g, p: float) -> np.ndarray:
    """Column-stochastic M with M[i, j] = (1-p) δij + p A[i, j] / deg(j)."""
    a = dense_adjacency(g)
    deg = a.sum(axis=0)
    m = p * a / deg
    np.fill_diagonal(m, np.diag(m) + (1.0 - p))
    return m


def dense_walk(g, masses0: np.ndarray, p: float, steps: int) -> np.ndarray:
    m = dense_transition_matrix(g, p)
    x = np.asarray(masses0, dtype=np.float64).copy()
    for _ in range(steps):
        x = m @ x
    return x


def naive_hub_count(g) -> int:
    count = 0
    for v in range(g.node_count):
        neighbor_sum = sum(int(g.degrees[int(j)]) for j in g.neighbors(v))
        if int(g.degrees[v]) ** 2 > neighbor_sum:
            count += 1
    return count


def bfs_component(g, start: int) -> set[int]:
    seen = {start}
    frontier = [start]
    while frontier:
        node = frontier.pop()
        for j in g.neighbors(node):
            j = int(j)
            if j not in seen:
                seen.add(j)
                frontier.append(j)
    return seen


def all_components(g) -> list[set[int]]:
    remaining = set(range(g.node_count))
    comps = []
    while remaining:
        comp = bfs_component(g, min(remaining))
        comps.append(comp)
        remaining -= comp
    return comps


def is_connected(g) -> bool:
    return g.node_count == 0 or len(bfs_component(g, 0)) == g.node_count


def ols_r_squared(xs, ys) -> float:
    """R^2 via an explicit predicted-vs-total sum-of-squares computation."""
    slope, intercept = np.polyfit(np.asarray(xs, float), np.asarray(ys, float), 1)
    ys = np.asarray(ys, float)
    pred = slope * np.asarray(xs, float) + intercept
    ss_res = float(((ys - pred) ** 2).sum())
    ss_tot = float(((ys - ys.mean()) ** 2).sum())
    return 1.0 - ss_res / ss_tot
