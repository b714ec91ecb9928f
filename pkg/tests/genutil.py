"""Deterministic graph generators used as test fixtures."""

import numpy as np

from turanshadow.graph import Graph


def er_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) with a fixed seed."""
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, 1)
    mask = rng.random(iu.size) < p
    return Graph.from_edges(np.stack([iu[mask], ju[mask]], axis=1),
                            num_vertices=n)


def complete_graph(n: int) -> Graph:
    iu, ju = np.triu_indices(n, 1)
    return Graph.from_edges(np.stack([iu, ju], axis=1), num_vertices=n)


def cycle_graph(n: int) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph.from_edges(edges, num_vertices=n)


def path_graph(n: int) -> Graph:
    edges = [(i, i + 1) for i in range(n - 1)]
    return Graph.from_edges(edges, num_vertices=n)


def star_graph(n: int) -> Graph:
    """Center 0 plus n-1 leaves."""
    edges = [(0, i) for i in range(1, n)]
    return Graph.from_edges(edges, num_vertices=n)


def turan_graph(n: int, r: int) -> Graph:
    """Complete r-partite graph with balanced parts (sizes differ by <= 1)."""
    part = [i % r for i in range(n)]
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if part[i] != part[j]]
    return Graph.from_edges(edges, num_vertices=n)
