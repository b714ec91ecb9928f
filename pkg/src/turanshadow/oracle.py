"""Exact k-clique counting.

The main counter walks the degeneracy ordering and recursively intersects
out-neighborhoods, the standard orientation-based search. A brute-force
enumerator over all k-subsets is kept as an independent second oracle for
testing the tester.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass

import numpy as np

from .graph import Graph, degeneracy_order, induced_adjacency_matrix

UINT64_MAX = 2**64 - 1

NAIVE_GUARD = 100_000_000


class CountOverflowError(OverflowError):
    """Clique count exceeds the unsigned 64-bit range."""


class TimeBudgetExceeded(RuntimeError):
    """Exact counting gave up after the configured soft time budget."""


@dataclass(frozen=True)
class ExactCount:
    k: int
    count: int
    elapsed: float


def _check_uint64(count: int) -> int:
    if count > UINT64_MAX:
        raise CountOverflowError(f"clique count {count} exceeds 64-bit range")
    return count


def _count_rec(outs: list[set], cand: set, j: int) -> int:
    c = len(cand)
    if j > c:
        return 0
    if j == 1:
        return c
    if j == 2:
        return sum(len(outs[u] & cand) for u in cand)
    inters = [outs[u] & cand for u in cand]
    e = sum(len(x) for x in inters)
    if 2 * e == c * (c - 1):
        # candidate set induces a clique: all j-subsets count
        return math.comb(c, j)
    return sum(_count_rec(outs, x, j - 1) for x in inters if len(x) >= j - 1)


def exact_kclique_count(g: Graph, k: int,
                        time_budget: float | None = None) -> ExactCount:
    """Exact number of k-cliques of g.

    k=1 and k=2 are the vertex and edge counts. For k >= 3 the count is the
    sum, over vertices in degeneracy order, of (k-1)-cliques found inside the
    out-neighborhood by repeated intersection. Raises CountOverflowError if
    the result does not fit in 64 bits, and TimeBudgetExceeded if a soft
    `time_budget` (seconds) runs out mid-count.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    start = time.perf_counter()
    n = g.vertex_count
    if k == 1:
        count = n
    elif k == 2:
        count = g.edge_count
    else:
        order = degeneracy_order(g)
        pos = order.position
        outs: list[set] = [set() for _ in range(n)]
        for v in range(n):
            nbrs = g.neighbors(v)
            if nbrs.size:
                outs[v] = set(nbrs[pos[nbrs] > pos[v]].tolist())
        count = 0
        for v in range(n):
            if time_budget is not None and (v & 0xFF) == 0:
                if time.perf_counter() - start > time_budget:
                    raise TimeBudgetExceeded(
                        f"exact count exceeded {time_budget}s time budget")
            if len(outs[v]) >= k - 1:
                count += _count_rec(outs, outs[v], k - 1)
    _check_uint64(count)
    return ExactCount(k, count, time.perf_counter() - start)


def naive_kclique_count(g: Graph, k: int) -> ExactCount:
    """Enumerate every k-subset and test all pairs. Testing oracle only.

    Refuses instances with C(n, k) above NAIVE_GUARD.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = g.vertex_count
    if math.comb(n, k) > NAIVE_GUARD:
        raise ValueError(
            f"refusing naive enumeration: C({n},{k}) exceeds {NAIVE_GUARD}")
    start = time.perf_counter()
    if k == 1:
        return ExactCount(k, n, time.perf_counter() - start)
    adj = induced_adjacency_matrix(g, np.arange(n, dtype=np.int64))
    count = 0
    combos = itertools.combinations(range(n), k)
    while True:
        chunk = list(itertools.islice(combos, 200_000))
        if not chunk:
            break
        arr = np.asarray(chunk, dtype=np.int64)
        ok = np.ones(len(arr), dtype=bool)
        for a in range(k):
            col_a = arr[:, a]
            for b in range(a + 1, k):
                ok &= adj[col_a, arr[:, b]]
        count += int(np.count_nonzero(ok))
    _check_uint64(count)
    return ExactCount(k, count, time.perf_counter() - start)
