"""Weighted-sampling clique estimator over a shadow.

Each shadow entry (S, ell) gets weight C(|S|, ell). A trial draws an entry
from the weight distribution via an alias table, draws a uniform ell-subset
of it, and tests cliqueness; the success fraction times the total weight is
an unbiased estimate of the clique count covered by the sampled entries.
Entries with ell <= 2 carry no density guarantee and are counted exactly
instead of sampled.

All per-trial randomness is pregenerated from (seed, trial index), so the
result is independent of processing order and thread count.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .graph import Graph, induced_adjacency_matrix
from .shadow import MAX_K, TuranShadow, shadow_finder

DEFAULT_SAMPLES = 50_000

_AMAT_CACHE_LIMIT = 65_536


def f_of(ell: int) -> float:
    """ell**(ell-2) / ell!, by iterated product to stay in double range.

    Strictly increasing over the supported range 3..MAX_K.
    """
    if not 3 <= ell <= MAX_K:
        raise ValueError(f"ell must be in [3, {MAX_K}]")
    acc = 1.0
    for i in range(1, ell + 1):
        acc *= ell / i
    return acc / (ell * ell)


def gamma_of(sh: TuranShadow) -> float:
    """Guaranteed clique-density floor of the sampled part of a shadow.

    1 / max over entries with ell >= 3 of f(ell) * |S|**2; 1 when no such
    entries exist (the sampling phase is then vacuous).
    """
    worst = 0.0
    for e in sh.entries:
        if e.ell >= 3:
            val = f_of(e.ell) * e.size * e.size
            if val > worst:
                worst = val
    return 1.0 / worst if worst > 0.0 else 1.0


def required_samples(gamma: float, eps: float, delta: float) -> int:
    """Trial count sufficient for (1 + eps)-accuracy with confidence 1 - delta.

    ceil((20 / (gamma * eps^2)) * ln(1/delta)).
    """
    if not 0.0 < gamma <= 1.0:
        raise ValueError("gamma must be in (0, 1]")
    if eps <= 0.0:
        raise ValueError("eps must be positive")
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must be in (0, 1)")
    return math.ceil(20.0 / (gamma * eps * eps) * math.log(1.0 / delta))


@dataclass(eq=False)
class SamplerState:
    """Frozen draw structure for one shadow: weights, alias table, offset.

    vertex_sets/ells/sizes describe the sampled entries (ell >= 3);
    exact_offset is the exact clique count contributed by ell <= 2 entries.
    """

    vertex_sets: list[np.ndarray]
    ells: np.ndarray
    sizes: np.ndarray
    weights: np.ndarray
    total_weight: float
    alias_prob: np.ndarray
    alias_index: np.ndarray
    exact_offset: int
    max_ell: int

    def __post_init__(self):
        self._amat_cache: dict[int, np.ndarray] = {}

    @property
    def entry_count(self) -> int:
        return len(self.vertex_sets)

    def _local_adjacency(self, g: Graph, idx: int) -> np.ndarray:
        # idempotent insert, so concurrent trial chunks may race harmlessly
        mat = self._amat_cache.get(idx)
        if mat is None:
            mat = induced_adjacency_matrix(g, self.vertex_sets[idx])
            if len(self._amat_cache) < _AMAT_CACHE_LIMIT:
                self._amat_cache[idx] = mat
        return mat


def _build_alias(weights: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vose alias table: O(1) draws with probabilities weights / sum."""
    n = len(weights)
    prob = np.empty(n, dtype=np.float64)
    alias = np.zeros(n, dtype=np.int64)
    scaled = weights * (n / weights.sum())
    small = [i for i in range(n) if scaled[i] < 1.0]
    large = [i for i in range(n) if scaled[i] >= 1.0]
    scaled = scaled.tolist()
    while small and large:
        s = small.pop()
        l = large.pop()
        prob[s] = scaled[s]
        alias[s] = l
        scaled[l] = scaled[l] - (1.0 - scaled[s])
        if scaled[l] < 1.0:
            small.append(l)
        else:
            large.append(l)
    for i in large:
        prob[i] = 1.0
    for i in small:
        prob[i] = 1.0  # numerical leftovers; their alias is themselves
    return prob, alias


def build_sampler(sh: TuranShadow, g: Graph) -> SamplerState:
    """Split a shadow into sampled entries plus an exactly-counted offset.

    Weights are C(|S|, ell) as doubles. Entries with ell = 2 contribute
    their induced edge count to the offset (ell = 1 would contribute |S|);
    only ell >= 3 entries enter the alias table.
    """
    vertex_sets: list[np.ndarray] = []
    ells: list[int] = []
    weights: list[float] = []
    offset = 0
    for e in sh.entries:
        if e.ell >= 3:
            vertex_sets.append(e.vertices)
            ells.append(e.ell)
            weights.append(float(math.comb(e.size, e.ell)))
        elif e.ell == 2:
            offset += e.edges
        else:
            offset += e.size
    w = np.asarray(weights, dtype=np.float64)
    if w.size:
        prob, alias = _build_alias(w)
        total = float(w.sum())
    else:
        prob = np.empty(0, dtype=np.float64)
        alias = np.empty(0, dtype=np.int64)
        total = 0.0
    return SamplerState(
        vertex_sets=vertex_sets,
        ells=np.asarray(ells, dtype=np.int64),
        sizes=np.asarray([v.size for v in vertex_sets], dtype=np.int64),
        weights=w,
        total_weight=total,
        alias_prob=prob,
        alias_index=alias,
        exact_offset=offset,
        max_ell=max(ells, default=0),
    )


def _run_chunk(st: SamplerState, g: Graph, chosen: np.ndarray,
               keys: np.ndarray, lo: int, hi: int) -> int:
    """Process trials [lo, hi): subset draws and clique tests, grouped by entry."""
    ch = chosen[lo:hi]
    order = np.argsort(ch, kind="stable") + lo
    sorted_ch = chosen[order]
    bounds = np.flatnonzero(np.diff(sorted_ch)) + 1
    starts = np.concatenate([[0], bounds])
    ends = np.concatenate([bounds, [len(sorted_ch)]])
    successes = 0
    for a, z in zip(starts, ends):
        idx = int(sorted_ch[a])
        rows = order[a:z]
        s = int(st.sizes[idx])
        ell = int(st.ells[idx])
        amat = st._local_adjacency(g, idx)
        c = len(rows)
        # partial Fisher-Yates on index arrays, one uniform per step
        perm = np.broadcast_to(np.arange(s, dtype=np.int64), (c, s)).copy()
        rowsel = np.arange(c)
        for i in range(ell):
            j = i + (keys[rows, i] * (s - i)).astype(np.int64)
            pi = perm[rowsel, i].copy()
            perm[rowsel, i] = perm[rowsel, j]
            perm[rowsel, j] = pi
        picks = perm[:, :ell]
        ok = np.ones(c, dtype=bool)
        for a2 in range(ell - 1):
            col = picks[:, a2]
            for b2 in range(a2 + 1, ell):
                ok &= amat[col, picks[:, b2]]
            if not ok.any():
                break
        successes += int(np.count_nonzero(ok))
    return successes


def run_trials(st: SamplerState, g: Graph, t: int, seed: int,
               threads: int = 1) -> tuple[int, int]:
    """Run t Bernoulli trials; returns (successes, trials run).

    Skips (returning (0, 0)) when the sampler has no sampled entries. Each
    trial's draws come from fixed positions in arrays pregenerated from
    `seed`, so the outcome is a pure function of (seed, trial index) and the
    total is identical for any thread count.
    """
    if st.entry_count == 0:
        return 0, 0
    if t < 1:
        raise ValueError("t must be >= 1")
    rng = np.random.default_rng(seed)
    raw_idx = rng.integers(0, st.entry_count, size=t)
    raw_u = rng.random(t)
    keys = rng.random((t, st.max_ell))
    chosen = np.where(raw_u < st.alias_prob[raw_idx], raw_idx,
                      st.alias_index[raw_idx])
    if threads <= 1 or t < 2 * threads:
        return _run_chunk(st, g, chosen, keys, 0, t), t
    cuts = np.linspace(0, t, threads + 1, dtype=np.int64)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(lambda i: _run_chunk(st, g, chosen, keys,
                                              int(cuts[i]), int(cuts[i + 1])),
                         range(threads))
    return sum(parts), t


def estimate_from_trials(st: SamplerState, successes: int, t: int) -> float:
    """(successes / t) * total_weight + exact_offset."""
    if st.entry_count == 0:
        return float(st.exact_offset)
    if t < 1:
        raise ValueError("t must be >= 1 when sampled entries exist")
    return successes / t * st.total_weight + st.exact_offset


@dataclass(frozen=True)
class EstimateReport:
    """Estimate plus the diagnostics needed to judge it."""

    k: int
    estimate: float
    samples_run: int
    successes: int
    success_ratio: float
    gamma: float
    total_weight: float
    exact_offset: int
    shadow_set_count: int
    representation_size: int
    time_shadow: float
    time_sample: float
    seed: int


def turan_shadow_count(g: Graph, k: int, *, samples: int | None = None,
                       eps: float | None = None, delta: float | None = None,
                       seed: int = 0, threads: int = 1) -> EstimateReport:
    """End-to-end k-clique estimate: build the shadow, then sample it.

    k = 1 and k = 2 return the exact vertex and edge counts without building
    a shadow. For k >= 3 the trial count is `samples` (default 50000), or
    derived from (eps, delta) when both are given.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if (eps is None) != (delta is None):
        raise ValueError("eps and delta must be given together")
    if eps is not None and samples is not None:
        raise ValueError("choose either a fixed sample count or (eps, delta)")
    if k <= 2:
        exact = g.vertex_count if k == 1 else g.edge_count
        return EstimateReport(
            k=k, estimate=float(exact), samples_run=0, successes=0,
            success_ratio=0.0, gamma=1.0, total_weight=0.0,
            exact_offset=exact, shadow_set_count=0, representation_size=0,
            time_shadow=0.0, time_sample=0.0, seed=seed)
    t0 = time.perf_counter()
    sh = shadow_finder(g, k)
    st = build_sampler(sh, g)
    gamma = gamma_of(sh)
    t1 = time.perf_counter()
    if eps is not None:
        t = required_samples(gamma, eps, delta)
    else:
        t = samples if samples is not None else DEFAULT_SAMPLES
    successes, t_run = run_trials(st, g, t, seed, threads=threads)
    estimate = estimate_from_trials(st, successes, t_run)
    t2 = time.perf_counter()
    return EstimateReport(
        k=k,
        estimate=estimate,
        samples_run=t_run,
        successes=successes,
        success_ratio=successes / t_run if t_run else 0.0,
        gamma=gamma,
        total_weight=st.total_weight,
        exact_offset=st.exact_offset,
        shadow_set_count=len(sh.entries),
        representation_size=sh.representation_size,
        time_shadow=t1 - t0,
        time_sample=t2 - t1,
        seed=seed,
    )
