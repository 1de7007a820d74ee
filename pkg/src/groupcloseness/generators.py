"""Small random-graph generators for tests and benchmarks."""

from __future__ import annotations

import numpy as np

from .graph import Graph, is_connected, largest_connected_component


def _with_weights(n, us, vs, rng, weighted, max_weight):
    if not weighted:
        return Graph.from_edges(n, us, vs, weighted=False)
    ws = rng.integers(1, max_weight + 1, size=len(us)).astype(np.float64)
    return Graph.from_edges(n, us, vs, ws, weighted=True)


def gnp(n, p, seed=0, weighted=False, max_weight=10):
    """Erdos-Renyi G(n, p)."""
    if n > 20000:
        raise ValueError("gnp generator is dense-sampled; use n <= 20000")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    mask = rng.random(len(iu)) < p
    return _with_weights(n, iu[mask], ju[mask], rng, weighted, max_weight)


def connected_gnp(n, p, seed=0, weighted=False, max_weight=10):
    """G(n, p) resampled until connected (up to 200 attempts)."""
    for attempt in range(200):
        g = gnp(n, p, seed=seed + 1000003 * attempt, weighted=weighted,
                max_weight=max_weight)
        if g.n == n and g.m > 0 and is_connected(g):
            return g
    raise RuntimeError(f"no connected G({n},{p}) sample found")


def grid(rows, cols, seed=0, weighted=False, max_weight=10):
    """rows x cols lattice; vertex (i, j) has id i*cols + j."""
    rng = np.random.default_rng(seed)
    ids = np.arange(rows * cols).reshape(rows, cols)
    us = np.concatenate([ids[:, :-1].ravel(), ids[:-1, :].ravel()])
    vs = np.concatenate([ids[:, 1:].ravel(), ids[1:, :].ravel()])
    return _with_weights(rows * cols, us, vs, rng, weighted, max_weight)


def preferential_attachment(n, attach, seed=0, weighted=False, max_weight=10):
    """Barabasi-Albert graph: each new vertex attaches to ``attach``
    distinct existing vertices sampled proportionally to degree."""
    if attach < 1 or attach >= n:
        raise ValueError("attach must be in [1, n)")
    rng = np.random.default_rng(seed)
    us, vs = [], []
    endpoints = []  # one entry per edge endpoint: degree-weighted urn
    for v in range(attach):
        endpoints.append(v)
    for v in range(attach, n):
        targets = set()
        while len(targets) < min(attach, v):
            pick = int(endpoints[rng.integers(len(endpoints))]) if v > attach \
                else int(rng.integers(v))
            targets.add(pick)
        for t in targets:
            us.append(v)
            vs.append(t)
            endpoints.append(v)
            endpoints.append(t)
    return _with_weights(n, np.asarray(us), np.asarray(vs), rng, weighted, max_weight)


def road_like(rows, cols, drop=0.2, seed=0, weighted=False, max_weight=10):
    """Grid with a fraction of edges removed, largest component kept:
    a sparse mesh resembling a road network."""
    rng = np.random.default_rng(seed)
    g = grid(rows, cols, seed=seed, weighted=weighted, max_weight=max_weight)
    deg = np.diff(g.indptr)
    src = np.repeat(np.arange(g.n, dtype=np.int64), deg)
    fwd = src < g.nbrs
    us, vs, ws = src[fwd], g.nbrs[fwd].astype(np.int64), g.wgts[fwd]
    keep = rng.random(len(us)) >= drop
    pruned = Graph.from_edges(g.n, us[keep], vs[keep],
                              ws[keep] if weighted else None, weighted=weighted)
    sub, _ = largest_connected_component(pruned)
    return sub
