"""Greedy baseline: repeatedly add the vertex with the largest marginal
farness decrease.

The first iteration evaluates every singleton group with one full
traversal per vertex (the dominant cost). Later iterations maintain
dist(S, .) and evaluate each candidate with a traversal pruned at vertices
the candidate cannot improve.
"""

from __future__ import annotations

import numpy as np

from .backend import kernels as K


def greedy_group(g, k):
    """Greedy group of size k; returns ``(group, trace)`` where group is in
    addition order and trace[i] is the farness after the (i+1)-th addition.
    Ties go to the lowest id."""
    n = g.n
    if not 1 <= k < n:
        raise ValueError("k out of range")
    single = K.singleton_farness(g.indptr, g.nbrs, g.wgts, g.weighted)
    v0 = int(np.argmin(single))
    f = float(single[v0])
    group = [v0]
    trace = [f]
    in_group = np.zeros(n, dtype=np.uint8)
    in_group[v0] = 1
    dist = np.empty(n, dtype=np.float64)
    order = np.empty(n, dtype=np.int64)
    src = np.array([v0], dtype=np.int64)
    if g.weighted:
        K.dijkstra_multi(g.indptr, g.nbrs, g.wgts, src, dist, order)
    else:
        hops = np.empty(n, dtype=np.int64)
        K.bfs_multi(g.indptr, g.nbrs, src, hops, order)
        dist[:] = hops
    for _ in range(1, k):
        v, _delta = K.greedy_best_addition(
            g.indptr, g.nbrs, g.wgts, g.weighted, dist, in_group
        )
        delta = K.greedy_add_update(g.indptr, g.nbrs, g.wgts, g.weighted, dist, v)
        f -= delta
        group.append(int(v))
        trace.append(f)
        in_group[v] = 1
    return group, trace
