"""Reachability-set sizes in the group DAG.

The local-search algorithms rank candidate vertices by |D_v|, the number
of vertices reachable from v in the shortest-path DAG. Computing all sizes
exactly amounts to a transitive closure, so they are approximated with a
random-minima sketch: every vertex draws s uniform integers, each vertex
accumulates the element-wise minimum over its reachability set in one
DAG traversal, and the minima are inverted into a size estimate. The exact
closure is kept as a small-scale oracle for tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import kernels as K

EXACT_REACH_CAP = 5000


@dataclass
class ReachEstimate:
    """Per-vertex estimates of |D_v| plus the sketch parameters."""

    est: np.ndarray
    samples: int
    width: int


def descending_dist_order(dist):
    # Non-increasing distance, ties by higher vertex id: a valid reverse
    # topological order of the DAG since tight edges strictly increase dist.
    return np.ascontiguousarray(np.argsort(dist, kind="stable")[::-1])


def sketch_scores(g, dist, order, samples, width, rng):
    """Run the sketch on an implicit DAG given by (graph, dist).

    Returns the float64 estimate array; used directly by the search loops
    to avoid materializing a GroupDag every iteration.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if width not in (8, 16, 32):
        raise ValueError("width must be 8, 16, or 32")
    n = g.n
    vals = rng.integers(0, 1 << width, size=(n, samples), dtype=np.uint32)
    K.sketch_propagate(g.indptr, g.nbrs, g.wgts, dist, order, vals)
    sums = vals.sum(axis=1, dtype=np.int64)
    est = (samples * float(1 << width)) / (sums + samples) - 1.0
    np.maximum(est, 1.0, out=est)
    return est


def estimate_reach_sizes(dag, samples=16, width=16, seed=0):
    """Estimate |D_v| for every vertex of the DAG simultaneously.

    Draws ``samples`` uniform ``width``-bit integers per vertex, propagates
    per-lane minima over the DAG in one traversal (all lanes carried
    together), and inverts the accumulated minima:

        est(v) = samples * 2**width / (sum_i m_i(v) + samples) - 1

    clamped below at 1. Deterministic for a fixed seed.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    dist = np.asarray(dag.dist, dtype=np.float64)
    order = descending_dist_order(dist)
    est = sketch_scores(dag.graph, dist, order, samples, width, rng)
    return ReachEstimate(est=est, samples=samples, width=width)


def sketch_minima(dag, samples=16, width=16, seed=0):
    """Raw per-vertex, per-lane minima of the sketch (test introspection)."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    g = dag.graph
    dist = np.asarray(dag.dist, dtype=np.float64)
    order = descending_dist_order(dist)
    vals = rng.integers(0, 1 << width, size=(g.n, samples), dtype=np.uint32)
    K.sketch_propagate(g.indptr, g.nbrs, g.wgts, dist, order, vals)
    return vals


def exact_reach_sizes(dag):
    """Exact |D_v| for every vertex via a bit-parallel closure.

    Test oracle only; refuses DAGs above EXACT_REACH_CAP vertices.
    """
    n = dag.n
    if n > EXACT_REACH_CAP:
        raise ValueError(f"exact reach oracle capped at {EXACT_REACH_CAP} vertices")
    dist = np.asarray(dag.dist, dtype=np.float64)
    order = descending_dist_order(dist)
    closure = [0] * n
    sizes = np.zeros(n, dtype=np.int64)
    for x in order:
        bits = 1 << int(x)
        for y in dag.successors(int(x)):
            bits |= closure[y]
        closure[x] = bits
        sizes[x] = bits.bit_count()
    return sizes
