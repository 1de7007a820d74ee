"""Multi-source shortest paths and the group shortest-path DAG."""

from __future__ import annotations

import numpy as np

from .backend import kernels as K


def _sources_array(S, n):
    src = np.unique(np.asarray(list(S), dtype=np.int64))
    if len(src) == 0:
        raise ValueError("source set must be non-empty")
    if src[0] < 0 or src[-1] >= n:
        raise ValueError("source vertex out of range")
    return src


def multi_source_sssp(g, S):
    """Exact distances from the vertex set S to every vertex.

    Returns int64 hop counts for unweighted graphs (BFS) and float64
    weight sums otherwise (Dijkstra). Unreached vertices get -1 / inf.
    """
    src = _sources_array(S, g.n)
    order = np.empty(g.n, dtype=np.int64)
    if g.weighted:
        dist = np.empty(g.n, dtype=np.float64)
        K.dijkstra_multi(g.indptr, g.nbrs, g.wgts, src, dist, order)
    else:
        dist = np.empty(g.n, dtype=np.int64)
        K.bfs_multi(g.indptr, g.nbrs, src, dist, order)
    return dist


class GroupDag:
    """Shortest-path DAG of a multi-source search from the group S.

    Contains every tight edge x -> y with dist(x) + w(x, y) = dist(y);
    all group members are sources at distance zero.
    """

    def __init__(self, graph, sources, dist):
        self.graph = graph
        self.sources = sources
        self.dist = dist
        self._edges = None

    @property
    def n(self):
        return self.graph.n

    def successors(self, x):
        """DAG successors of x (neighbors one tight step farther)."""
        g = self.graph
        lo, hi = g.indptr[x], g.indptr[x + 1]
        nbrs = g.nbrs[lo:hi]
        tight = self.dist[x] + g.wgts[lo:hi] == self.dist[nbrs]
        return nbrs[tight]

    def edges(self):
        """All tight edges as an (E, 2) int64 array of (x, y) rows."""
        if self._edges is None:
            g = self.graph
            deg = np.diff(g.indptr)
            src = np.repeat(np.arange(g.n, dtype=np.int64), deg)
            tight = self.dist[src] + g.wgts == self.dist[g.nbrs]
            self._edges = np.stack(
                [src[tight], g.nbrs[tight].astype(np.int64)], axis=1
            )
        return self._edges


def build_group_dag(g, S):
    """Build the full shortest-path DAG for the source set S."""
    src = _sources_array(S, g.n)
    dist = multi_source_sssp(g, src)
    return GroupDag(g, src, dist)
