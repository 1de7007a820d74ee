"""Graph loading, validation, and canonicalization.

Graphs are undirected, stored in compressed sparse row form with 0-based
dense vertex ids. Edge weights are strictly positive; unweighted graphs
carry weight 1.0 on every edge. All search algorithms in this package
expect the largest connected component, extracted via
:func:`largest_connected_component`.
"""

from __future__ import annotations

import io

import numpy as np


class GraphParseError(ValueError):
    """Raised when an input file cannot be parsed into a valid graph."""


class Graph:
    """Immutable undirected graph in CSR form.

    Attributes
    ----------
    indptr : int64 array of length n+1
    nbrs : int32 array of length 2m, sorted within each vertex's slice
    wgts : float64 array of length 2m, all 1.0 when ``weighted`` is False
    weighted : bool
    """

    __slots__ = ("indptr", "nbrs", "wgts", "weighted")

    def __init__(self, indptr, nbrs, wgts, weighted):
        self.indptr = indptr
        self.nbrs = nbrs
        self.wgts = wgts
        self.weighted = weighted

    @property
    def n(self):
        return len(self.indptr) - 1

    @property
    def m(self):
        return len(self.nbrs) // 2

    def neighbors(self, v):
        return self.nbrs[self.indptr[v]:self.indptr[v + 1]]

    def weights(self, v):
        return self.wgts[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v):
        return int(self.indptr[v + 1] - self.indptr[v])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.weighted == other.weighted
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.nbrs, other.nbrs)
            and np.array_equal(self.wgts, other.wgts)
        )

    def __repr__(self):
        kind = "weighted" if self.weighted else "unweighted"
        return f"Graph(n={self.n}, m={self.m}, {kind})"

    @classmethod
    def from_edges(cls, n, us, vs, ws=None, weighted=False):
        """Build a canonical graph from edge endpoint arrays.

        Self-loops are dropped, parallel edges collapse to the minimum
        weight, and the adjacency of each vertex is sorted by neighbor id.
        """
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        if ws is None:
            ws = np.ones(len(us), dtype=np.float64)
        else:
            ws = np.asarray(ws, dtype=np.float64)
        if len(us) and (us.min() < 0 or vs.min() < 0 or max(us.max(), vs.max()) >= n):
            raise ValueError("vertex id out of range")
        if np.any(ws <= 0):
            raise ValueError("edge weights must be strictly positive")
        if not weighted and np.any(ws != 1.0):
            raise ValueError("unweighted graph requires unit weights")

        keep = us != vs
        us, vs, ws = us[keep], vs[keep], ws[keep]
        src = np.concatenate([us, vs])
        dst = np.concatenate([vs, us])
        w2 = np.concatenate([ws, ws])
        # Sort by (src, dst, w); the first entry of each duplicate run has
        # the minimum weight.
        order = np.lexsort((w2, dst, src))
        src, dst, w2 = src[order], dst[order], w2[order]
        if len(src):
            first = np.empty(len(src), dtype=bool)
            first[0] = True
            first[1:] = (src[1:] != src[:-1]) | (dst[1:] != dst[:-1])
            src, dst, w2 = src[first], dst[first], w2[first]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls(indptr, dst.astype(np.int32), w2, weighted)


def _as_lines(text):
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if isinstance(text, io.IOBase):
        text = text.read()
        if isinstance(text, bytes):
            text = text.decode("utf-8")
    return text.splitlines()


def parse_dimacs_gr(text):
    """Parse a 9th DIMACS Challenge ``.gr`` file into a Graph.

    Accepts ``c`` comment lines, one ``p sp <n> <m>`` header, and
    ``a <u> <v> <w>`` arc lines with 1-based ids. Arcs are symmetrized and
    duplicates keep the minimum weight. The result is always flagged
    weighted, even if all weights are 1.
    """
    n = None
    us, vs, ws = [], [], []
    for lineno, raw in enumerate(_as_lines(text), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphParseError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "sp":
                raise GraphParseError(f"line {lineno}: malformed header {line!r}")
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise GraphParseError(f"line {lineno}: malformed header {line!r}") from None
            if n <= 0:
                raise GraphParseError(f"line {lineno}: non-positive vertex count")
        elif parts[0] == "a":
            if n is None:
                raise GraphParseError(f"line {lineno}: arc before header")
            if len(parts) != 4:
                raise GraphParseError(f"line {lineno}: malformed arc {line!r}")
            try:
                u, v, w = int(parts[1]), int(parts[2]), float(parts[3])
            except ValueError:
                raise GraphParseError(f"line {lineno}: malformed arc {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"line {lineno}: vertex id out of range [1,{n}]")
            if w <= 0:
                raise GraphParseError(f"line {lineno}: non-positive weight {w}")
            us.append(u - 1)
            vs.append(v - 1)
            ws.append(w)
        else:
            raise GraphParseError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise GraphParseError("missing 'p sp' header")
    return Graph.from_edges(n, us, vs, ws, weighted=True)


def parse_edge_list(text, weighted=False):
    """Parse a whitespace-separated edge list with 0-based ids.

    Lines are ``u v`` (unweighted) or ``u v w`` (weighted); ``%`` and ``#``
    start comment lines. Self-loops are dropped, duplicates keep the
    minimum weight.
    """
    us, vs, ws = [], [], []
    max_id = -1
    want = 3 if weighted else 2
    for lineno, raw in enumerate(_as_lines(text), start=1):
        line = raw.strip()
        if not line or line[0] in "%#":
            continue
        parts = line.split()
        if len(parts) != want:
            raise GraphParseError(
                f"line {lineno}: expected {want} tokens, got {len(parts)}"
            )
        try:
            u, v = int(parts[0]), int(parts[1])
            w = float(parts[2]) if weighted else 1.0
        except ValueError:
            raise GraphParseError(f"line {lineno}: malformed edge {line!r}") from None
        if u < 0 or v < 0:
            raise GraphParseError(f"line {lineno}: negative vertex id")
        if w <= 0:
            raise GraphParseError(f"line {lineno}: non-positive weight {w}")
        us.append(u)
        vs.append(v)
        ws.append(w)
        max_id = max(max_id, u, v)
    if max_id < 0:
        raise GraphParseError("empty edge list")
    return Graph.from_edges(max_id + 1, us, vs, ws, weighted=weighted)


def to_edge_list(g):
    """Serialize a graph to edge-list text (one ``u v [w]`` line per edge).

    Round-trips exactly through :func:`parse_edge_list` for graphs whose
    weights are integers.
    """
    lines = []
    for u in range(g.n):
        nbrs = g.neighbors(u)
        wgts = g.weights(u)
        for v, w in zip(nbrs, wgts):
            if u < v:
                if g.weighted:
                    wtxt = str(int(w)) if float(w).is_integer() else repr(float(w))
                    lines.append(f"{u} {v} {wtxt}")
                else:
                    lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def _component_labels(g):
    """Label connected components; returns (labels, sizes) with labels in
    discovery order (component 0 contains vertex 0)."""
    n = g.n
    labels = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    comp = 0
    sizes = []
    for seed in range(n):
        if labels[seed] >= 0:
            continue
        labels[seed] = comp
        queue[0] = seed
        head, tail = 0, 1
        while head < tail:
            x = queue[head]
            head += 1
            for y in g.neighbors(x):
                if labels[y] < 0:
                    labels[y] = comp
                    queue[tail] = y
                    tail += 1
        sizes.append(tail)
        comp += 1
    return labels, np.asarray(sizes, dtype=np.int64)


def largest_connected_component(g):
    """Induced subgraph of the largest connected component.

    Vertices are relabeled contiguously preserving relative order. Ties
    between equal-size components go to the one containing the smallest
    original id. Returns ``(subgraph, id_map)`` where ``id_map[old] = new``
    or -1 for dropped vertices.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    labels, sizes = _component_labels(g)
    # Components are discovered in order of their smallest vertex id, so
    # argmax picks the tie-winner with the smallest contained id.
    best = int(np.argmax(sizes))
    keep = labels == best
    id_map = np.full(g.n, -1, dtype=np.int64)
    id_map[keep] = np.arange(int(keep.sum()))
    old_ids = np.flatnonzero(keep)
    us, vs, ws = [], [], []
    for old_u in old_ids:
        nbrs = g.neighbors(old_u)
        sel = nbrs > old_u
        us.append(np.full(int(sel.sum()), id_map[old_u], dtype=np.int64))
        vs.append(id_map[nbrs[sel]])
        ws.append(g.weights(old_u)[sel])
    sub = Graph.from_edges(
        len(old_ids),
        np.concatenate(us) if us else [],
        np.concatenate(vs) if vs else [],
        np.concatenate(ws) if ws else None,
        weighted=g.weighted,
    )
    return sub, id_map


def is_connected(g):
    if g.n == 0:
        return False
    _, sizes = _component_labels(g)
    return len(sizes) == 1


def estimate_diameter(g):
    """Double-sweep BFS lower bound on the hop diameter.

    One BFS from vertex 0, a second from the farthest vertex found; the
    result is the larger eccentricity. Always a lower bound on the true
    hop diameter and at least half of it. Hop counts are used even on
    weighted graphs.
    """
    from .backend import kernels as K  # deferred: parsing needs no kernels

    n = g.n
    if n == 0:
        raise ValueError("empty graph")
    dist = np.empty(n, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    K.bfs_multi(g.indptr, g.nbrs, np.array([0], dtype=np.int64), dist, order)
    if np.any(dist < 0):
        raise ValueError("graph is not connected")
    ecc1 = int(dist.max())
    far = int(np.argmax(dist))
    K.bfs_multi(g.indptr, g.nbrs, np.array([far], dtype=np.int64), dist, order)
    return max(ecc1, int(dist.max()))
