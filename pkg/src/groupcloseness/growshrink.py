"""Grow-Shrink: alternately add the most promising vertex and remove the
cheapest one, temporarily letting the group exceed its target size.

Works on weighted and unweighted graphs. The state keeps, for every
vertex, the distance d to the group with a representative r realizing it,
and the second distance d' to the group without that representative (with
its own representative r', always distinct from r). Additions are applied
with a pruned traversal from the new vertex; removals reassign (d, r) from
(d', r') inside the removed representative's region and then repair the
second distances with a Dijkstra-like relaxation seeded from boundary
pairs.
"""

from __future__ import annotations

import numpy as np

from .backend import kernels as K
from .graph import estimate_diameter
from .reach import ReachEstimate, sketch_scores, descending_dist_order
from .search import (DEFAULT_STALL_LIMIT, SearchResult, draw_initial_group,
                     neighborhood_mask)

VARIANTS = ("gs", "gs-local", "gs-extended")

INF = float("inf")


class GsState:
    """Incremental Grow-Shrink state for one search."""

    def __init__(self, g, members, d, r, dp, rp, farness):
        self.g = g
        self.members = members      # sorted vertex ids
        self.d = d                  # float64 distance to the group
        self.r = r                  # representative realizing d
        self.dp = dp                # distance to group minus r(x)
        self.rp = rp                # representative realizing dp (-1 undefined)
        self.farness = farness
        self.member_mask = np.zeros(g.n, dtype=bool)
        self.member_mask[members] = True
        self.last_grow_visits = 0
        self.last_repair_visits = 0

    @property
    def k(self):
        return len(self.members)

    def group(self):
        return [int(x) for x in self.members]


def _sssp_from(g, src, out):
    order = np.empty(g.n, dtype=np.int64)
    if g.weighted:
        K.dijkstra_multi(g.indptr, g.nbrs, g.wgts, src, out, order)
    else:
        hops = np.empty(g.n, dtype=np.int64)
        K.bfs_multi(g.indptr, g.nbrs, src, hops, order)
        out[:] = hops


def gs_init(g, S0):
    """Build the state for the group S0 with one traversal per member.

    Representative ties go to the lowest member id; for a singleton group
    the second distances are infinite.
    """
    given = np.asarray(list(S0), dtype=np.int64)
    members = np.unique(given)
    k = len(members)
    if k < 1:
        raise ValueError("group must be non-empty")
    if k != len(given):
        raise ValueError("duplicate vertices in the initial group")
    n = g.n
    dmat = np.empty((k, n), dtype=np.float64)
    for i in range(k):
        _sssp_from(g, members[i:i + 1], dmat[i])
    ridx = np.argmin(dmat, axis=0)          # first min = lowest member id
    d = dmat[ridx, np.arange(n)].copy()
    r = members[ridx]
    if k == 1:
        dp = np.full(n, INF)
        rp = np.full(n, -1, dtype=np.int64)
    else:
        dmat[ridx, np.arange(n)] = INF
        rpidx = np.argmin(dmat, axis=0)
        dp = dmat[rpidx, np.arange(n)].copy()
        rp = members[rpidx]
    return GsState(g, members, d, r, dp, rp, float(d.sum()))


def gs_grow_step(state, reach, variant="global"):
    """Add the vertex maximizing est|D_v| * d(v) and update the state.

    ``variant`` picks the candidate pool: "global" considers every outside
    vertex, "local" only the neighbors of the group. Ties go to the lowest
    id. Returns the added vertex.
    """
    if variant not in ("global", "local"):
        raise ValueError(f"unknown grow variant {variant!r}")
    g = state.g
    if variant == "local":
        cand = neighborhood_mask(g, state.members, state.member_mask)
    else:
        cand = ~state.member_mask
    if not cand.any():
        raise ValueError("no candidate vertex: the group already covers V")
    scores = np.where(cand, reach.est * state.d, -INF)
    v = int(np.argmax(scores))
    delta, visits = K.gs_grow_update(
        g.indptr, g.nbrs, g.wgts, g.weighted,
        state.d, state.dp, state.r, state.rp, v,
    )
    state.last_grow_visits = int(visits)
    state.farness -= delta
    state.members = np.sort(np.append(state.members, v))
    state.member_mask[v] = True
    return v


def gs_delta_plus_all(state):
    """Exact farness increase of removing each member, in one linear scan.

    Members count their own post-removal distance d'(u). Returns an array
    aligned with ``state.members``.
    """
    if state.k < 2:
        raise ValueError("need at least two members to evaluate removals")
    contrib = state.dp - state.d
    acc = np.bincount(state.r, weights=contrib, minlength=state.g.n)
    return acc[state.members]


def gs_repair(state, invalid):
    """Restore d'/r' on the invalidated vertices (boundary-pair seeding
    plus Dijkstra-like relaxation). d/r must already be final."""
    g = state.g
    visits = K.gs_repair(g.indptr, g.nbrs, g.wgts, g.weighted,
                         state.d, state.r, state.dp, state.rp,
                         invalid.astype(np.uint8))
    state.last_repair_visits = int(visits)
    if np.isinf(state.dp[invalid]).any():
        raise RuntimeError("repair left vertices without a second distance")


def gs_remove(state, u):
    """Remove member u: reassign its region to the second distances, then
    repair d'/r'. Returns the exact farness increase."""
    u = int(u)
    if not state.member_mask[u]:
        raise ValueError(f"vertex {u} is not a group member")
    if state.k < 2:
        raise ValueError("cannot remove from a singleton group")
    deltas = gs_delta_plus_all(state)
    delta = float(deltas[np.searchsorted(state.members, u)])
    in_region = state.r == u
    invalid = in_region | (state.rp == u)
    state.d[in_region] = state.dp[in_region]
    state.r[in_region] = state.rp[in_region]
    state.dp[invalid] = INF
    state.rp[invalid] = -1
    state.members = state.members[state.members != u]
    state.member_mask[u] = False
    state.farness += delta
    if state.k == 1:
        state.dp[:] = INF
        state.rp[:] = -1
    else:
        gs_repair(state, invalid)
    return delta


def gs_shrink_step(state):
    """Remove the member with the smallest exact farness increase (ties to
    the lowest id). Returns the removed vertex."""
    deltas = gs_delta_plus_all(state)
    u = int(state.members[np.argmin(deltas)])
    gs_remove(state, u)
    return u


def resolve_h(g, k, variant, h=None, p=0.75):
    """Number of grow steps per round. The extended variant defaults to
    the diameter rule h = max(1, round(diam / k**p))."""
    if variant in ("gs", "gs-local"):
        return 1
    if h is not None:
        if h < 1:
            raise ValueError("h must be >= 1")
        return int(h)
    if p <= 0:
        raise ValueError("p must be positive")
    return max(1, round(estimate_diameter(g) / k**p))


def gs_run(g, k, variant="gs", h=None, p=0.75, seed=1, max_exchanges=100,
           samples=16, width=16, initial=None, stall_limit=DEFAULT_STALL_LIMIT):
    """Full Grow-Shrink search from a random (or given) initial group.

    Each round performs h grow steps (re-estimating reachability sizes
    before each) followed by h shrink steps. A round that does not
    strictly decrease the farness is reverted, rebuilding the pre-round
    group from scratch; since the estimates are randomized, the search
    keeps attempting rounds until ``stall_limit`` consecutive rejections
    or ``max_exchanges`` accepted rounds.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if not 1 <= k < g.n:
        raise ValueError("k out of range")
    h_val = resolve_h(g, k, variant, h, p)
    grow_variant = "global" if variant == "gs" else "local"
    rng = np.random.default_rng(seed)
    S0 = np.asarray(list(initial), dtype=np.int64) if initial is not None \
        else draw_initial_group(rng, g.n, k)
    state = gs_init(g, S0)
    trace = [state.farness]
    stall = 0
    while len(trace) - 1 < max_exchanges and stall < stall_limit:
        snapshot = state.members.copy()
        f_before = state.farness
        for _ in range(h_val):
            if state.k >= g.n:
                break
            order = descending_dist_order(state.d)
            est = sketch_scores(g, state.d, order, samples, width, rng)
            gs_grow_step(state, ReachEstimate(est, samples, width), grow_variant)
        while state.k > k:
            gs_shrink_step(state)
        if state.farness < f_before:
            stall = 0
            trace.append(state.farness)
        else:
            state = gs_init(g, snapshot)
            stall += 1
    return SearchResult(group=state.group(), farness=float(state.farness),
                        exchanges=len(trace) - 1, trace=[float(f) for f in trace])
