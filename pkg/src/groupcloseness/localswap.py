"""Local-Swaps: exchange a group member with an adjacent outside vertex.

Unweighted graphs only; every swap moves distances by at most one hop,
which is what makes the incremental bookkeeping cheap. The state tracks,
for every outside vertex x, the bit-set of group slots realizing its
distance, and per slot the number of vertices realized exclusively by it.
A swap candidate (u, v) is ranked by the lower bound est|D_v| - |Lambda_u|
on the farness decrease; the chosen swap is applied speculatively with a
pruned BFS that measures the exact decrease, and reverted if it does not
improve.

Swap accounting (measured by the pruned BFS over the pre-swap state, with
H-/H+ counted over all vertices):

    f(S) - f(S - u + v) = |H-| - |H+|
    |H+| = 1 + |Lambda_u| - |Lambda_u ∩ H-| - |L0|

where the leading 1 is the leaving member u itself, whose distance becomes
one hop.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import kernels as K
from .reach import ReachEstimate, sketch_scores, descending_dist_order
from .search import (DEFAULT_STALL_LIMIT, SearchResult, WeightedGraphError,
                     draw_initial_group)

MAX_GROUP_SLOTS = 64  # slot bit-sets live in one 64-bit word per vertex

VARIANTS = ("base", "semi-local", "restricted")


@dataclass
class SwapCandidate:
    u: int      # group member to remove
    v: int      # outside vertex to add
    bound: float  # est|D_v| - |Lambda_u|


@dataclass
class SwapStats:
    """Exact accounting of one applied swap (kept for verification)."""

    delta: int
    h_minus: int
    h_plus: int
    lam_u: int
    lam_u_in_h_minus: int
    l0: int
    visits: int


class LsState:
    """Incremental Local-Swaps state for one search."""

    def __init__(self, g, members, dist, lam, lamcount, farness):
        self.g = g
        self.members = members          # vertex id per slot
        self.dist = dist                # int64 hops from the group
        self.lam = lam                  # uint64 slot bit-set per vertex
        self.lamcount = lamcount        # |Lambda_u| per slot
        self.farness = farness
        self.slot_of = np.full(g.n, -1, dtype=np.int64)
        self.slot_of[members] = np.arange(len(members))
        self.last_swap = None

    @property
    def k(self):
        return len(self.members)

    def group(self):
        return sorted(int(x) for x in self.members)


def ls_init(g, S0):
    """Build the state for the initial group S0 (one BFS per member)."""
    if g.weighted:
        raise WeightedGraphError("Local-Swaps requires an unweighted graph")
    members = np.asarray(list(S0), dtype=np.int64)
    k = len(members)
    if k < 1:
        raise ValueError("group must be non-empty")
    if len(np.unique(members)) != k:
        raise ValueError("duplicate vertices in the initial group")
    if k > MAX_GROUP_SLOTS:
        raise ValueError(f"Local-Swaps supports k <= {MAX_GROUP_SLOTS}")
    n = g.n
    dist = np.empty(n, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    K.bfs_multi(g.indptr, g.nbrs, members, dist, order)
    lam = np.zeros(n, dtype=np.uint64)
    dist_w = np.empty(n, dtype=np.int64)
    for slot in range(k):
        K.bfs_multi(g.indptr, g.nbrs, members[slot:slot + 1], dist_w, order)
        lam[dist_w == dist] |= np.uint64(1) << np.uint64(slot)
    lamcount = np.zeros(k, dtype=np.int64)
    outside = dist > 0
    for slot in range(k):
        lamcount[slot] = int(
            np.count_nonzero(outside & (lam == np.uint64(1) << np.uint64(slot)))
        )
    return LsState(g, members, dist, lam, lamcount, int(dist.sum()))


def _per_vertex_best_member_key(state):
    """For every vertex, min over its member neighbors of the key
    |Lambda_u| * n + u (encodes the count-then-lowest-id tie rule);
    a huge key where no member neighbor exists."""
    g = state.g
    n = g.n
    big = np.int64((n + 1) * n)
    nbr_slot = state.slot_of[g.nbrs]
    is_member_edge = nbr_slot >= 0
    keys = np.where(
        is_member_edge,
        state.lamcount[np.where(is_member_edge, nbr_slot, 0)] * n
        + g.nbrs.astype(np.int64),
        big,
    )
    best = np.minimum.reduceat(keys, g.indptr[:-1])
    return best, big


def ls_select_swap(state, reach, variant="base"):
    """Pick the swap maximizing est|D_v| - |Lambda_u|; None if no candidate.

    base: v ranges over N(S) outside S, u over v's member neighbors.
    semi-local: u may additionally be any member adjacent to another
    member (the best such u works for every v).
    restricted: v = argmax est|D_v| first, then u among v's member
    neighbors. All ties go to the lowest vertex id, v before u.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    g = state.g
    n = g.n
    est = reach.est
    cand = state.dist == 1
    if not cand.any():
        return None

    best_key, big = _per_vertex_best_member_key(state)

    if variant == "semi-local":
        member_key = big
        for slot, w in enumerate(state.members):
            if (state.slot_of[g.neighbors(w)] >= 0).any():
                key = int(state.lamcount[slot]) * n + int(w)
                member_key = min(member_key, key)
        best_key = np.minimum(best_key, member_key)

    if variant == "restricted":
        scores = np.where(cand, est, -np.inf)
        v = int(np.argmax(scores))
    else:
        scores = np.where(cand, est - (best_key // n), -np.inf)
        v = int(np.argmax(scores))
    key = int(best_key[v])
    u = key % n
    return SwapCandidate(u=int(u), v=v, bound=float(est[v]) - key // n)


def ls_apply_swap(state, u, v):
    """Swap member u with outside vertex v, updating the state in place.

    Returns the exact farness decrease f(S) - f(S - u + v); detailed
    accounting lands in ``state.last_swap``.
    """
    slot = int(state.slot_of[u])
    if slot < 0:
        raise ValueError(f"vertex {u} is not a group member")
    if state.slot_of[v] >= 0:
        raise ValueError(f"vertex {v} is already a group member")
    g = state.g
    out = K.ls_apply_swap(
        g.indptr, g.nbrs, state.dist, state.lam, state.lamcount,
        slot, int(v), state.k,
    )
    stats = SwapStats(*[int(x) for x in out])
    state.last_swap = stats
    state.members[slot] = v
    state.slot_of[u] = -1
    state.slot_of[v] = slot
    state.farness -= stats.delta
    return stats.delta


def ls_run(g, k, variant="base", seed=1, max_exchanges=100,
           samples=16, width=16, initial=None, stall_limit=DEFAULT_STALL_LIMIT):
    """Full Local-Swaps search from a random (or given) initial group.

    Each attempt re-estimates reachability sizes on the current DAG and
    applies the selected swap speculatively; a swap that does not strictly
    decrease the farness is reverted (the estimates are randomized, so
    later attempts may still find an improvement). The search stops after
    ``stall_limit`` consecutive rejected swaps, after ``max_exchanges``
    accepted swaps, or when no candidate exists.
    """
    if not 1 <= k < g.n:
        raise ValueError("k out of range")
    rng = np.random.default_rng(seed)
    S0 = np.asarray(list(initial), dtype=np.int64) if initial is not None \
        else draw_initial_group(rng, g.n, k)
    state = ls_init(g, S0)
    trace = [state.farness]
    stall = 0
    while len(trace) - 1 < max_exchanges and stall < stall_limit:
        dist_f = state.dist.astype(np.float64)
        order = descending_dist_order(dist_f)
        est = sketch_scores(g, dist_f, order, samples, width, rng)
        cand = ls_select_swap(state, ReachEstimate(est, samples, width), variant)
        if cand is None:
            break
        delta = ls_apply_swap(state, cand.u, cand.v)
        if delta > 0:
            stall = 0
            trace.append(state.farness)
        else:
            ls_apply_swap(state, cand.v, cand.u)  # revert
            stall += 1
    return SearchResult(group=state.group(), farness=float(state.farness),
                        exchanges=len(trace) - 1, trace=[float(f) for f in trace])
