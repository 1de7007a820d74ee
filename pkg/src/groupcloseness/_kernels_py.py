"""Pure-Python fallback for the traversal kernels.

Function-for-function twin of the compiled ``_ckernels`` extension; the
backend module picks one of the two at import time. Results are identical
between the backends (heap keys are distinct ``(priority, vertex)`` pairs,
so settle orders are fully determined), only speed differs. All functions
operate on flat numpy arrays and mutate their output arguments in place.

Array conventions: ``indptr`` int64 (n+1), ``nbrs`` int32 (2m), ``wgts``
float64 (2m), distances float64 except the hop distances of the
Local-Swaps state, which are int64.
"""

from __future__ import annotations

import heapq

import numpy as np

INF = float("inf")


def bfs_multi(indptr, nbrs, sources, dist, order):
    """Multi-source BFS; fills hop distances (-1 unreached) and the settle
    order. Returns the number of settled vertices."""
    dist[:] = -1
    queue = np.empty(len(dist), dtype=np.int64)
    tail = 0
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue[tail] = s
            tail += 1
    head = 0
    while head < tail:
        x = queue[head]
        order[head] = x
        head += 1
        dx = dist[x]
        for y in nbrs[indptr[x]:indptr[x + 1]]:
            if dist[y] < 0:
                dist[y] = dx + 1
                queue[tail] = y
                tail += 1
    return head


def dijkstra_multi(indptr, nbrs, wgts, sources, dist, order):
    """Multi-source Dijkstra with a lazy binary heap; fills float distances
    (inf unreached) and the settle order. Returns the settled count."""
    dist[:] = INF
    heap = []
    for s in sources:
        if dist[s] > 0.0:
            dist[s] = 0.0
            heapq.heappush(heap, (0.0, int(s)))
    cnt = 0
    while heap:
        dx, x = heapq.heappop(heap)
        if dx > dist[x]:
            continue
        order[cnt] = x
        cnt += 1
        for i in range(indptr[x], indptr[x + 1]):
            y = nbrs[i]
            nd = dx + wgts[i]
            if nd < dist[y]:
                dist[y] = nd
                heapq.heappush(heap, (nd, int(y)))
    return cnt


def singleton_farness(indptr, nbrs, wgts, weighted):
    """Farness of every single-vertex group: one full traversal per vertex.
    Unreachable vertices make the farness infinite."""
    n = len(indptr) - 1
    out = np.empty(n, dtype=np.float64)
    dist = np.empty(n, dtype=np.float64) if weighted else np.empty(n, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    src = np.empty(1, dtype=np.int64)
    for v in range(n):
        src[0] = v
        if weighted:
            cnt = dijkstra_multi(indptr, nbrs, wgts, src, dist, order)
            out[v] = float(dist.sum()) if cnt == n else INF
        else:
            cnt = bfs_multi(indptr, nbrs, src, dist, order)
            out[v] = float(dist.sum()) if cnt == n else INF
    return out


def sketch_propagate(indptr, nbrs, wgts, dist, order, vals):
    """Propagate per-lane random minima over the shortest-path DAG.

    ``order`` must list all vertices in non-increasing ``dist`` order, so a
    vertex is processed after every DAG successor. For each tight edge
    x -> y (dist[x] + w == dist[y]) the lanes of x take the element-wise
    minimum with the lanes of y.
    """
    for x in order:
        dx = dist[x]
        row = vals[x]
        for i in range(indptr[x], indptr[x + 1]):
            y = nbrs[i]
            if dx + wgts[i] == dist[y]:
                np.minimum(row, vals[y], out=row)


def greedy_best_addition(indptr, nbrs, wgts, weighted, dist, in_group):
    """Scan all vertices outside the group and return ``(v, delta)`` with
    the largest exact farness decrease, ties to the lowest id.

    The decrease for a candidate v is measured by a traversal from v pruned
    at vertices x with dist(v, x) >= dist[x]; only strictly improved
    vertices contribute.
    """
    n = len(indptr) - 1
    best_v, best_delta = -1, -INF
    dist_v = np.empty(n, dtype=np.float64)
    dist_v[:] = INF
    touched = []
    queue = np.empty(n, dtype=np.int64)
    for v in range(n):
        if in_group[v]:
            continue
        delta = 0.0
        if weighted:
            heap = [(0.0, v)]
            dist_v[v] = 0.0
            touched.append(v)
            while heap:
                dx, x = heapq.heappop(heap)
                if dx > dist_v[x]:
                    continue
                delta += dist[x] - dx
                for i in range(indptr[x], indptr[x + 1]):
                    y = nbrs[i]
                    nd = dx + wgts[i]
                    if nd < dist_v[y] and nd < dist[y]:
                        dist_v[y] = nd
                        heapq.heappush(heap, (nd, int(y)))
                        touched.append(y)
        else:
            dist_v[v] = 0.0
            touched.append(v)
            queue[0] = v
            head, tail = 0, 1
            while head < tail:
                x = queue[head]
                head += 1
                dx = dist_v[x]
                delta += dist[x] - dx
                for y in nbrs[indptr[x]:indptr[x + 1]]:
                    if dist_v[y] == INF and dx + 1 < dist[y]:
                        dist_v[y] = dx + 1
                        queue[tail] = y
                        tail += 1
                        touched.append(y)
        if delta > best_delta:
            best_v, best_delta = v, delta
        for x in touched:
            dist_v[x] = INF
        touched.clear()
    return best_v, best_delta


def greedy_add_update(indptr, nbrs, wgts, weighted, dist, v):
    """Add v as a source: lower ``dist`` along the region where v improves
    it and return the exact farness decrease."""
    n = len(indptr) - 1
    delta = 0.0
    if weighted:
        dist_v = np.full(n, INF)
        dist_v[v] = 0.0
        heap = [(0.0, int(v))]
        while heap:
            dx, x = heapq.heappop(heap)
            if dx > dist_v[x]:
                continue
            delta += dist[x] - dx
            dist[x] = dx
            for i in range(indptr[x], indptr[x + 1]):
                y = nbrs[i]
                nd = dx + wgts[i]
                if nd < dist_v[y] and nd < dist[y]:
                    dist_v[y] = nd
                    heapq.heappush(heap, (nd, int(y)))
    else:
        dist_v = np.full(n, -1, dtype=np.int64)
        dist_v[v] = 0
        queue = np.empty(n, dtype=np.int64)
        queue[0] = v
        head, tail = 0, 1
        while head < tail:
            x = queue[head]
            head += 1
            dx = dist_v[x]
            delta += dist[x] - dx
            dist[x] = dx
            for y in nbrs[indptr[x]:indptr[x + 1]]:
                if dist_v[y] < 0 and dx + 1 < dist[y]:
                    dist_v[y] = dx + 1
                    queue[tail] = y
                    tail += 1
    return delta


def ls_apply_swap(indptr, nbrs, dist, lam, lamcount, u_slot, v, n_slots):
    """Swap the member occupying ``u_slot`` with the outside vertex v and
    update the Local-Swaps state in place.

    ``dist`` holds int64 hop distances from the group (0 for members),
    ``lam`` the per-vertex slot bit-sets (members carry their own slot
    bit), ``lamcount`` the per-slot exclusive-realizer counters. v takes
    over the vacated slot.

    Returns ``(delta, h_minus, h_plus, lam_u, lam_u_hm, l0, visits)`` where
    delta is the exact farness decrease, h_minus/h_plus count the vertices
    whose distance drops/rises (the leaving member itself is part of
    h_plus), and lam_u/lam_u_hm/l0 are the swap-accounting terms measured
    over the pre-swap state.
    """
    n = len(indptr) - 1
    u_bit = np.uint64(1) << np.uint64(u_slot)
    lam_u = int(lamcount[u_slot])

    # Pruned BFS from v: visit x while dist(v, x) <= dist(S, x).
    dist_v = np.full(n, -1, dtype=np.int64)
    flag = np.zeros(n, dtype=np.uint8)  # 1 improved, 2 unchanged-equal
    queue = np.empty(n, dtype=np.int64)
    dist_v[v] = 0
    queue[0] = v
    head, tail = 0, 1
    h_minus = 0
    lam_u_hm = 0
    l0 = 0
    while head < tail:
        x = queue[head]
        head += 1
        dx = dist_v[x]
        if dx < dist[x]:
            h_minus += 1
            flag[x] = 1
            if lam[x] == u_bit:
                lam_u_hm += 1
        else:  # dx == dist[x] by the enqueue filter
            flag[x] = 2
            if lam[x] == u_bit:
                l0 += 1
        for y in nbrs[indptr[x]:indptr[x + 1]]:
            if dist_v[y] < 0 and dx + 1 <= dist[y]:
                dist_v[y] = dx + 1
                queue[tail] = y
                tail += 1
    visits = tail

    # Linear scan: settle improved vertices on v's slot, add the slot where
    # v ties, strip it elsewhere. Emptied bit-sets mark the vertices whose
    # distance grows by one (the vacating member u among them).
    emptied = []
    zero = np.uint64(0)
    not_u = ~u_bit
    for x in range(n):
        fx = flag[x]
        if fx == 1:
            dist[x] = dist_v[x]
            lam[x] = u_bit
        elif fx == 2:
            lam[x] |= u_bit
        else:
            if lam[x] == zero:
                raise RuntimeError(f"inconsistent state: empty realizer set at {x}")
            nl = lam[x] & not_u
            if nl == zero:
                dist[x] += 1
                emptied.append(x)
            else:
                lam[x] = nl
    h_plus = len(emptied)

    # Rebuild the emptied bit-sets from neighbors one hop closer, in
    # non-decreasing distance order so fellow emptied vertices are final.
    emptied.sort(key=lambda x: (dist[x], x))
    for x in emptied:
        dtarget = dist[x] - 1
        bits = zero
        for y in nbrs[indptr[x]:indptr[x + 1]]:
            if dist[y] == dtarget:
                bits |= lam[y]
        if bits == zero:
            raise RuntimeError(f"inconsistent state: no realizer found for {x}")
        lam[x] = bits

    # Recount exclusive realizers per slot (members excluded via dist > 0).
    lamcount[:] = 0
    for x in range(n):
        lx = lam[x]
        if dist[x] > 0 and lx & (lx - np.uint64(1)) == zero:
            slot = int(lx).bit_length() - 1
            lamcount[slot] += 1

    delta = h_minus - h_plus
    return delta, h_minus, h_plus, lam_u, lam_u_hm, l0, visits


def gs_grow_update(indptr, nbrs, wgts, weighted, d, dp, r, rp, v):
    """Add v to the Grow-Shrink group and update d/d'/r/r' in place.

    Traversal from v, expanded while dist(v, x) < d'(x): strict
    improvements push the old (d, r) pair into (d', r'); distances in
    [d(x), d'(x)) become the new second distance realized by v. Returns
    ``(delta, visits)`` with the exact farness decrease.
    """
    n = len(indptr) - 1
    delta = 0.0
    visits = 0
    if weighted:
        dist_v = np.full(n, INF)
        dist_v[v] = 0.0
        heap = [(0.0, int(v))]
        while heap:
            dx, x = heapq.heappop(heap)
            if dx > dist_v[x]:
                continue
            visits += 1
            if dx < d[x]:
                delta += d[x] - dx
                dp[x] = d[x]
                rp[x] = r[x]
                d[x] = dx
                r[x] = v
            elif dx < dp[x]:
                dp[x] = dx
                rp[x] = v
            for i in range(indptr[x], indptr[x + 1]):
                y = nbrs[i]
                nd = dx + wgts[i]
                if nd < dist_v[y] and nd < dp[y]:
                    dist_v[y] = nd
                    heapq.heappush(heap, (nd, int(y)))
    else:
        dist_v = np.full(n, -1, dtype=np.int64)
        dist_v[v] = 0
        queue = np.empty(n, dtype=np.int64)
        queue[0] = v
        head, tail = 0, 1
        while head < tail:
            x = queue[head]
            head += 1
            dx = float(dist_v[x])
            visits += 1
            if dx < d[x]:
                delta += d[x] - dx
                dp[x] = d[x]
                rp[x] = r[x]
                d[x] = dx
                r[x] = v
            elif dx < dp[x]:
                dp[x] = dx
                rp[x] = v
            for y in nbrs[indptr[x]:indptr[x + 1]]:
                if dist_v[y] < 0 and dist_v[x] + 1 < dp[y]:
                    dist_v[y] = dist_v[x] + 1
                    queue[tail] = y
                    tail += 1
    return delta, visits


def gs_repair(indptr, nbrs, wgts, weighted, d, r, dp, rp, invalid):
    """Restore d'/r' after a removal for the invalidated vertices.

    ``d``/``r`` must already be final everywhere; ``dp``/``rp`` are inf/-1
    exactly on the invalid set. Seeds come from boundary pairs (valid
    distance information on a neighboring vertex), then a Dijkstra-like
    relaxation over d' runs with the representative-pruning rule: from x,
    only neighbors y with r(y) != r'(x) are visited. Returns the settled
    count.
    """
    heap = []
    for y in np.flatnonzero(invalid):
        best = INF
        best_rep = -1
        ry = r[y]
        for i in range(indptr[y], indptr[y + 1]):
            x = nbrs[i]
            w = wgts[i]
            if r[x] != ry:
                b = d[x] + w
                rep = r[x]
            elif not invalid[x]:
                b = dp[x] + w
                rep = rp[x]
            else:
                continue
            if rep == ry:
                continue
            if b < best:
                best = b
                best_rep = rep
        if best_rep >= 0:
            dp[y] = best
            rp[y] = best_rep
            heapq.heappush(heap, (best, int(y)))
    visits = 0
    while heap:
        b, x = heapq.heappop(heap)
        if b > dp[x]:
            continue
        visits += 1
        rpx = rp[x]
        for i in range(indptr[x], indptr[x + 1]):
            y = nbrs[i]
            if r[y] == rpx:
                continue
            nd = b + wgts[i]
            if nd < dp[y]:
                dp[y] = nd
                rp[y] = rpx
                heapq.heappush(heap, (nd, int(y)))
    return visits
