# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled traversal kernels.

Twin of ``_kernels_py`` (see that module for the full contracts); the
backend module picks whichever is available at import time. Keep the two
implementations in lockstep: same signatures, same results.
"""

import numpy as np

cimport numpy as cnp
from libc.stdlib cimport qsort

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cdef double INF = float("inf")


# ---------------------------------------------------------------------------
# binary heap over (key, vertex) pairs, lexicographic order

cdef inline Py_ssize_t heap_push(double* hk, cnp.int64_t* hv, Py_ssize_t size,
                                 double key, cnp.int64_t val) nogil:
    cdef Py_ssize_t i = size
    cdef Py_ssize_t parent
    cdef double tk
    cdef cnp.int64_t tv
    hk[i] = key
    hv[i] = val
    while i > 0:
        parent = (i - 1) >> 1
        if hk[parent] > hk[i] or (hk[parent] == hk[i] and hv[parent] > hv[i]):
            tk = hk[parent]; hk[parent] = hk[i]; hk[i] = tk
            tv = hv[parent]; hv[parent] = hv[i]; hv[i] = tv
            i = parent
        else:
            break
    return size + 1


cdef inline Py_ssize_t heap_pop(double* hk, cnp.int64_t* hv, Py_ssize_t size) nogil:
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t child
    cdef double tk
    cdef cnp.int64_t tv
    size -= 1
    hk[0] = hk[size]
    hv[0] = hv[size]
    while True:
        child = 2 * i + 1
        if child >= size:
            break
        if child + 1 < size and (hk[child + 1] < hk[child] or
                                 (hk[child + 1] == hk[child] and hv[child + 1] < hv[child])):
            child += 1
        if hk[child] < hk[i] or (hk[child] == hk[i] and hv[child] < hv[i]):
            tk = hk[child]; hk[child] = hk[i]; hk[i] = tk
            tv = hv[child]; hv[child] = hv[i]; hv[i] = tv
            i = child
        else:
            break
    return size


cdef int _cmp_i64(const void* a, const void* b) noexcept nogil:
    cdef cnp.int64_t x = (<const cnp.int64_t*> a)[0]
    cdef cnp.int64_t y = (<const cnp.int64_t*> b)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


# ---------------------------------------------------------------------------


def bfs_multi(cnp.int64_t[::1] indptr, cnp.int32_t[::1] nbrs,
              cnp.int64_t[::1] sources, cnp.int64_t[::1] dist,
              cnp.int64_t[::1] order):
    cdef Py_ssize_t n = dist.shape[0]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] queue_arr = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0, i
    cdef cnp.int64_t x, y, dx
    for i in range(n):
        dist[i] = -1
    for i in range(sources.shape[0]):
        x = sources[i]
        if dist[x] < 0:
            dist[x] = 0
            queue[tail] = x
            tail += 1
    while head < tail:
        x = queue[head]
        order[head] = x
        head += 1
        dx = dist[x]
        for i in range(indptr[x], indptr[x + 1]):
            y = nbrs[i]
            if dist[y] < 0:
                dist[y] = dx + 1
                queue[tail] = y
                tail += 1
    return head


def dijkstra_multi(cnp.int64_t[::1] indptr, cnp.int32_t[::1] nbrs,
                   cnp.float64_t[::1] wgts, cnp.int64_t[::1] sources,
                   cnp.float64_t[::1] dist, cnp.int64_t[::1] order):
    cdef Py_ssize_t n = dist.shape[0]
    cdef Py_ssize_t cap = nbrs.shape[0] + sources.shape[0] + 1
    cdef cnp.ndarray[cnp.float64_t, ndim=1] hk_arr = np.empty(cap, dtype=np.float64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] hv_arr = np.empty(cap, dtype=np.int64)
    cdef double* hk = &hk_arr[0]
    cdef cnp.int64_t* hv = &hv_arr[0]
    cdef Py_ssize_t size = 0, cnt = 0, i
    cdef cnp.int64_t x, y
    cdef double dx, nd
    for i in range(n):
        dist[i] = INF
    for i in range(sources.shape[0]):
        x = sources[i]
        if dist[x] > 0.0:
            dist[x] = 0.0
            size = heap_push(hk, hv, size, 0.0, x)
    while size > 0:
        dx = hk[0]
        x = hv[0]
        size = heap_pop(hk, hv, size)
        if dx > dist[x]:
            continue
        order[cnt] = x
        cnt += 1
        for i in range(indptr[x], indptr[x + 1]):
            y = nbrs[i]
            nd = dx + wgts[i]
            if nd < dist[y]:
                dist[y] = nd
                size = heap_push(hk, hv, size, nd, y)
    return cnt


def singleton_farness(cnp.int64_t[::1] indptr, cnp.int32_t[::1] nbrs,
                      cnp.float64_t[::1] wgts, bint weighted):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out_arr = np.empty(n, dtype=np.float64)
    cdef cnp.float64_t[::1] out = out_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] di_arr = np.empty(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] dw_arr = np.empty(n, dtype=np.float64)
    cdef cnp.int64_t[::1] di = di_arr
    cdef cnp.float64_t[::1] dw = dw_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] queue_arr = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] queue = queue_arr
    cdef Py_ssize_t cap = nbrs.shape[0] + 2
    cdef cnp.ndarray[cnp.float64_t, ndim=1] hk_arr = np.empty(cap, dtype=np.float64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] hv_arr = np.empty(cap, dtype=np.int64)
    cdef double* hk = &hk_arr[0]
    cdef cnp.int64_t* hv = &hv_arr[0]
    cdef Py_ssize_t size, head, tail, i, v
    cdef cnp.int64_t x, y
    cdef double total, dx, nd
    for v in range(n):
        total = 0.0
        if weighted:
            for i in range(n):
                dw[i] = INF
            dw[v] = 0.0
            size = heap_push(hk, hv, 0, 0.0, v)
            head = 0
            while size > 0:
                dx = hk[0]
                x = hv[0]
                size = heap_pop(hk, hv, size)
                if dx > dw[x]:
                    continue
                total += dx
                head += 1
                for i in range(indptr[x], indptr[x + 1]):
                    y = nbrs[i]
                    nd = dx + wgts[i]
                    if nd < dw[y]:
                        dw[y] = nd
                        size = heap_push(hk, hv, size, nd, y)
        else:
            for i in range(n):
                di[i] = -1
            di[v] = 0
            queue[0] = v
            head = 0
            tail = 1
            while head < tail:
                x = queue[head]
                head += 1
                total += di[x]
                for i in range(indptr[x], indptr[x + 1]):
                    y = nbrs[i]
                    if di[y] < 0:
                        di[y] = di[x] + 1
                        queue[tail] = y
                        tail += 1
        out[v] = total if head == n else INF
    return out_arr


def sketch_propagate(cnp.int64_t[::1] indptr, cnp.int32_t[::1] nbrs,
                     cnp.float64_t[::1] wgts, cnp.float64_t[::1] dist,
                     cnp.int64_t[::1] order, cnp.uint32_t[:, ::1] vals):
    cdef Py_ssize_t n = dist.shape[0]
    cdef Py_ssize_t s = vals.shape[1]
    cdef Py_ssize_t idx, i, lane
    cdef cnp.int64_t x, y
    cdef double dx
    cdef cnp.uint32_t* row
    cdef cnp.uint32_t* other
    with nogil:
        for idx in range(n):
            x = order[idx]
            dx = dist[x]
            row = &vals[x, 0]
            for i in range(indptr[x], indptr[x + 1]):
                y = nbrs[i]
                if dx + wgts[i] == dist[y]:
                    other = &vals[y, 0]
                    for lane in range(s):
                        if other[lane] < row[lane]:
                            row[lane] = other[lane]


def greedy_best_addition(cnp.int64_t[::1] indptr, cnp.int32_t[::1] nbrs,
                         cnp.float64_t[::1] wgts, bint weighted,
                         cnp.float64_t[::1] dist, cnp.uint8_t[::1] in_group):
    cdef Py_ssize_t n = dist.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] dv_arr = np.full(n, INF)
    cdef cnp.float64_t[::1] dist_v = dv_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] touched_arr = np.empty(
        nbrs.shape[0] + n + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] touched = touched_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] queue_arr = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] queue = queue_arr
    cdef Py_ssize_t cap = nbrs.shape[0] + 2
    cdef cnp.ndarray[cnp.float64_t, ndim=1] hk_arr = np.empty(cap, dtype=np.float64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] hv_arr = np.empty(cap, dtype=np.int64)
    cdef double* hk = &hk_arr[0]
    cdef cnp.int64_t* hv = &hv_arr[0]
    cdef Py_ssize_t size, head, tail, ntouch, i, v
    cdef cnp.int64_t x, y
    cdef cnp.int64_t best_v = -1
    cdef double best_delta = -INF
    cdef double delta, dx, nd
    with nogil:
        for v in range(n):
            if in_group[v]:
                continue
            delta = 0.0
            ntouch = 0
            if weighted:
                dist_v[v] = 0.0
                touched[ntouch] = v
                ntouch += 1
                size = heap_push(hk, hv, 0, 0.0, v)
                while size > 0:
                    dx = hk[0]
                    x = hv[0]
                    size = heap_pop(hk, hv, size)
                    if dx > dist_v[x]:
                        continue
                    delta += dist[x] - dx
                    for i in range(indptr[x], indptr[x + 1]):
                        y = nbrs[i]
                        nd = dx + wgts[i]
                        if nd < dist_v[y] and nd < dist[y]:
                            dist_v[y] = nd
                            size = heap_push(hk, hv, size, nd, y)
                            touched[ntouch] = y
                            ntouch += 1
                for i in range(ntouch):
                    dist_v[touched[i]] = INF
            else:
                dist_v[v] = 0.0
                queue[0] = v
                head = 0
                tail = 1
                while head < tail:
                    x = queue[head]
                    head += 1
                    dx = dist_v[x]
                    delta += dist[x] - dx
                    for i in range(indptr[x], indptr[x + 1]):
                        y = nbrs[i]
                        if dist_v[y] == INF and dx + 1.0 < dist[y]:
                            dist_v[y] = dx + 1.0
                            queue[tail] = y
                            tail += 1
                for i in range(tail):
                    dist_v[queue[i]] = INF
            if delta > best_delta:
                best_delta = delta
                best_v = v
    return int(best_v), float(best_delta)


def greedy_add_update(cnp.int64_t[::1] indptr, cnp.int32_t[::1] nbrs,
                      cnp.float64_t[::1] wgts, bint weighted,
                      cnp.float64_t[::1] dist, cnp.int64_t v):
    cdef Py_ssize_t n = dist.shape[0]
    cdef double delta = 0.0
    cdef Py_ssize_t size, head, tail, i
    cdef cnp.int64_t x, y
    cdef double dx, nd
    cdef cnp.ndarray[cnp.float64_t, ndim=1] dvw_arr
    cdef cnp.float64_t[::1] dvw
    cdef cnp.ndarray[cnp.int64_t, ndim=1] dvi_arr
    cdef cnp.int64_t[::1] dvi
    cdef cnp.ndarray[cnp.int64_t, ndim=1] queue_arr
    cdef cnp.int64_t[::1] queue
    cdef cnp.ndarray[cnp.float64_t, ndim=1] hk_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] hv_arr
    cdef double* hk
    cdef cnp.int64_t* hv
    if weighted:
        dvw_arr = np.full(n, INF)
        dvw = dvw_arr
        hk_arr = np.empty(nbrs.shape[0] + 2, dtype=np.float64)
        hv_arr = np.empty(nbrs.shape[0] + 2, dtype=np.int64)
        hk = &hk_arr[0]
        hv = &hv_arr[0]
        dvw[v] = 0.0
        size = heap_push(hk, hv, 0, 0.0, v)
        while size > 0:
            dx = hk[0]
            x = hv[0]
            size = heap_pop(hk, hv, size)
            if dx > dvw[x]:
                continue
            delta += dist[x] - dx
            dist[x] = dx
            for i in range(indptr[x], indptr[x + 1]):
                y = nbrs[i]
                nd = dx + wgts[i]
                if nd < dvw[y] and nd < dist[y]:
                    dvw[y] = nd
                    size = heap_push(hk, hv, size, nd, y)
    else:
        dvi_arr = np.full(n, -1, dtype=np.int64)
        dvi = dvi_arr
        queue_arr = np.empty(n, dtype=np.int64)
        queue = queue_arr
        dvi[v] = 0
        queue[0] = v
        head = 0
        tail = 1
        while head < tail:
            x = queue[head]
            head += 1
            dx = <double> dvi[x]
            delta += dist[x] - dx
            dist[x] = dx
            for i in range(indptr[x], indptr[x + 1]):
                y = nbrs[i]
                if dvi[y] < 0 and dx + 1.0 < dist[y]:
                    dvi[y] = dvi[x] + 1
                    queue[tail] = y
                    tail += 1
    return delta


def ls_apply_swap(cnp.int64_t[::1] indptr, cnp.int32_t[::1] nbrs,
                  cnp.int64_t[::1] dist, cnp.uint64_t[::1] lam,
                  cnp.int64_t[::1] lamcount, cnp.int64_t u_slot,
                  cnp.int64_t v, cnp.int64_t n_slots):
    cdef Py_ssize_t n = dist.shape[0]
    cdef cnp.uint64_t u_bit = (<cnp.uint64_t> 1) << (<cnp.uint64_t> u_slot)
    cdef cnp.int64_t lam_u = lamcount[u_slot]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] dv_arr = np.full(n, -1, dtype=np.int64)
    cdef cnp.int64_t[::1] dist_v = dv_arr
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] flag_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] flag = flag_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] queue_arr = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] queue = queue_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] emptied_arr = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] emptied = emptied_arr
    cdef Py_ssize_t head = 0, tail = 1, n_empty = 0, i, i2
    cdef cnp.int64_t x, y, dx, dtarget
    cdef cnp.int64_t h_minus = 0, lam_u_hm = 0, l0 = 0, h_plus, delta
    cdef cnp.uint64_t nl, bits
    cdef int bad = -1

    dist_v[v] = 0
    queue[0] = v
    with nogil:
        while head < tail:
            x = queue[head]
            head += 1
            dx = dist_v[x]
            if dx < dist[x]:
                h_minus += 1
                flag[x] = 1
                if lam[x] == u_bit:
                    lam_u_hm += 1
            else:
                flag[x] = 2
                if lam[x] == u_bit:
                    l0 += 1
            for i in range(indptr[x], indptr[x + 1]):
                y = nbrs[i]
                if dist_v[y] < 0 and dx + 1 <= dist[y]:
                    dist_v[y] = dx + 1
                    queue[tail] = y
                    tail += 1

        for x in range(n):
            if flag[x] == 1:
                dist[x] = dist_v[x]
                lam[x] = u_bit
            elif flag[x] == 2:
                lam[x] = lam[x] | u_bit
            else:
                if lam[x] == 0:
                    bad = <int> x
                    break
                nl = lam[x] & (~u_bit)
                if nl == 0:
                    dist[x] += 1
                    # sort key: (new distance, id)
                    emptied[n_empty] = dist[x] * (<cnp.int64_t> n + 1) + x
                    n_empty += 1
                else:
                    lam[x] = nl
    if bad >= 0:
        raise RuntimeError(f"inconsistent state: empty realizer set at {bad}")
    h_plus = n_empty

    if n_empty > 1:
        qsort(&emptied[0], n_empty, sizeof(cnp.int64_t), _cmp_i64)
    with nogil:
        for i in range(n_empty):
            x = emptied[i] % (<cnp.int64_t> n + 1)
            dtarget = dist[x] - 1
            bits = 0
            for i2 in range(indptr[x], indptr[x + 1]):
                y = nbrs[i2]
                if dist[y] == dtarget:
                    bits = bits | lam[y]
            if bits == 0:
                bad = <int> x
                break
            lam[x] = bits
    if bad >= 0:
        raise RuntimeError(f"inconsistent state: no realizer found for {bad}")

    with nogil:
        for i in range(n_slots):
            lamcount[i] = 0
        for x in range(n):
            nl = lam[x]
            if dist[x] > 0 and nl != 0 and (nl & (nl - 1)) == 0:
                lamcount[__builtin_ctzll(nl)] += 1

    delta = h_minus - h_plus
    return (int(delta), int(h_minus), int(h_plus), int(lam_u),
            int(lam_u_hm), int(l0), int(tail))


def gs_grow_update(cnp.int64_t[::1] indptr, cnp.int32_t[::1] nbrs,
                   cnp.float64_t[::1] wgts, bint weighted,
                   cnp.float64_t[::1] d, cnp.float64_t[::1] dp,
                   cnp.int64_t[::1] r, cnp.int64_t[::1] rp, cnp.int64_t v):
    cdef Py_ssize_t n = d.shape[0]
    cdef double delta = 0.0
    cdef cnp.int64_t visits = 0
    cdef Py_ssize_t size, head, tail, i
    cdef cnp.int64_t x, y
    cdef double dx, nd
    cdef cnp.ndarray[cnp.float64_t, ndim=1] dvw_arr
    cdef cnp.float64_t[::1] dvw
    cdef cnp.ndarray[cnp.int64_t, ndim=1] dvi_arr
    cdef cnp.int64_t[::1] dvi
    cdef cnp.ndarray[cnp.int64_t, ndim=1] queue_arr
    cdef cnp.int64_t[::1] queue
    cdef cnp.ndarray[cnp.float64_t, ndim=1] hk_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] hv_arr
    cdef double* hk
    cdef cnp.int64_t* hv
    if weighted:
        dvw_arr = np.full(n, INF)
        dvw = dvw_arr
        hk_arr = np.empty(nbrs.shape[0] + 2, dtype=np.float64)
        hv_arr = np.empty(nbrs.shape[0] + 2, dtype=np.int64)
        hk = &hk_arr[0]
        hv = &hv_arr[0]
        dvw[v] = 0.0
        size = heap_push(hk, hv, 0, 0.0, v)
        with nogil:
            while size > 0:
                dx = hk[0]
                x = hv[0]
                size = heap_pop(hk, hv, size)
                if dx > dvw[x]:
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
                    if nd < dvw[y] and nd < dp[y]:
                        dvw[y] = nd
                        size = heap_push(hk, hv, size, nd, y)
    else:
        dvi_arr = np.full(n, -1, dtype=np.int64)
        dvi = dvi_arr
        queue_arr = np.empty(n, dtype=np.int64)
        queue = queue_arr
        dvi[v] = 0
        queue[0] = v
        head = 0
        tail = 1
        with nogil:
            while head < tail:
                x = queue[head]
                head += 1
                dx = <double> dvi[x]
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
                    if dvi[y] < 0 and dx + 1.0 < dp[y]:
                        dvi[y] = dvi[x] + 1
                        queue[tail] = y
                        tail += 1
    return float(delta), int(visits)


def gs_repair(cnp.int64_t[::1] indptr, cnp.int32_t[::1] nbrs,
              cnp.float64_t[::1] wgts, bint weighted,
              cnp.float64_t[::1] d, cnp.int64_t[::1] r,
              cnp.float64_t[::1] dp, cnp.int64_t[::1] rp,
              cnp.uint8_t[::1] invalid):
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t cap = nbrs.shape[0] + n + 2
    cdef cnp.ndarray[cnp.float64_t, ndim=1] hk_arr = np.empty(cap, dtype=np.float64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] hv_arr = np.empty(cap, dtype=np.int64)
    cdef double* hk = &hk_arr[0]
    cdef cnp.int64_t* hv = &hv_arr[0]
    cdef Py_ssize_t size = 0, i
    cdef cnp.int64_t x, y, ry, rep, best_rep, rpx
    cdef cnp.int64_t visits = 0
    cdef double b, w, best, nd
    with nogil:
        for y in range(n):
            if not invalid[y]:
                continue
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
                size = heap_push(hk, hv, size, best, y)
        while size > 0:
            b = hk[0]
            x = hv[0]
            size = heap_pop(hk, hv, size)
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
                    size = heap_push(hk, hv, size, nd, y)
    return int(visits)
