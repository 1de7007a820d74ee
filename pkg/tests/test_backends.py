"""The compiled extension and the pure-Python kernels must agree exactly."""

import numpy as np
import pytest

from groupcloseness import _kernels_py
from groupcloseness.generators import connected_gnp
from groupcloseness.localswap import ls_init
from groupcloseness.growshrink import gs_init
from groupcloseness.reach import descending_dist_order
from groupcloseness.sssp import multi_source_sssp

compiled = pytest.importorskip(
    "groupcloseness._ckernels", reason="compiled extension not built"
)

BACKENDS = [_kernels_py, compiled]


def graphs():
    for trial in range(8):
        yield connected_gnp(35, 0.15, seed=trial, weighted=bool(trial % 2))


def run_both(fn_name, *args_factory):
    outs = []
    for mod in BACKENDS:
        args = [a.copy() if isinstance(a, np.ndarray) else a
                for a in args_factory]
        outs.append((getattr(mod, fn_name)(*args), args))
    return outs


class TestTraversalTwins:
    def test_bfs_and_dijkstra(self):
        for g in graphs():
            src = np.array([0, g.n // 2], dtype=np.int64)
            if g.weighted:
                d1, d2 = np.empty(g.n), np.empty(g.n)
                o1, o2 = np.empty(g.n, np.int64), np.empty(g.n, np.int64)
                c1 = _kernels_py.dijkstra_multi(g.indptr, g.nbrs, g.wgts, src, d1, o1)
                c2 = compiled.dijkstra_multi(g.indptr, g.nbrs, g.wgts, src, d2, o2)
            else:
                d1, d2 = np.empty(g.n, np.int64), np.empty(g.n, np.int64)
                o1, o2 = np.empty(g.n, np.int64), np.empty(g.n, np.int64)
                c1 = _kernels_py.bfs_multi(g.indptr, g.nbrs, src, d1, o1)
                c2 = compiled.bfs_multi(g.indptr, g.nbrs, src, d2, o2)
            assert c1 == c2
            assert np.array_equal(d1, d2)
            assert np.array_equal(o1, o2)

    def test_singleton_farness(self):
        for g in graphs():
            f1 = _kernels_py.singleton_farness(g.indptr, g.nbrs, g.wgts, g.weighted)
            f2 = compiled.singleton_farness(g.indptr, g.nbrs, g.wgts, g.weighted)
            assert np.array_equal(f1, f2)

    def test_sketch_propagate(self):
        for g in graphs():
            dist = np.asarray(multi_source_sssp(g, [0]), dtype=np.float64)
            order = descending_dist_order(dist)
            vals = np.random.default_rng(4).integers(
                0, 1 << 16, size=(g.n, 16), dtype=np.uint32)
            v1, v2 = vals.copy(), vals.copy()
            _kernels_py.sketch_propagate(g.indptr, g.nbrs, g.wgts, dist, order, v1)
            compiled.sketch_propagate(g.indptr, g.nbrs, g.wgts, dist, order, v2)
            assert np.array_equal(v1, v2)

    def test_greedy_kernels(self):
        for g in graphs():
            dist = np.asarray(multi_source_sssp(g, [0]), dtype=np.float64)
            in_group = np.zeros(g.n, dtype=np.uint8)
            in_group[0] = 1
            r1 = _kernels_py.greedy_best_addition(
                g.indptr, g.nbrs, g.wgts, g.weighted, dist.copy(), in_group)
            r2 = compiled.greedy_best_addition(
                g.indptr, g.nbrs, g.wgts, g.weighted, dist.copy(), in_group)
            assert r1 == r2
            d1, d2 = dist.copy(), dist.copy()
            u1 = _kernels_py.greedy_add_update(
                g.indptr, g.nbrs, g.wgts, g.weighted, d1, r1[0])
            u2 = compiled.greedy_add_update(
                g.indptr, g.nbrs, g.wgts, g.weighted, d2, r2[0])
            assert u1 == u2 and np.array_equal(d1, d2)


class TestStateKernelTwins:
    def test_ls_apply_swap(self):
        for g in graphs():
            if g.weighted:
                continue
            st1 = ls_init(g, [0, g.n // 2])
            st2 = ls_init(g, [0, g.n // 2])
            # v adjacent to member 0 keeps the swap single-hop valid
            candidates = [int(y) for y in g.neighbors(0) if st1.dist[y] == 1]
            if not candidates:
                continue
            v = candidates[0]
            out1 = _kernels_py.ls_apply_swap(
                g.indptr, g.nbrs, st1.dist, st1.lam, st1.lamcount, 0, v, 2)
            out2 = compiled.ls_apply_swap(
                g.indptr, g.nbrs, st2.dist, st2.lam, st2.lamcount, 0, v, 2)
            assert out1 == out2
            assert np.array_equal(st1.dist, st2.dist)
            assert np.array_equal(st1.lam, st2.lam)
            assert np.array_equal(st1.lamcount, st2.lamcount)

    def test_gs_grow_and_repair(self):
        for g in graphs():
            states = [gs_init(g, [0, g.n // 2]) for _ in range(2)]
            v = int(np.flatnonzero(states[0].d > 0)[-1])
            outs = []
            for st, mod in zip(states, BACKENDS):
                outs.append(mod.gs_grow_update(
                    g.indptr, g.nbrs, g.wgts, g.weighted,
                    st.d, st.dp, st.r, st.rp, v))
            assert outs[0] == outs[1]
            for field in ("d", "dp", "r", "rp"):
                assert np.array_equal(getattr(states[0], field),
                                      getattr(states[1], field))
            # now remove vertex 0 and compare the repair
            for st, mod in zip(states, BACKENDS):
                in_region = st.r == 0
                invalid = in_region | (st.rp == 0)
                st.d[in_region] = st.dp[in_region]
                st.r[in_region] = st.rp[in_region]
                st.dp[invalid] = np.inf
                st.rp[invalid] = -1
                mod.gs_repair(g.indptr, g.nbrs, g.wgts, g.weighted,
                              st.d, st.r, st.dp, st.rp,
                              invalid.astype(np.uint8))
            for field in ("d", "dp", "r", "rp"):
                assert np.array_equal(getattr(states[0], field),
                                      getattr(states[1], field))
