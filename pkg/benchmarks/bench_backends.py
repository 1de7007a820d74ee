#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times each traversal kernel on the same inputs for both backends, checks
that the outputs are identical, and (unless --quick) also times an
end-to-end gs-extended run in two subprocesses, one per backend.

Usage: python benchmarks/bench_backends.py [--quick]
"""

import argparse
import json
import os
import subprocess
import sys
import tempfile
import time

import numpy as np

from groupcloseness import _kernels_py
from groupcloseness.generators import grid, preferential_attachment
from groupcloseness.graph import to_edge_list
from groupcloseness.growshrink import gs_init
from groupcloseness.localswap import ls_init
from groupcloseness.reach import descending_dist_order
from groupcloseness.sssp import multi_source_sssp

try:
    from groupcloseness import _ckernels
except ImportError:
    print("compiled extension not built; run `pip install -e . "
          "--no-build-isolation` first", file=sys.stderr)
    sys.exit(1)


def timed(fn, repeats=3):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def row(name, n, t_py, t_c, equal):
    speedup = t_py / t_c if t_c > 0 else float("inf")
    flag = "ok" if equal else "MISMATCH"
    print(f"{name:<22} n={n:<7} python={1000 * t_py:9.2f}ms "
          f"compiled={1000 * t_c:8.2f}ms speedup={speedup:7.1f}x  {flag}")


def bench_kernels():
    g = grid(100, 100)
    gp = preferential_attachment(10000, 3, seed=4)
    gw = grid(100, 100, seed=2, weighted=True, max_weight=10)
    src = np.array([0, 5000], dtype=np.int64)

    def run_bfs(mod, graph):
        dist = np.empty(graph.n, dtype=np.int64)
        order = np.empty(graph.n, dtype=np.int64)
        mod.bfs_multi(graph.indptr, graph.nbrs, src, dist, order)
        return dist

    t_py, d_py = timed(lambda: run_bfs(_kernels_py, g))
    t_c, d_c = timed(lambda: run_bfs(_ckernels, g))
    row("bfs_multi (grid)", g.n, t_py, t_c, np.array_equal(d_py, d_c))

    def run_dij(mod):
        dist = np.empty(gw.n, dtype=np.float64)
        order = np.empty(gw.n, dtype=np.int64)
        mod.dijkstra_multi(gw.indptr, gw.nbrs, gw.wgts, src, dist, order)
        return dist

    t_py, d_py = timed(lambda: run_dij(_kernels_py))
    t_c, d_c = timed(lambda: run_dij(_ckernels))
    row("dijkstra_multi", gw.n, t_py, t_c, np.array_equal(d_py, d_c))

    dist = np.asarray(multi_source_sssp(gp, [0, 17]), dtype=np.float64)
    order = descending_dist_order(dist)
    draws = np.random.default_rng(0).integers(
        0, 1 << 16, size=(gp.n, 16), dtype=np.uint32)

    def run_sketch(mod):
        vals = draws.copy()
        mod.sketch_propagate(gp.indptr, gp.nbrs, gp.wgts, dist, order, vals)
        return vals

    t_py, v_py = timed(lambda: run_sketch(_kernels_py))
    t_c, v_c = timed(lambda: run_sketch(_ckernels))
    row("sketch_propagate", gp.n, t_py, t_c, np.array_equal(v_py, v_c))

    gs = grid(28, 28)
    t_py, f_py = timed(lambda: _kernels_py.singleton_farness(
        gs.indptr, gs.nbrs, gs.wgts, False), repeats=1)
    t_c, f_c = timed(lambda: _ckernels.singleton_farness(
        gs.indptr, gs.nbrs, gs.wgts, False), repeats=1)
    row("singleton_farness", gs.n, t_py, t_c, np.array_equal(f_py, f_c))

    ls_state = ls_init(g, [0, g.n // 2])
    swap_v = int(g.neighbors(0)[0])

    def run_ls(mod):
        dist = ls_state.dist.copy()
        lam = ls_state.lam.copy()
        cnt = ls_state.lamcount.copy()
        out = mod.ls_apply_swap(g.indptr, g.nbrs, dist, lam, cnt, 0, swap_v, 2)
        return out, dist, lam

    t_py, o_py = timed(lambda: run_ls(_kernels_py))
    t_c, o_c = timed(lambda: run_ls(_ckernels))
    equal = o_py[0] == o_c[0] and all(np.array_equal(a, b)
                                      for a, b in zip(o_py[1:], o_c[1:]))
    row("ls_apply_swap", g.n, t_py, t_c, equal)

    gs_state = gs_init(gw, [0, gw.n // 2])

    def run_gs(mod):
        d, dp = gs_state.d.copy(), gs_state.dp.copy()
        r, rp = gs_state.r.copy(), gs_state.rp.copy()
        mod.gs_grow_update(gw.indptr, gw.nbrs, gw.wgts, True,
                           d, dp, r, rp, gw.n - 1)
        in_region = r == 0
        invalid = in_region | (rp == 0)
        d[in_region] = dp[in_region]
        r[in_region] = rp[in_region]
        dp[invalid] = np.inf
        rp[invalid] = -1
        mod.gs_repair(gw.indptr, gw.nbrs, gw.wgts, True,
                      d, r, dp, rp, invalid.astype(np.uint8))
        return d, dp

    t_py, o_py = timed(lambda: run_gs(_kernels_py))
    t_c, o_c = timed(lambda: run_gs(_ckernels))
    equal = all(np.array_equal(a, b) for a, b in zip(o_py, o_c))
    row("gs_grow + gs_repair", gw.n, t_py, t_c, equal)


def bench_end_to_end():
    g = grid(40, 40)
    with tempfile.NamedTemporaryFile("w", suffix=".edges", delete=False) as fh:
        fh.write(to_edge_list(g))
        path = fh.name
    try:
        reports = {}
        for backend in ("compiled", "python"):
            env = dict(os.environ, GROUP_CLOSENESS_BACKEND=backend)
            t0 = time.perf_counter()
            out = subprocess.run(
                [sys.executable, "-m", "groupcloseness.cli", "maximize",
                 "--algo", "gs-extended", "--k", "5", "--input", path,
                 "--format", "edgelist", "--seed", "1"],
                capture_output=True, text=True, env=env, check=True)
            elapsed = time.perf_counter() - t0
            reports[backend] = (json.loads(out.stdout), elapsed)
        r_c, t_c = reports["compiled"]
        r_py, t_py = reports["python"]
        equal = (r_c["group"] == r_py["group"]
                 and r_c["farness"] == r_py["farness"])
        row("gs-extended end-to-end", 1600, t_py, t_c, equal)
    finally:
        os.unlink(path)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true",
                        help="skip the end-to-end subprocess comparison")
    args = parser.parse_args()
    print("backend comparison (best of 3, identical inputs)")
    bench_kernels()
    if not args.quick:
        bench_end_to_end()


if __name__ == "__main__":
    main()
