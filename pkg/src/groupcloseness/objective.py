"""Ground-truth farness/closeness evaluation and brute-force oracles."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .sssp import multi_source_sssp

BRUTE_FORCE_CAP = 10**7


class EnumerationCapError(ValueError):
    """Instance too large for the brute-force oracle."""


@dataclass
class GroupScore:
    farness: float
    closeness: float


def farness(g, S):
    """f(S) = sum of dist(S, x) over all x outside S, computed exactly."""
    members = np.unique(np.asarray(list(S), dtype=np.int64))
    dist = multi_source_sssp(g, members)
    mask = np.ones(g.n, dtype=bool)
    mask[members] = False
    return float(dist[mask].sum())


def closeness(g, S):
    """C(S) = |V| / f(S). The numerator counts all vertices, members too."""
    return g.n / farness(g, S)


def score(g, S):
    f = farness(g, S)
    return GroupScore(farness=f, closeness=g.n / f)


def delta_minus_exact(g, S, v):
    """Farness decrease f(S) - f(S + v) from adding v, via two evaluations."""
    S = set(int(x) for x in S)
    if int(v) in S:
        raise ValueError(f"vertex {v} already in the group")
    return farness(g, S) - farness(g, S | {int(v)})


def delta_plus_exact(g, S, u):
    """Farness increase f(S - u) - f(S) from removing u, via two evaluations."""
    S = set(int(x) for x in S)
    if int(u) not in S:
        raise ValueError(f"vertex {u} not in the group")
    if len(S) < 2:
        raise ValueError("cannot remove from a singleton group")
    return farness(g, S - {int(u)}) - farness(g, S)


def brute_force_optimum(g, k):
    """Enumerate all size-k groups; return the lexicographically smallest
    argmin of farness as ``(group, farness)``."""
    n = g.n
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    if math.comb(n, k) > BRUTE_FORCE_CAP:
        raise EnumerationCapError(
            f"C({n},{k}) exceeds the enumeration cap of {BRUTE_FORCE_CAP}"
        )
    best_group = None
    best_f = math.inf
    for combo in itertools.combinations(range(n), k):
        f = farness(g, combo)
        if f < best_f:
            best_f = f
            best_group = combo
    return list(best_group), best_f
