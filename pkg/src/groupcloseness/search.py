"""Shared plumbing for the local-search drivers."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


# The reachability estimates are randomized, so a rejected exchange does
# not prove a local optimum; searches retry with fresh estimates and stop
# only after this many consecutive failures.
DEFAULT_STALL_LIMIT = 16


class WeightedGraphError(ValueError):
    """Raised when a weighted graph is passed to an unweighted-only
    algorithm (the Local-Swaps family)."""


@dataclass
class SearchResult:
    """Outcome of one local-search run."""

    group: list
    farness: float
    exchanges: int
    trace: list = field(default_factory=list)


def draw_initial_group(rng, n, k):
    """k distinct vertices, uniformly at random."""
    return rng.choice(n, size=k, replace=False).astype(np.int64)


def neighborhood_mask(g, members, exclude):
    """Boolean mask of vertices adjacent to the member set, minus the
    vertices flagged in ``exclude``."""
    mask = np.zeros(g.n, dtype=bool)
    for w in members:
        mask[g.neighbors(w)] = True
    mask &= ~exclude
    return mask
