"""Shared fixtures: small canonical graphs referenced all over the test
suite, plus helpers for oracle-grade reachability estimates."""

import numpy as np
import pytest

from groupcloseness import build_group_dag, exact_reach_sizes, parse_edge_list
from groupcloseness.graph import Graph
from groupcloseness.reach import ReachEstimate


@pytest.fixture
def p4():
    # path 0-1-2-3
    return parse_edge_list("0 1\n1 2\n2 3")


@pytest.fixture
def p5():
    # path 0-1-2-3-4
    return parse_edge_list("0 1\n1 2\n2 3\n3 4")


@pytest.fixture
def c4():
    # cycle 0-1-2-3-0
    return parse_edge_list("0 1\n1 2\n2 3\n3 0")


@pytest.fixture
def star5():
    # center 0, leaves 1..4
    return parse_edge_list("0 1\n0 2\n0 3\n0 4")


@pytest.fixture
def wp3():
    # weighted path 0-1 (w=2), 1-2 (w=3)
    return parse_edge_list("0 1 2\n1 2 3", weighted=True)


def exact_estimate(g, S):
    """ReachEstimate carrying the exact |D_v| values (selection oracle)."""
    sizes = exact_reach_sizes(build_group_dag(g, S))
    return ReachEstimate(est=sizes.astype(np.float64), samples=0, width=0)


def graph_from_edges(n, edges, weighted=False):
    us = [e[0] for e in edges]
    vs = [e[1] for e in edges]
    ws = [e[2] for e in edges] if weighted else None
    return Graph.from_edges(n, us, vs, ws, weighted=weighted)
