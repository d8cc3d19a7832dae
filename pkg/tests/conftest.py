"""Shared helpers for the test suite."""

from __future__ import annotations

import random

from welldom import Graph, members


def as_sets(masks) -> set[frozenset[int]]:
    """Set-of-sets view of a stream of vertex-set masks."""
    return {frozenset(members(m)) for m in masks}


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def pair_order(n: int) -> list[tuple[int, int]]:
    """Upper-triangle pairs in graph6 column order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_mask(n: int, mask: int) -> Graph:
    edges = [pair for k, pair in enumerate(pair_order(n)) if (mask >> k) & 1]
    return Graph.from_edges(n, edges)
