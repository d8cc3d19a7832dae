"""Constructors for the named graph families used throughout the harness.

Vertex numbering is fixed and documented per family so that hand-written
vertex sets (gadgets, expected values in tests) can refer to stable indices.
"""

from __future__ import annotations

from .errors import InputError
from .graphs import Graph


def complete(n: int) -> Graph:
    """K_n."""
    if n < 1:
        raise InputError(f"complete graph needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)], name=f"K{n}")


def path(n: int) -> Graph:
    """P_n with vertices 0 - 1 - ... - (n-1)."""
    if n < 1:
        raise InputError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)], name=f"P{n}")


def cycle(n: int) -> Graph:
    """C_n with vertices 0 - 1 - ... - (n-1) - 0."""
    if n < 3:
        raise InputError(f"cycle needs n >= 3, got {n}")
    edges = [(v, (v + 1) % n) for v in range(n)]
    return Graph.from_edges(n, edges, name=f"C{n}")


def complete_bipartite(r: int, s: int) -> Graph:
    """K_{r,s} with one side 0..r-1 and the other r..r+s-1."""
    if r < 1 or s < 1:
        raise InputError(f"complete bipartite needs r, s >= 1, got ({r}, {s})")
    edges = [(a, r + b) for a in range(r) for b in range(s)]
    return Graph.from_edges(r + s, edges, name=f"K{r},{s}")


def _with_leaves(base: Graph, hubs: int, counts: tuple[int, int, int], name: str) -> Graph:
    l1, l2, l3 = counts
    if min(counts) < 0:
        raise InputError(f"leaf counts must be non-negative, got {counts}")
    if l1 + l2 + l3 < 1:
        raise InputError("at least one leaf is required")
    edges = list(base.edges())
    nxt = base.n
    for hub, count in enumerate(counts):
        for _ in range(count):
            edges.append((hub, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges, name=name)


def family_f1(l1: int, l2: int, l3: int) -> Graph:
    """Triangle 0,1,2 with l_i leaves attached to hub i-1; order 3 + l1 + l2 + l3.

    Leaves are numbered consecutively from 3: first the l1 leaves of hub 0,
    then those of hub 1, then hub 2.
    """
    return _with_leaves(complete(3), 3, (l1, l2, l3), name=f"F1({l1},{l2},{l3})")


def family_f2(l1: int, l2: int, l3: int) -> Graph:
    """K_4 on 0,1,2,3 with leaves on hubs 0,1,2 only; vertex 3 keeps degree 3."""
    return _with_leaves(complete(4), 3, (l1, l2, l3), name=f"F2({l1},{l2},{l3})")
