"""Immutable simple graphs over 0-based integer vertex ids.

Vertex sets are plain Python ints used as bit vectors: bit ``v`` set means
vertex ``v`` is a member.  All set algebra is therefore ``|``, ``&``, ``~``
masked to the graph's universe.  Adjacency is stored as one bit row per
vertex (the open neighborhood), validated symmetric and irreflexive on
construction.  Graphs are never mutated after ``__init__``; every operation
below is a pure function and safe to call from concurrent workers.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional

from .errors import CapacityError, InputError, PreconditionError

#: Hard upper bound on vertex count (covers two order-11 factors of a product).
CAPACITY = 128

#: Largest order accepted by canonical_form / is_isomorphic.
ISO_CAP = 10


def bit(v: int) -> int:
    """Singleton vertex set {v}."""
    return 1 << v


def mask_of(vertices: Iterable[int]) -> int:
    """Vertex set containing exactly the given ids."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Member ids of a vertex set, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_members(mask: int) -> Iterator[int]:
    """Yield member ids ascending without materializing a list."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph with bit-vector adjacency rows.

    ``adj[v]`` is the open neighborhood of ``v`` as a bit mask.  ``name`` is a
    free-form label carried along for reports; it is ignored by equality.
    """

    __slots__ = ("n", "adj", "name")

    def __init__(self, n: int, adj: Iterable[int], name: Optional[str] = None):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        if n > CAPACITY:
            raise CapacityError(f"order {n} exceeds the vertex capacity {CAPACITY}")
        rows = tuple(adj)
        if len(rows) != n:
            raise InputError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise InputError(f"adjacency row of vertex {v} mentions ids >= {n}")
            if (row >> v) & 1:
                raise InputError(f"vertex {v} is adjacent to itself")
        for v, row in enumerate(rows):
            for u in iter_members(row):
                if not (rows[u] >> v) & 1:
                    raise InputError(f"adjacency is not symmetric on pair ({v}, {u})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)
        object.__setattr__(self, "name", name)

    def __setattr__(self, key, value):
        raise AttributeError("Graph instances are immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   name: Optional[str] = None) -> "Graph":
        """Build a graph on ``n`` vertices from an edge list."""
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise InputError(f"loop at vertex {u} not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, name)

    # -- basic accessors ----------------------------------------------------

    @property
    def full_mask(self) -> int:
        """The whole vertex set V(G) as a mask."""
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, lexicographic."""
        return [(u, v) for u in range(self.n)
                for v in members(self.adj[u]) if u < v]

    def is_complete(self) -> bool:
        return self.edge_count() == self.n * (self.n - 1) // 2

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InputError(f"vertex {v} out of range for order {self.n}")

    def _check_set(self, S: int) -> None:
        if S < 0 or S & ~self.full_mask:
            raise InputError(f"vertex set {S:#x} is not within a universe of size {self.n}")

    # -- neighborhood algebra -----------------------------------------------

    def open_neighborhood(self, v: int) -> int:
        """N(v); never contains v."""
        self._check_vertex(v)
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> int:
        """N[v] = N(v) + v."""
        self._check_vertex(v)
        return self.adj[v] | (1 << v)

    def open_neighborhood_of_set(self, S: int) -> int:
        """N(S) = union of N(v) over v in S."""
        self._check_set(S)
        out = 0
        for v in iter_members(S):
            out |= self.adj[v]
        return out

    def closed_neighborhood_of_set(self, S: int) -> int:
        """N[S] = N(S) + S.  Empty S gives the empty set."""
        return self.open_neighborhood_of_set(S) | S

    def is_independent(self, S: int) -> bool:
        """True when no two members of S are adjacent."""
        self._check_set(S)
        for v in iter_members(S):
            if self.adj[v] & S:
                return False
        return True

    # -- subgraphs and components -------------------------------------------

    def induced_subgraph(self, S: int) -> tuple["Graph", tuple[int, ...]]:
        """Subgraph induced on S plus the order-preserving map.

        The second value lists the old ids kept, ascending; new id ``i``
        corresponds to old id ``kept[i]``.
        """
        self._check_set(S)
        kept = members(S)
        index = {old: new for new, old in enumerate(kept)}
        rows = []
        for old in kept:
            row = 0
            for u in iter_members(self.adj[old] & S):
                row |= 1 << index[u]
            rows.append(row)
        return Graph(len(kept), rows), tuple(kept)

    def remove_closed_neighborhood(self, I: int) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on V(G) - N[I] for an independent set I.

        May return the empty graph.  Raises when I is not independent.
        """
        self._check_set(I)
        if not self.is_independent(I):
            raise PreconditionError("the removed set must be independent")
        keep = self.full_mask & ~self.closed_neighborhood_of_set(I)
        return self.induced_subgraph(keep)

    def components(self) -> list[tuple["Graph", tuple[int, ...]]]:
        """Connected components as induced subgraphs, ordered by smallest old id."""
        out = []
        seen = 0
        for v in range(self.n):
            if (seen >> v) & 1:
                continue
            comp = 1 << v
            frontier = self.adj[v]
            while frontier & ~comp:
                comp |= frontier
                nxt = 0
                for u in iter_members(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
            seen |= comp
            out.append(self.induced_subgraph(comp))
        return out

    def is_connected(self) -> bool:
        """True iff the graph has exactly one component.  Undefined for n = 0."""
        if self.n == 0:
            raise InputError("connectivity of the empty graph is undefined")
        return len(self.components()) == 1

    # -- numeric invariants ---------------------------------------------------

    def max_degree(self) -> int:
        if self.n == 0:
            raise InputError("max degree of the empty graph is undefined")
        return max(row.bit_count() for row in self.adj)

    def girth(self) -> Optional[int]:
        """Length of a shortest cycle, or None for forests.

        BFS from every root; a non-tree edge (u, w) closes a walk of length
        dist(u) + dist(w) + 1 >= girth, with equality reached from roots on a
        shortest cycle.
        """
        best: Optional[int] = None
        for root in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in iter_members(self.adj[u]):
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif w != parent[u]:
                        length = dist[u] + dist[w] + 1
                        if best is None or length < best:
                            best = length
            if best == 3:
                return 3
        return best

    # -- relabeling -----------------------------------------------------------

    def relabeled(self, perm: Iterable[int]) -> "Graph":
        """Image under the permutation ``perm`` (perm[old id] = new id)."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise InputError("relabeling must be a permutation of the vertex ids")
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()],
                                self.name)

    # -- dunder ---------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} e={self.edge_count()}>"

    def __getstate__(self):
        return (self.n, self.adj, self.name)

    def __setstate__(self, state):
        n, adj, name = state
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "name", name)


def disjoint_union(G: Graph, H: Graph, name: Optional[str] = None) -> Graph:
    """G together with a shifted copy of H (H's vertex v becomes n(G) + v)."""
    n = G.n + H.n
    if n > CAPACITY:
        raise CapacityError(f"union order {n} exceeds the vertex capacity {CAPACITY}")
    rows = list(G.adj) + [row << G.n for row in H.adj]
    return Graph(n, rows, name)


# -- isomorphism ---------------------------------------------------------------

def _minimal_columns(G: Graph) -> list[int]:
    # Lexicographically smallest column sequence of the upper-triangle
    # adjacency bits over all vertex orders that keep degree classes
    # contiguous (classes in descending degree order).  The class structure
    # is isomorphism-invariant, so the minimum is a sound canonical form.
    # Branch and bound with the smallest column tried first: the first full
    # descent is the greedy optimum, and every node compares its settled
    # prefix against the current best afresh, so pruning never goes stale.
    n = G.n
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(G.adj[v].bit_count(), []).append(v)
    classes = [by_degree[d] for d in sorted(by_degree, reverse=True)]
    pos_class = [k for k, cls in enumerate(classes) for _ in cls]
    adj = G.adj
    used = [False] * n
    prefix = [0] * n
    cols = [0] * max(n - 1, 0)
    best: Optional[list[int]] = None

    def prefix_vs_best(settled: int) -> int:
        for i in range(settled):
            if cols[i] != best[i]:
                return -1 if cols[i] < best[i] else 1
        return 0

    def dfs(p: int) -> None:
        nonlocal best
        if p == n:
            if best is None or cols < best:
                best = cols.copy()
            return
        if p == 0:
            for v in classes[pos_class[0]]:
                used[v] = True
                prefix[0] = v
                dfs(1)
                used[v] = False
            return
        scored = []
        for v in classes[pos_class[p]]:
            if used[v]:
                continue
            row = adj[v]
            col = 0
            for i in range(p):
                col = (col << 1) | ((row >> prefix[i]) & 1)
            scored.append((col, v))
        scored.sort()
        for col, v in scored:
            if best is not None:
                settled = prefix_vs_best(p - 1)
                if settled > 0:
                    return  # an ancestor column is already beaten
                if settled == 0 and col > best[p - 1]:
                    break  # sorted: every later candidate is at least as large
            cols[p - 1] = col
            used[v] = True
            prefix[p] = v
            dfs(p + 1)
            used[v] = False

    dfs(0)
    assert best is not None
    return best


def canonical_form(G: Graph) -> bytes:
    """Canonical byte string: equal for two graphs iff they are isomorphic.

    Minimizes the packed upper-triangle adjacency bit string over the vertex
    orders produced by degree-class partitioning.  Capped at n <= ISO_CAP.
    """
    if G.n > ISO_CAP:
        raise CapacityError(f"canonical form capped at order {ISO_CAP}, got {G.n}")
    n = G.n
    npairs = n * (n - 1) // 2
    e = G.edge_count()
    if e == 0 or e == npairs:
        # Edgeless and complete graphs admit every order; the bit string is
        # constant, and searching the fully ambiguous order space would cost n!.
        value = (1 << npairs) - 1 if e else 0
    else:
        value = 0
        for p, col in enumerate(_minimal_columns(G), start=1):
            value = (value << p) | col
    nbytes = (npairs + 7) // 8
    return bytes([n]) + (value << (nbytes * 8 - npairs)).to_bytes(nbytes, "big")


def is_isomorphic(G: Graph, H: Graph) -> bool:
    """Exact isomorphism test via canonical forms (orders capped at ISO_CAP)."""
    if G.n != H.n or G.edge_count() != H.edge_count():
        return False
    if sorted(r.bit_count() for r in G.adj) != sorted(r.bit_count() for r in H.adj):
        return False
    return canonical_form(G) == canonical_form(H)
