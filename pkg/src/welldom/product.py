"""Cartesian products with explicit coordinate bookkeeping.

Product ids use the fixed row-major encoding ``(g, h) -> g * n(H) + h`` so
that vertex numbers in reports are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, InputError
from .graphs import CAPACITY, Graph, iter_members


@dataclass(frozen=True)
class ProductMap:
    """Bijection between product ids and coordinate pairs of the two factors."""

    n_left: int
    n_right: int

    def encode(self, g: int, h: int) -> int:
        if not (0 <= g < self.n_left and 0 <= h < self.n_right):
            raise InputError(f"coordinates ({g}, {h}) out of range "
                             f"for factors of order {self.n_left}, {self.n_right}")
        return g * self.n_right + h

    def decode(self, p: int) -> tuple[int, int]:
        if not (0 <= p < self.n_left * self.n_right):
            raise InputError(f"product id {p} out of range")
        return divmod(p, self.n_right)

    def layer(self, axis: str, fixed: int) -> int:
        """All product ids copying one factor at a fixed vertex of the other.

        ``axis="H"`` with ``fixed=g`` gives the H-layer {(g, h) : h in V(H)};
        ``axis="G"`` with ``fixed=h`` gives the G-layer {(g, h) : g in V(G)}.
        """
        if axis == "H":
            if not 0 <= fixed < self.n_left:
                raise InputError(f"layer base vertex {fixed} out of range")
            return ((1 << self.n_right) - 1) << (fixed * self.n_right)
        if axis == "G":
            if not 0 <= fixed < self.n_right:
                raise InputError(f"layer base vertex {fixed} out of range")
            out = 0
            for g in range(self.n_left):
                out |= 1 << (g * self.n_right + fixed)
            return out
        raise InputError(f'layer axis must be "G" or "H", got {axis!r}')

    def lift_set(self, A: int, B: int) -> int:
        """The product set A x B = {encode(a, b) : a in A, b in B}."""
        if A < 0 or A >> self.n_left:
            raise InputError("left factor set out of range")
        if B < 0 or B >> self.n_right:
            raise InputError("right factor set out of range")
        out = 0
        for a in iter_members(A):
            out |= B << (a * self.n_right)
        return out


def cartesian_product(G: Graph, H: Graph) -> tuple[Graph, ProductMap]:
    """G box H: (g1,h1) ~ (g2,h2) iff equal in one coordinate, adjacent in the other."""
    n = G.n * H.n
    if n > CAPACITY:
        raise CapacityError(f"product order {n} exceeds the vertex capacity {CAPACITY}")
    pm = ProductMap(G.n, H.n)
    # Row of (g, h): H-neighbors stay in block g; G-neighbors shift whole blocks.
    col = [0] * G.n
    for g in range(G.n):
        for g2 in iter_members(G.adj[g]):
            col[g] |= 1 << (g2 * H.n)
    rows = []
    for g in range(G.n):
        base = g * H.n
        for h in range(H.n):
            rows.append((H.adj[h] << base) | (col[g] << h))
    name = None
    if G.name and H.name:
        name = f"{G.name} x {H.name}"
    return Graph(n, rows, name), pm


def layer(pm: ProductMap, axis: str, fixed: int) -> int:
    """Module-level alias of ProductMap.layer."""
    return pm.layer(axis, fixed)


def lift_set(pm: ProductMap, A: int, B: int) -> int:
    """Module-level alias of ProductMap.lift_set."""
    return pm.lift_set(A, B)
