"""graph6 codec and exhaustive generation of small connected graphs.

Generation enumerates every labeled graph on n vertices (one bit per vertex
pair, 2^(n(n-1)/2) masks) and keeps one representative per isomorphism class:
scanning masks in increasing order, the first unmarked mask starts a fresh
class, and its whole orbit under all n! vertex permutations is marked before
the scan continues.  The representative is therefore the minimum mask of its
class, which makes the output independent of any sharding of the mask space.
Emitted graphs are sorted by canonical form.  Capped at n = 7 (2^21 masks).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator

import numpy as np

from .errors import CapacityError, Graph6ParseError, InputError
from .graphs import Graph, canonical_form

#: graph6 short form covers orders 0..62; long-form headers are out of scope.
GRAPH6_MAX_ORDER = 62

#: Exhaustive generation cap (21 pair bits).
GENERATION_CAP = 7


def _pairs(n: int) -> list[tuple[int, int]]:
    # Upper triangle in column order, matching the graph6 bit layout.
    return [(i, j) for j in range(1, n) for i in range(j)]


def encode_graph6(G: Graph) -> str:
    """Standard short-form graph6 record of G (bit-exact, printable ASCII)."""
    if G.n > GRAPH6_MAX_ORDER:
        raise CapacityError(
            f"graph6 short form covers orders up to {GRAPH6_MAX_ORDER}, got {G.n}")
    out = [chr(G.n + 63)]
    group = 0
    filled = 0
    for i, j in _pairs(G.n):
        group = (group << 1) | ((G.adj[j] >> i) & 1)
        filled += 1
        if filled == 6:
            out.append(chr(group + 63))
            group = 0
            filled = 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


def decode_graph6(record: str | bytes) -> Graph:
    """Parse a short-form graph6 record; malformed input raises with an offset."""
    data = record.encode("ascii", errors="replace") if isinstance(record, str) else record
    if len(data) == 0:
        raise Graph6ParseError("empty graph6 record", 0)
    header = data[0]
    if header == 126:
        raise Graph6ParseError("long-form graph6 headers are not supported", 0)
    if not 63 <= header <= 63 + GRAPH6_MAX_ORDER:
        raise Graph6ParseError(f"invalid header byte {header}", 0)
    n = header - 63
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    if len(data) < 1 + nbytes:
        raise Graph6ParseError(
            f"record too short: order {n} needs {nbytes} body bytes", len(data))
    if len(data) > 1 + nbytes:
        raise Graph6ParseError(f"trailing bytes after order-{n} record", 1 + nbytes)
    rows = [0] * n
    pairs = _pairs(n)
    for b in range(nbytes):
        byte = data[1 + b]
        if not 63 <= byte <= 126:
            raise Graph6ParseError(f"body byte {byte} outside printable range", 1 + b)
        group = byte - 63
        for k in range(6):
            pos = b * 6 + k
            bit_value = (group >> (5 - k)) & 1
            if pos >= npairs:
                if bit_value:
                    raise Graph6ParseError("nonzero padding bits", 1 + b)
                continue
            if bit_value:
                i, j = pairs[pos]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows)


# -- exhaustive connected generation up to isomorphism ------------------------


def _mask_rows(mask: int, n: int, pairs: list[tuple[int, int]]) -> list[int]:
    rows = [0] * n
    for k, (i, j) in enumerate(pairs):
        if (mask >> k) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return rows


def _mask_connected(mask: int, n: int, pairs: list[tuple[int, int]]) -> bool:
    rows = _mask_rows(mask, n, pairs)
    comp = 1
    frontier = rows[0]
    while frontier & ~comp:
        comp |= frontier
        nxt = 0
        rest = frontier
        while rest:
            low = rest & -rest
            nxt |= rows[low.bit_length() - 1]
            rest ^= low
        frontier = nxt & ~comp
    return comp == (1 << n) - 1


def _orbit_weights(n: int, pairs: list[tuple[int, int]]) -> np.ndarray:
    # weights[p, k] = the mask contribution of pair bit k under permutation p.
    index = {pair: k for k, pair in enumerate(pairs)}
    perms = list(permutations(range(n)))
    dst = np.empty((len(perms), len(pairs)), dtype=np.int64)
    for p, perm in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            dst[p, k] = index[(a, b) if a < b else (b, a)]
    return np.left_shift(np.int64(1), dst)


@lru_cache(maxsize=None)
def _representatives(n: int) -> tuple[Graph, ...]:
    pairs = _pairs(n)
    npairs = len(pairs)
    if npairs == 0:
        return (Graph(n, [0] * n),)
    weights = _orbit_weights(n, pairs)
    seen = np.zeros(1 << npairs, dtype=bool)
    rep_masks = []
    for mask in range(1 << npairs):
        if seen[mask]:
            continue
        onbits = [k for k in range(npairs) if (mask >> k) & 1]
        if onbits:
            orbit = weights[:, onbits].sum(axis=1)
            seen[orbit] = True
        else:
            seen[0] = True
        if _mask_connected(mask, n, pairs):
            rep_masks.append(mask)
    graphs = [Graph(n, _mask_rows(m, n, pairs)) for m in rep_masks]
    graphs.sort(key=canonical_form)
    return tuple(graphs)


def connected_graphs_up_to_iso(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices."""
    if n < 1:
        raise InputError(f"generation needs n >= 1, got {n}")
    if n > GENERATION_CAP:
        raise CapacityError(f"exhaustive generation capped at order {GENERATION_CAP}, got {n}")
    yield from _representatives(n)
