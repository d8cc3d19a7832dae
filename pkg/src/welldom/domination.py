"""Exact domination and independence machinery.

The two enumeration engines share one scheme: branch on the least-index
vertex not yet dominated, try each admissible dominator of it in ascending
order, and forbid a candidate in all later sibling branches.  That exclusion
partitions the solution space, so every set is emitted exactly once and the
emission order is a deterministic function of the graph alone.  Streams
support consumer-driven early termination (just stop iterating).

For minimal dominating sets the branch is additionally pruned as soon as any
chosen vertex loses its last private neighbor: private-neighbor sets only
shrink while the partial set grows, so such a branch cannot reach a minimal
set.  Every surviving leaf is therefore minimal by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .errors import CapacityError, InputError, InternalError, PreconditionError
from .graphs import Graph, iter_members, mask_of, members


def is_dominating(G: Graph, S: int) -> bool:
    """True iff N[S] = V(G)."""
    return G.closed_neighborhood_of_set(S) == G.full_mask


def private_neighbors(G: Graph, A: int, u: int) -> int:
    """N[u] - N[A - {u}]; may contain u itself when N(u) and A are disjoint."""
    G._check_set(A)
    if not (A >> u) & 1:
        raise InputError(f"vertex {u} is not a member of the given set")
    return G.closed_neighborhood(u) & ~G.closed_neighborhood_of_set(A & ~(1 << u))


def is_minimal_dominating(G: Graph, S: int) -> bool:
    """True iff S dominates and every member has a private neighbor."""
    if not is_dominating(G, S):
        return False
    return _all_have_private(_closed_rows(G), members(S))


def is_irredundant(G: Graph, A: int) -> bool:
    """Every member of A has a private neighbor (possibly inside A)."""
    G._check_set(A)
    return _all_have_private(_closed_rows(G), members(A))


def is_open_irredundant(G: Graph, A: int) -> bool:
    """Every member of A has a private neighbor outside A."""
    G._check_set(A)
    closed = _closed_rows(G)
    outside = ~A
    return all(priv & outside for priv in _private_masks(closed, members(A)))


def _closed_rows(G: Graph) -> list[int]:
    return [G.adj[v] | (1 << v) for v in range(G.n)]


def _private_masks(closed: list[int], mems: list[int]) -> list[int]:
    # prefix[i] | suffix[i+1] = N[set minus i-th member], computed in O(|set|).
    k = len(mems)
    prefix = [0] * (k + 1)
    for i, m in enumerate(mems):
        prefix[i + 1] = prefix[i] | closed[m]
    suffix = 0
    out = [0] * k
    for i in range(k - 1, -1, -1):
        out[i] = closed[mems[i]] & ~(prefix[i] | suffix)
        suffix |= closed[mems[i]]
    return out


def _all_have_private(closed: list[int], mems: list[int]) -> bool:
    return all(_private_masks(closed, mems))


def enumerate_minimal_dominating_sets(G: Graph) -> Iterator[int]:
    """All minimal dominating sets, each exactly once, deterministic order."""
    if G.n == 0:
        raise InputError("domination is undefined on the empty graph")
    closed = _closed_rows(G)
    full = G.full_mask

    def rec(mems: list[int], dominated: int, excluded: int) -> Iterator[int]:
        if dominated == full:
            yield mask_of(mems)
            return
        undominated = ~dominated & full
        v = (undominated & -undominated).bit_length() - 1
        cands = closed[v] & ~excluded
        for u in iter_members(cands):
            mems.append(u)
            if _all_have_private(closed, mems):
                yield from rec(mems, dominated | closed[u], excluded)
            mems.pop()
            excluded |= 1 << u
    return rec([], 0, 0)


def enumerate_maximal_independent_sets(G: Graph) -> Iterator[int]:
    """All maximal independent sets, each exactly once, deterministic order.

    Candidates for dominating the branch vertex are themselves undominated,
    which is exactly the condition of not being in or adjacent to the chosen
    set; a leaf is then an independent dominating set, i.e. maximal independent.
    """
    if G.n == 0:
        raise InputError("independence is undefined on the empty graph")
    closed = _closed_rows(G)
    full = G.full_mask

    def rec(chosen: int, dominated: int, excluded: int) -> Iterator[int]:
        if dominated == full:
            yield chosen
            return
        undominated = ~dominated & full
        v = (undominated & -undominated).bit_length() - 1
        cands = closed[v] & undominated & ~excluded
        for u in iter_members(cands):
            yield from rec(chosen | (1 << u), dominated | closed[u], excluded)
            excluded |= 1 << u
    return rec(0, 0, 0)


def domination_number(G: Graph) -> int:
    """gamma(G): minimum cardinality over all minimal dominating sets."""
    return min(S.bit_count() for S in enumerate_minimal_dominating_sets(G))


def independence_number(G: Graph) -> int:
    """alpha(G): maximum cardinality over all maximal independent sets."""
    return max(S.bit_count() for S in enumerate_maximal_independent_sets(G))


@dataclass(frozen=True)
class WellDomReport:
    """Verdict of a well-dominated / well-covered check.

    On a True verdict ``common_size`` carries the shared cardinality.  On a
    False verdict the two witnesses are valid sets of the scanned kind with
    ``witness_small`` strictly smaller.
    """

    verdict: bool
    common_size: Optional[int] = None
    witness_small: Optional[int] = None
    witness_large: Optional[int] = None

    def witnesses(self) -> tuple[list[int], list[int]]:
        if self.verdict:
            raise InputError("a True verdict carries no witnesses")
        return members(self.witness_small), members(self.witness_large)


def _common_cardinality(stream: Iterator[int]) -> WellDomReport:
    first = next(stream)
    size = first.bit_count()
    for S in stream:
        if S.bit_count() != size:
            small, large = sorted((first, S), key=lambda m: m.bit_count())
            return WellDomReport(False, None, small, large)
    return WellDomReport(True, size)


def is_well_dominated(G: Graph) -> WellDomReport:
    """Do all minimal dominating sets share one cardinality?

    Stops at the first cardinality mismatch; the witnesses are the first
    emitted set and the first set of a different size.
    """
    if G.n == 0:
        raise InputError("well-domination is undefined on the empty graph")
    return _common_cardinality(enumerate_minimal_dominating_sets(G))


def is_well_covered(G: Graph) -> WellDomReport:
    """Do all maximal independent sets share one cardinality?  Same early exit."""
    if G.n == 0:
        raise InputError("well-coveredness is undefined on the empty graph")
    return _common_cardinality(enumerate_maximal_independent_sets(G))


def find_open_irredundant_gamma_set(G: Graph) -> int:
    """First minimum dominating set (in subset order) that is open irredundant.

    Connected nontrivial graphs always have one; exhausting the search would
    contradict that guarantee, so it aborts with InternalError rather than
    returning.  K_1 is excluded: its only dominating set has no vertex outside
    itself to serve as an external private neighbor.
    """
    if not G.is_connected():
        raise PreconditionError("an open irredundant gamma-set is only sought on connected graphs")
    if G.n < 2:
        raise PreconditionError("an open irredundant gamma-set needs order >= 2")
    gamma = domination_number(G)
    for combo in combinations(range(G.n), gamma):
        S = mask_of(combo)
        if is_dominating(G, S) and is_open_irredundant(G, S):
            return S
    raise InternalError(
        f"no open irredundant minimum dominating set found on a connected graph of order {G.n}")


def brute_force_minimal_dominating_sets(G: Graph) -> list[int]:
    """Oracle: test every one of the 2^n subsets.  Capped at n <= 20; test use only."""
    if G.n > 20:
        raise CapacityError(f"subset oracle capped at order 20, got {G.n}")
    if G.n == 0:
        raise InputError("domination is undefined on the empty graph")
    return [S for S in range(1 << G.n) if is_minimal_dominating(G, S)]
