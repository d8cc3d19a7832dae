"""Domination predicates, enumeration engines against the subset oracle,
and the well-dominated / well-covered verdicts."""

import random

import pytest

from conftest import as_sets, random_graph
from welldom import (
    CapacityError,
    InputError,
    PreconditionError,
    brute_force_minimal_dominating_sets,
    cartesian_product,
    complete,
    complete_bipartite,
    connected_graphs_up_to_iso,
    cycle,
    disjoint_union,
    domination_number,
    enumerate_maximal_independent_sets,
    enumerate_minimal_dominating_sets,
    find_open_irredundant_gamma_set,
    independence_number,
    is_dominating,
    is_irredundant,
    is_minimal_dominating,
    is_open_irredundant,
    is_well_covered,
    is_well_dominated,
    mask_of,
    members,
    path,
    private_neighbors,
)


def test_is_dominating():
    p3 = path(3)
    assert is_dominating(p3, mask_of([1]))
    assert not is_dominating(p3, mask_of([0]))
    assert is_dominating(p3, p3.full_mask)


def test_private_neighbors():
    p3 = path(3)
    assert members(private_neighbors(p3, mask_of([0, 2]), 0)) == [0]
    k3 = complete(3)
    assert private_neighbors(k3, mask_of([0, 1]), 0) == 0
    # Against a singleton the whole closed neighborhood is private.
    assert private_neighbors(p3, mask_of([1]), 1) == p3.full_mask
    with pytest.raises(InputError):
        private_neighbors(p3, mask_of([0, 2]), 1)


def test_is_minimal_dominating():
    p3 = path(3)
    assert is_minimal_dominating(p3, mask_of([1]))
    assert not is_minimal_dominating(p3, mask_of([0, 1]))
    assert is_minimal_dominating(cycle(4), mask_of([0, 2]))
    assert is_minimal_dominating(cycle(4), mask_of([0, 1]))


def test_irredundance():
    assert is_irredundant(path(4), 0)
    assert is_open_irredundant(path(4), 0)
    assert is_open_irredundant(path(4), mask_of([0, 3]))
    assert not is_irredundant(complete(3), mask_of([0, 1]))
    # P_3 endpoints are each other's only non-private cover: the private
    # neighbors of {0, 2} are 0 and 2 themselves, both inside the set.
    assert is_irredundant(path(3), mask_of([0, 2]))
    assert not is_open_irredundant(path(3), mask_of([0, 2]))


def test_enumerate_minimal_dominating_sets_examples():
    assert as_sets(enumerate_minimal_dominating_sets(path(3))) == {
        frozenset({1}), frozenset({0, 2})}
    for n in (2, 3, 5):
        assert as_sets(enumerate_minimal_dominating_sets(complete(n))) == {
            frozenset({v}) for v in range(n)}
    assert as_sets(enumerate_minimal_dominating_sets(cycle(4))) == {
        frozenset(s) for s in ({0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3})}


def test_enumerate_maximal_independent_sets_examples():
    assert as_sets(enumerate_maximal_independent_sets(path(3))) == {
        frozenset({1}), frozenset({0, 2})}
    assert as_sets(enumerate_maximal_independent_sets(path(4))) == {
        frozenset(s) for s in ({0, 2}, {0, 3}, {1, 3})}
    for n in (2, 4):
        assert as_sets(enumerate_maximal_independent_sets(complete(n))) == {
            frozenset({v}) for v in range(n)}


def test_enumeration_is_deterministic_and_duplicate_free():
    rng = random.Random(3)
    for _ in range(50):
        G = random_graph(rng, rng.randint(1, 9), rng.choice([0.25, 0.5, 0.75]))
        first = list(enumerate_minimal_dominating_sets(G))
        second = list(enumerate_minimal_dominating_sets(G))
        assert first == second
        assert len(first) == len(set(first))
        mis = list(enumerate_maximal_independent_sets(G))
        assert mis == list(enumerate_maximal_independent_sets(G))
        assert len(mis) == len(set(mis))


def test_gamma_and_alpha():
    assert domination_number(complete(5)) == 1
    assert independence_number(complete(5)) == 1
    assert domination_number(path(3)) == 1
    assert independence_number(path(3)) == 2
    assert domination_number(cycle(5)) == 2
    assert independence_number(cycle(5)) == 2


def _brute_maximal_independent_sets(G):
    out = set()
    for S in range(1 << G.n):
        if G.is_independent(S) and is_dominating(G, S):
            out.add(S)
    return out


def test_enumerators_match_subset_oracles():
    for n in range(1, 7):
        for G in connected_graphs_up_to_iso(n):
            assert set(enumerate_minimal_dominating_sets(G)) == set(
                brute_force_minimal_dominating_sets(G))
            assert set(enumerate_maximal_independent_sets(G)) == \
                _brute_maximal_independent_sets(G)
    rng = random.Random(17)
    for _ in range(40):
        G = random_graph(rng, rng.randint(1, 10), rng.choice([0.2, 0.5, 0.8]))
        assert set(enumerate_minimal_dominating_sets(G)) == set(
            brute_force_minimal_dominating_sets(G))
        assert set(enumerate_maximal_independent_sets(G)) == \
            _brute_maximal_independent_sets(G)


def test_every_emitted_set_passes_its_own_predicate():
    rng = random.Random(23)
    for _ in range(30):
        G = random_graph(rng, rng.randint(2, 9), 0.4)
        for S in enumerate_minimal_dominating_sets(G):
            assert is_minimal_dominating(G, S)
        for S in enumerate_maximal_independent_sets(G):
            assert G.is_independent(S) and is_dominating(G, S)
            assert is_minimal_dominating(G, S)  # maximal independent => minimal dominating


def test_is_well_dominated_examples():
    rep = is_well_dominated(path(3))
    assert not rep.verdict
    assert rep.witnesses() == ([1], [0, 2])

    rep = is_well_dominated(cycle(4))
    assert rep.verdict and rep.common_size == 2 and rep.witness_small is None

    prod, _ = cartesian_product(complete(3), path(3))
    assert is_well_dominated(prod).verdict

    assert is_well_dominated(complete(1)).common_size == 1


def test_is_well_covered_examples():
    rep = is_well_covered(path(4))
    assert rep.verdict and rep.common_size == 2
    rep = is_well_covered(path(3))
    assert not rep.verdict
    small, large = rep.witnesses()
    assert len(small) < len(large)


def test_well_dominated_implies_well_covered_on_corpus():
    for n in range(1, 6):
        for G in connected_graphs_up_to_iso(n):
            if is_well_dominated(G).verdict:
                assert is_well_covered(G).verdict


def test_well_covered_extension_property():
    # In a well-covered graph every independent set extends to a maximum one.
    for n in range(1, 6):
        for G in connected_graphs_up_to_iso(n):
            if not is_well_covered(G).verdict:
                continue
            for I in range(1 << G.n):
                if not G.is_independent(I):
                    continue
                assert any(S & I == I
                           for S in enumerate_maximal_independent_sets(G))


def test_well_dominated_iff_components_are():
    rng = random.Random(5)
    pool = [G for n in range(1, 5) for G in connected_graphs_up_to_iso(n)]
    for _ in range(40):
        G = disjoint_union(rng.choice(pool), rng.choice(pool))
        if rng.random() < 0.3:
            G = disjoint_union(G, rng.choice(pool))
        expected = all(is_well_dominated(C).verdict for C, _ in G.components())
        assert is_well_dominated(G).verdict == expected


def test_residuals_of_a_well_dominated_product_stay_well_dominated():
    prod, _ = cartesian_product(complete(3), complete(3))
    assert is_well_dominated(prod).verdict
    for I in enumerate_maximal_independent_sets(prod):
        residual, _ = prod.remove_closed_neighborhood(I)
        if residual.n:
            assert is_well_dominated(residual).verdict


def test_find_open_irredundant_gamma_set():
    for n in (2, 3, 5):
        assert find_open_irredundant_gamma_set(complete(n)) == 1
    assert members(find_open_irredundant_gamma_set(path(4))) == [0, 3]
    assert members(find_open_irredundant_gamma_set(cycle(5))) == [0, 2]
    with pytest.raises(PreconditionError):
        find_open_irredundant_gamma_set(disjoint_union(complete(2), complete(2)))
    with pytest.raises(PreconditionError):
        find_open_irredundant_gamma_set(complete(1))


def test_gamma_set_lift_shape():
    # The found set is a gamma-set and openly irredundant.
    for G in (path(4), cycle(5), complete_bipartite(2, 3), cycle(6)):
        D = find_open_irredundant_gamma_set(G)
        assert D.bit_count() == domination_number(G)
        assert is_dominating(G, D) and is_open_irredundant(G, D)


def test_oracle_caps_and_degenerate_input():
    with pytest.raises(CapacityError):
        brute_force_minimal_dominating_sets(complete(21))
    from welldom import Graph
    with pytest.raises(InputError):
        is_well_dominated(Graph(0, []))
    with pytest.raises(InputError):
        next(enumerate_minimal_dominating_sets(Graph(0, [])))


def test_early_exit_stops_reading_the_stream():
    # A consumer that stops after two sets must not enumerate the rest.
    G = cycle(9)
    stream = enumerate_minimal_dominating_sets(G)
    first = next(stream)
    second = next(stream)
    assert first != second
    stream.close()
