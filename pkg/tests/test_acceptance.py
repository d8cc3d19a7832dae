"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Everything here is exact combinatorics; every assertion is equality, no
tolerances.  Run with ``pytest tests/test_acceptance.py -v -s`` to see the
per-criterion lines.
"""

import random
from itertools import combinations

from conftest import as_sets, random_graph
from welldom import (
    brute_force_minimal_dominating_sets,
    cartesian_product,
    complete,
    complete_bipartite,
    connected_graphs_up_to_iso,
    cycle,
    decode_graph6,
    domination_number,
    encode_graph6,
    enumerate_maximal_independent_sets,
    enumerate_minimal_dominating_sets,
    is_dominating,
    is_isomorphic,
    is_minimal_dominating,
    is_well_covered,
    is_well_dominated,
    mask_of,
    path,
)
from welldom.harness import (
    gadget_bipartite_sets,
    gadget_f1_sets,
    gadget_lemma7_set,
    verify_corollary,
    verify_lemma_bipartite,
    verify_lemma_girth4_products,
    verify_lemma_path3,
    verify_lemma_spwd,
    verify_main_theorem,
    verify_obs_residual,
    verify_product_reduction,
    verify_prop_domfactors,
    verify_thm_wdcart,
)
from welldom.families import family_f1

WORKERS = 4


def _report(number: int, ok: bool, detail: str) -> None:
    print(f"criterion-{number} {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, f"criterion {number}: {detail}"


def _known_name(code: str) -> str:
    G = decode_graph6(code)
    for candidate in (complete(2), complete(3), complete(4), complete(5), path(3)):
        if is_isomorphic(G, candidate):
            return candidate.name
    return code


def _well_dominated_pairs(report) -> set[tuple[str, str]]:
    found = set()
    for inst in report.instances:
        if inst["witness"]["kind"] == "common_size":
            found.add(tuple(_known_name(c) for c in inst["factors"]))
    return found


def _brute_gamma(G) -> int:
    for k in range(1, G.n + 1):
        for combo in combinations(range(G.n), k):
            if is_dominating(G, mask_of(combo)):
                return k
    raise AssertionError("unreachable")


def test_criterion_1_corollary_orders_2_to_4():
    report = verify_corollary(max_factor_order=4)
    classes = sum(1 for n in (2, 3, 4) for _ in connected_graphs_up_to_iso(n))
    expected = {("K2", "K2"), ("K3", "K3"), ("P3", "K3"), ("K3", "P3"), ("K4", "K4")}
    found = _well_dominated_pairs(report)
    ok = (report.conforming and classes == 9 and len(report.instances) == 81
          and found == expected and report.elapsed_ms < 60_000)
    _report(1, ok, f"81 ordered pairs over 9 classes, well-dominated products "
                   f"exactly {sorted(found)} in {report.elapsed_ms} ms")


def test_criterion_2_extended_sweep_order_5():
    report = verify_main_theorem(max_factor_order=5, workers=WORKERS)
    found = _well_dominated_pairs(report)
    base = {("K2", "K2"), ("K3", "K3"), ("P3", "K3"), ("K3", "P3"), ("K4", "K4")}
    new = found - base
    ok = (report.conforming and len(report.instances) == 900
          and new == {("K5", "K5")} and report.elapsed_ms < 600_000)
    _report(2, ok, f"900 ordered pairs over 30 classes, only new well-dominated "
                   f"product {sorted(new)} in {report.elapsed_ms} ms "
                   f"({WORKERS} workers)")


def test_criterion_3_complete_factor_characterization():
    report = verify_thm_wdcart(max_m=4, max_order=5)
    spot = {
        (2, complete(2)): True, (2, path(3)): False,
        (3, path(3)): True, (3, cycle(4)): False,
        (4, complete(4)): True, (4, complete(3)): False,
    }
    spots_ok = all(
        is_well_dominated(cartesian_product(complete(m), H)[0]).verdict == want
        for (m, H), want in spot.items())
    ok = report.conforming and len(report.instances) == 90 and spots_ok
    _report(3, ok, f"m in 2..4 over 30 graphs: verdict matches the "
                   f"characterization on all {len(report.instances)} instances")


def test_criterion_4_girth4_products_not_well_covered():
    report = verify_lemma_girth4_products(max_factor_order=5)
    witnesses_ok = True
    for inst in report.instances:
        witness = inst["witness"]
        if witness["kind"] != "cardinality_mismatch":
            witnesses_ok = False
            break
        left, right = (decode_graph6(c) for c in inst["factors"])
        prod, _ = cartesian_product(left, right)
        small, large = mask_of(witness["smaller"]), mask_of(witness["larger"])
        if not (prod.is_independent(small) and is_dominating(prod, small)
                and prod.is_independent(large) and is_dominating(prod, large)
                and small.bit_count() < large.bit_count()):
            witnesses_ok = False
            break
    ok = report.conforming and len(report.instances) == 100 and witnesses_ok
    _report(4, ok, f"{len(report.instances)} girth>=4 pairs all non-well-covered, "
                   f"each with two replayed unequal maximal independent sets")


def _first_gamma_set(G) -> int:
    gamma = domination_number(G)
    for combo in combinations(range(G.n), gamma):
        S = mask_of(combo)
        if is_dominating(G, S):
            return S
    raise AssertionError("unreachable")


def test_criterion_5_lemma_sweeps_and_gadgets():
    sweeps_ok = (verify_lemma_path3(max_order=5).conforming
                 and verify_lemma_bipartite(max_r=2, max_s=4, max_order=5).conforming
                 and verify_lemma_spwd(max_leaves=2, max_order=5).conforming)

    lemma7_params = [(complete_bipartite(1, k), 0) for k in range(3, 8)]
    lemma7_params += [(complete(m), 0) for m in range(4, 9)]
    lemma7_ok = len(lemma7_params) >= 10
    for X, x in lemma7_params:
        S = gadget_lemma7_set(X, x)
        prod, _ = cartesian_product(path(3), X)
        lemma7_ok &= S.bit_count() == 3 + X.n - X.degree(x) - 1 < X.n
        lemma7_ok &= is_minimal_dominating(prod, S)

    bip_params = [(2, 2, path(3)), (2, 2, complete(3)), (2, 2, cycle(5)),
                  (2, 3, path(3)), (2, 3, complete(3)), (2, 3, cycle(4)),
                  (3, 3, path(3)), (3, 3, complete(3)), (2, 4, path(4)),
                  (2, 2, path(4))]
    bip_ok = len(bip_params) >= 10
    for r, s, X in bip_params:
        D_X = next(enumerate_minimal_dominating_sets(X))
        d1, d3 = gadget_bipartite_sets(r, s, X, D_X)
        prod, _ = cartesian_product(complete_bipartite(r, s), X)
        bip_ok &= d1.bit_count() == X.n + (r - 2) * D_X.bit_count()
        bip_ok &= d3.bit_count() == 2 * X.n
        bip_ok &= is_minimal_dominating(prod, d1) and is_minimal_dominating(prod, d3)

    f1_params = [(counts, X)
                 for counts in ((1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2), (2, 2, 1))
                 for X in (path(3), complete(3))]
    f1_ok = len(f1_params) >= 10
    for counts, X in f1_params:
        F = family_f1(*counts)
        D_X = _first_gamma_set(X)
        sets = gadget_f1_sets(F, X, D_X)
        prod, _ = cartesian_product(F, X)
        l1, l2, l3 = counts
        gamma = D_X.bit_count()
        f1_ok &= [s.bit_count() for s in sets] == [
            3 * X.n, X.n + (l2 + l3) * gamma, X.n + (l1 + l3) * gamma,
            X.n + (l1 + l2) * gamma]
        f1_ok &= sets[0].bit_count() != sets[1].bit_count()
        f1_ok &= all(is_minimal_dominating(prod, s) for s in sets)

    ok = sweeps_ok and lemma7_ok and bip_ok and f1_ok
    _report(5, ok, f"lemma sweeps conform at order-5 bounds; gadget families "
                   f"checked on {len(lemma7_params)}/{len(bip_params)}/"
                   f"{len(f1_params)} parameterizations")


def test_criterion_6_gamma_identity():
    report = verify_prop_domfactors(max_factor_order=5)

    p3k3, _ = cartesian_product(path(3), complete(3))
    k4k4, _ = cartesian_product(complete(4), complete(4))
    gammas_ok = (_brute_gamma(p3k3) == 3 == domination_number(path(3)) * 3
                 and _brute_gamma(k4k4) == 4 == domination_number(complete(4)) * 4)

    identity_ok = True
    for G_name, H_name in [("K2", "K2"), ("K3", "K3"), ("P3", "K3"),
                           ("K4", "K4"), ("K5", "K5")]:
        builders = {"K2": complete(2), "K3": complete(3), "K4": complete(4),
                    "K5": complete(5), "P3": path(3)}
        G, H = builders[G_name], builders[H_name]
        prod, _ = cartesian_product(G, H)
        rep = is_well_dominated(prod)
        identity_ok &= rep.verdict
        identity_ok &= rep.common_size == domination_number(G) * H.n
        identity_ok &= rep.common_size == domination_number(H) * G.n

    ok = report.conforming and len(report.instances) == 900 and gammas_ok and identity_ok
    _report(6, ok, "gamma-set lifts minimal dominating on all 900 pairs; "
                   "gamma(P3 x K3) = 3 and gamma(K4 x K4) = 4 brute-force "
                   "confirmed; product identity exact on all well-dominated cases")


def test_criterion_7_oracle_equivalence():
    per_order = {}
    corpus_ok = True
    for n in range(1, 8):
        graphs = list(connected_graphs_up_to_iso(n))
        per_order[n] = len(graphs)
        for G in graphs:
            if as_sets(enumerate_minimal_dominating_sets(G)) != as_sets(
                    brute_force_minimal_dominating_sets(G)):
                corpus_ok = False
    counts_ok = per_order == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
    total = sum(per_order.values())

    rng = random.Random(12)
    random_ok = True
    for _ in range(100):
        G = random_graph(rng, rng.randint(1, 12), rng.choice([0.2, 0.4, 0.6, 0.8]))
        if set(enumerate_minimal_dominating_sets(G)) != set(
                brute_force_minimal_dominating_sets(G)):
            random_ok = False
    ok = corpus_ok and counts_ok and random_ok
    _report(7, ok, f"enumerator = subset oracle on all {total} connected graphs "
                   f"of order <= 7 (per-order {sorted(per_order.values())}) "
                   f"and on 100 random graphs of order <= 12")


def test_criterion_8_property_suite():
    mis_is_mds_ok = True
    wd_implies_wc_ok = True
    for n in range(1, 7):
        for G in connected_graphs_up_to_iso(n):
            for S in enumerate_maximal_independent_sets(G):
                if not is_minimal_dominating(G, S):
                    mis_is_mds_ok = False
            if is_well_dominated(G).verdict and not is_well_covered(G).verdict:
                wd_implies_wc_ok = False

    residual = verify_obs_residual(max_order=6)
    reduction = verify_product_reduction(max_factor_order=4)
    ok = (mis_is_mds_ok and wd_implies_wc_ok and residual.conforming
          and reduction.conforming and len(reduction.instances) == 100)
    _report(8, ok, "on every graph of order <= 6: maximal independent sets are "
                   "minimal dominating, well-dominated implies well-covered, "
                   "residual closure holds, and the label-exact reduction "
                   "identity holds on all 100 order <= 4 pairs")


def test_criterion_9_graph6_roundtrip():
    corpus_ok = True
    count = 0
    for n in range(1, 8):
        for G in connected_graphs_up_to_iso(n):
            count += 1
            if decode_graph6(encode_graph6(G)) != G:
                corpus_ok = False
    rng = random.Random(96)
    random_ok = True
    for _ in range(1000):
        G = random_graph(rng, rng.randint(1, 20), rng.choice([0.1, 0.3, 0.5, 0.9]))
        if decode_graph6(encode_graph6(G)) != G:
            random_ok = False
    p3_ok = encode_graph6(path(3)) == "Bg" and decode_graph6("Bg") == path(3)
    ok = corpus_ok and random_ok and p3_ok
    _report(9, ok, f"round-trip exact on {count} corpus graphs and 1000 random "
                   f"graphs of order <= 20; P3 encodes to 'Bg'")
