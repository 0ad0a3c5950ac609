"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the lines are printed in
the terminal summary under "acceptance criteria".
"""

import time
from fractions import Fraction

import numpy as np

from emptyrect.boxgraph import box_graph, eight_partite_pointset, cross_part_edges, max_clique
from emptyrect.geom import PointSet3, random_pointset3
from emptyrect.realizer import (
    clique_obstruction_17,
    graph_from_realizer,
    k16_pointset,
    pointset_to_box_realizer,
    pointset_to_double_arrow,
    single_arrow_bound,
    single_arrow_fact_violations,
    single_arrow_graph,
)
from emptyrect.rectgraph import (
    expected_edges_exact,
    extremal_pointset,
    max_edges_bound,
    monte_carlo_edges,
    rectangle_graph,
    rectangle_graph_bruteforce,
    streifen_violations,
    verify_w_span,
)
from emptyrect.scarf import euler_poincare_check, lift_to_4d, scarf_complex, verify_face_numbers
from pointsets import ACCEPTANCE_LINES, adversarial_sets, chain, random_sets

SEED = 20051204


def record(label, ok, detail=""):
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
    assert ok, f"{label}: {detail}"


def criterion1_instances():
    # random_sets draws n uniformly from 1..40
    return random_sets(500, 40, seed=SEED) + adversarial_sets()


def test_c1_identities():
    t0 = time.perf_counter()
    bad = []
    sets = criterion1_instances()
    for X in sets:
        r = verify_w_span(X)
        if not (r.identity1_holds and r.identity2_holds):
            bad.append(X)
    dt = time.perf_counter() - t0
    record("C1 span/exposed identities", not bad and dt < 60,
           f"{len(sets)} sets, {len(bad)} failures, {dt:.1f}s < 60s")


def test_c2_bound_tightness():
    off = [n for n in range(2, 61)
           if rectangle_graph_bruteforce(extremal_pointset(n)).m != max_edges_bound(n)]
    ten = rectangle_graph(extremal_pointset(10)).m
    over = [X for X in criterion1_instances()
            if X.n >= 2 and rectangle_graph(X).m > max_edges_bound(X.n)]
    record("C2 extremal sets meet the edge bound", not off and ten == 33 and not over,
           f"n=2..60 off={off}, n=10 -> {ten}, random over bound={len(over)}")


def test_c3_face_numbers():
    t0 = time.perf_counter()
    fixtures = {
        "n=1": (verify_face_numbers([(1, 1)]), (5, 10, 10, 4)),
        "2-chain": (verify_face_numbers(chain(2)), (6, 15, 18, 8)),
    }
    fixed_ok = all(c.enumerated.as_tuple() == want for c, want in fixtures.values())
    f3_chain3 = verify_face_numbers(chain(3)).enumerated.f3
    sets = random_sets(300, 12, seed=SEED + 3)
    sets += [X for X in adversarial_sets() if X.n <= 12]
    bad = []
    for X in sets:
        c = verify_face_numbers(X)
        if not (c.all_ok and euler_poincare_check(c.enumerated)):
            bad.append(X)
        F = c.enumerated.F
        if 2 * F[2] != 4 * F[3]:
            bad.append(X)
    dt = time.perf_counter() - t0
    record("C3 Scarf face numbers of 4D lifts",
           fixed_ok and f3_chain3 == 12 and not bad and dt < 120,
           f"{len(sets)} sets, {len(bad)} failures, 3-chain f3={f3_chain3}, {dt:.1f}s < 120s")


def test_c4_realizer_equivalences():
    bad2 = sum(graph_from_realizer(pointset_to_double_arrow(X)) != rectangle_graph(X)
               for X in random_sets(200, 30, seed=SEED + 4))
    rng = np.random.default_rng(SEED + 40)
    bad3 = 0
    for _ in range(300):
        Y = random_pointset3(int(rng.integers(1, 26)), rng)
        bad3 += graph_from_realizer(pointset_to_box_realizer(Y)) != box_graph(Y)
    record("C4 realizer lifts give the same graphs", bad2 == 0 and bad3 == 0,
           f"2D mismatches {bad2}/200, 3D mismatches {bad3}/300")


def strictly_between(Y, i, j, k):
    return all(min(Y[i][a], Y[k][a]) < Y[j][a] < max(Y[i][a], Y[k][a]) for a in range(3))


def test_c5_box_graphs():
    k16 = box_graph(k16_pointset())
    G24 = box_graph(eight_partite_pointset(3))
    cross = cross_part_edges(3)
    cross_ok = len(cross) == 252 and all(G24.has_edge(*e) for e in cross)

    rng = np.random.default_rng(SEED + 5)
    witness_bad = 0
    for _ in range(100):
        Y = random_pointset3(int(rng.integers(17, 41)), rng)
        A = sorted(rng.choice(Y.n, 17, replace=False).tolist())
        i, j, k = clique_obstruction_17(Y, A)
        if not ({i, j, k} <= set(A) and strictly_between(Y, i, j, k)):
            witness_bad += 1

    # random sets plus K16 padded with extra points, all with n <= 20
    base = [tuple(2 * c for c in p) for p in k16_pointset()]
    omega = []
    for _ in range(40):
        Y = random_pointset3(int(rng.integers(1, 21)), rng)
        omega.append(len(max_clique(box_graph(Y))))
    for extra in range(0, 5):
        pts = list(base)
        while len(pts) < 16 + extra:
            q = tuple(int(2 * rng.integers(0, 17) + 1) for _ in range(3))
            if all(q[a] != p[a] for p in pts for a in range(3)):
                pts.append(q)
        omega.append(len(max_clique(box_graph(PointSet3(tuple(pts))))))
    record("C5 box-graph cliques",
           k16.is_complete() and k16.m == 120 and cross_ok and witness_bad == 0 and max(omega) <= 16,
           f"K16 edges {k16.m}, cross edges ok={cross_ok}, bad witnesses {witness_bad}/100, "
           f"max clique seen {max(omega)}")


def test_c6_single_arrow():
    rng = np.random.default_rng(SEED + 6)
    over, fact_bad = 0, 0
    for _ in range(500):
        n = int(rng.integers(10, 61))
        p = [tuple(rng.permutation(n).tolist()) for _ in range(3)]
        G = single_arrow_graph(*p)
        over += G.m > single_arrow_bound(n)
        fact_bad += bool(single_arrow_fact_violations(*p, G))
    record("C6 single-arrow bound and structure facts", over == 0 and fact_bad == 0,
           f"500 triples, over bound {over}, fact violations {fact_bad}")


def test_c7_streifen():
    bad = sum(bool(streifen_violations(X)) for X in criterion1_instances())
    record("C7 strip property", bad == 0, f"{bad} sets with violations")


def test_c8_quick_sort_expectation():
    exact = expected_edges_exact(20)
    mean, se = monte_carlo_edges(20, 20_000, seed=SEED)
    z = abs(mean - float(exact)) / se
    n3 = expected_edges_exact(3)
    record("C8 expected edge count", z <= 3 and n3 == Fraction(8, 3),
           f"n=20 mean {mean:.4f} vs {float(exact):.4f}, |z|={z:.2f} <= 3; n=3 exact {n3}")


def test_c9_oracles():
    rng = np.random.default_rng(SEED + 9)
    sweep_bad = 0
    for X in random_sets(1000, 64, seed=SEED + 9):
        sweep_bad += rectangle_graph(X) != rectangle_graph_bruteforce(X)
    scarf_bad = 0
    for X in random_sets(150, 8, seed=int(rng.integers(1 << 30))):
        V = lift_to_4d(X)
        scarf_bad += scarf_complex(V) != scarf_complex(V, prune=False)
    record("C9 fast paths agree with oracles", sweep_bad == 0 and scarf_bad == 0,
           f"sweep mismatches {sweep_bad}/1000, Scarf mismatches {scarf_bad}/150")

