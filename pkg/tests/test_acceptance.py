"""Acceptance suite: one test per release criterion, each printing a verdict line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the PASS lines.
"""

import random
import time

import pytest

from resolvekit import (
    all_pairs_distances,
    bound_report,
    cartesian_product,
    is_resolving_partition,
    is_resolving_set,
    metric_dimension,
    paper_unicyclic_example,
    partition_dimension,
    product_partition_from_partitions,
    product_partition_from_set,
    product_set_distance,
)
from resolvekit.families import complete, cycle, grid, path, star

from util import naive_dim, naive_pd, random_connected_graph

SWEEP_SEED = 20260823


def _sample_pairs(count, lo=2, hi=7):
    rng = random.Random(SWEEP_SEED)
    pairs = []
    for _ in range(count):
        g1 = random_connected_graph(rng, rng.randint(lo, hi))
        g2 = random_connected_graph(rng, rng.randint(lo, hi))
        pairs.append((g1, g2))
    return pairs


def test_criterion_1_known_dimension_values():
    start = time.perf_counter()
    for n in range(2, 9):
        assert metric_dimension(complete(n)).value == n - 1
    for n in range(2, 11):
        assert metric_dimension(path(n)).value == 1
    for n in range(3, 11):
        assert metric_dimension(cycle(n)).value == 2
    for n in range(2, 8):
        assert metric_dimension(star(n)).value == n - 1
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    print(f"PASS criterion 1: known dim values for K_n/P_n/C_n/K_1n ({elapsed:.2f}s)")


def test_criterion_2_grid_partition_dimension_is_three():
    start = time.perf_counter()
    for r, t in [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (4, 4)]:
        assert partition_dimension(grid(r, t)).value == 3, (r, t)
    elapsed = time.perf_counter() - start
    assert elapsed < 300.0
    print(f"PASS criterion 2: pd(grid) == 3 on six sizes ({elapsed:.2f}s)")


def test_criterion_3_construction_soundness_sweep():
    built = 0
    for g1, g2 in _sample_pairs(200):
        pi1 = partition_dimension(g1).witness
        pi2 = partition_dimension(g2).witness
        s2 = metric_dimension(g2).witness
        plan1 = product_partition_from_partitions(g1, pi1, g2, pi2)
        assert plan1.certificate.resolving
        built += 1
        plan2 = product_partition_from_set(g1, pi1, g2, s2)
        assert plan2.certificate.resolving
        built += 1
    assert built == 400
    print(f"PASS criterion 3: {built}/400 constructed product partitions verified resolving")


def test_criterion_4_showcase_example_end_to_end():
    start = time.perf_counter()
    g, pi, s = paper_unicyclic_example()
    dm = all_pairs_distances(g)
    assert is_resolving_partition(dm, pi).resolving
    assert is_resolving_set(dm, s).resolving
    plan1 = product_partition_from_partitions(g, pi, g, pi)
    assert plan1.product.n == 225
    assert plan1.classes.t == 12
    assert plan1.certificate.resolving
    plan2 = product_partition_from_set(g, pi, g, s)
    assert plan2.classes.t == 15
    assert plan2.certificate.resolving
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    print(f"PASS criterion 4: 15-vertex showcase, 12- and 15-class product partitions ({elapsed:.2f}s)")


def test_criterion_5_pd_at_most_dim_plus_one():
    graphs = {}
    for g1, g2 in _sample_pairs(200):
        graphs[(g1.n, g1.edges)] = g1
        graphs[(g2.n, g2.edges)] = g2
    checked = 0
    for g in graphs.values():
        assert partition_dimension(g).value <= metric_dimension(g).value + 1
        checked += 1
    print(f"PASS criterion 5: pd <= dim+1 on {checked} distinct sampled graphs")


def test_criterion_6_product_distance_additivity():
    rng = random.Random(SWEEP_SEED + 1)
    for _ in range(100):
        g1 = random_connected_graph(rng, rng.randint(2, 8))
        g2 = random_connected_graph(rng, rng.randint(2, 8))
        d1, d2 = all_pairs_distances(g1), all_pairs_distances(g2)
        prod, codec = cartesian_product(g1, g2)
        dp = all_pairs_distances(prod)
        a = rng.randrange(g1.n)
        b = rng.randrange(g2.n)
        s1 = tuple(rng.sample(range(g1.n), rng.randint(1, g1.n)))
        s2 = tuple(rng.sample(range(g2.n), rng.randint(1, g2.n)))
        expected = min(
            dp.dist(codec.encode(a, b), codec.encode(x, y)) for x in s1 for y in s2
        )
        assert product_set_distance(d1, d2, a, b, s1, s2) == expected
    print("PASS criterion 6: factor-additive set distance == product BFS on 100 instances")


def test_criterion_7_pruned_solver_equals_naive_oracle():
    rng = random.Random(SWEEP_SEED + 2)
    graphs = {}
    while len(graphs) < 50:
        g = random_connected_graph(rng, rng.randint(2, 6))
        graphs[(g.n, g.edges)] = g
    for g in graphs.values():
        k, _ = naive_dim(g)
        t, _ = naive_pd(g)
        assert metric_dimension(g).value == k
        assert partition_dimension(g).value == t
    print(f"PASS criterion 7: pruned == naive dim/pd on {len(graphs)} graphs (n <= 6)")


@pytest.mark.parametrize("n", (3, 4, 5))
def test_criterion_8_complete_times_path_comparison(n):
    rep = bound_report(complete(n), path(n))
    partition_route = rep.entry("pd1+pd2").value
    set_route = rep.entry("pd1+dim2").value
    assert partition_route == n + 2
    assert set_route == n + 1
    assert set_route < partition_route
    print(f"PASS criterion 8 (n={n}): set route {n + 1} beats partition route {n + 2}")
