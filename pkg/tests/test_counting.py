import pytest

from homlab.counting import (
    count_bis,
    count_bis_naive,
    count_col,
    count_col_naive,
    count_fixcol,
    count_fixcol_naive,
    count_inj_fixcol,
    partition_sum_check,
    set_partitions,
    surjection_count,
)
from homlab.fixtures import fixture_bigraph, fixture_graph
from homlab.graphs import (
    Graph,
    TwoColouredGraph,
    canonical_side_bounded,
    disjoint_union,
    induced_subgraph,
    tensor,
)

K11 = TwoColouredGraph(1, 1, [(0, 0)])
P4 = TwoColouredGraph(2, 2, [(0, 0), (1, 0), (1, 1)])
EMPTY = TwoColouredGraph(0, 0, [])


def test_count_col_independent_sets_of_path():
    assert count_col(fixture_graph("h_is"), fixture_graph("p3_plain")) == 5


def test_count_col_triangle_edge():
    assert count_col(fixture_graph("triangle"), Graph(2, [(0, 1)])) == 6


def test_count_col_edge_into_loopless_target_is_twice_edges():
    h = fixture_bigraph("case1").as_graph()
    assert count_col(h, Graph(2, [(0, 1)])) == 2 * 27


def test_count_fixcol_empty_instance():
    assert count_fixcol(fixture_bigraph("case1"), EMPTY) == 1
    assert count_fixcol(EMPTY, EMPTY) == 1


def test_count_fixcol_single_edge_counts_edges():
    case1 = fixture_bigraph("case1")
    hex1 = induced_subgraph(case1, {0}, range(9))
    h1 = induced_subgraph(case1, {0, 1, 2}, range(9))
    h2 = induced_subgraph(case1, {0, 7, 8}, range(9))
    assert count_fixcol(hex1, K11) == 9
    assert count_fixcol(case1, K11) == 27
    assert count_fixcol(h1, K11) == 16
    assert count_fixcol(h2, K11) == 15
    case3 = fixture_bigraph("case3")
    assert count_fixcol(case3, K11) == 29


def test_count_fixcol_into_empty_side():
    lonely_r = TwoColouredGraph(0, 1, [])
    assert count_fixcol(lonely_r, TwoColouredGraph(1, 0, [])) == 0
    assert count_fixcol(lonely_r, TwoColouredGraph(0, 1, [])) == 1


def test_count_inj_pigeonhole():
    assert count_inj_fixcol(K11, TwoColouredGraph(2, 0, [])) == 0


def test_count_inj_identity_map():
    assert count_inj_fixcol(K11, K11) == 1


def test_count_inj_k22():
    k22 = TwoColouredGraph(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
    assert count_inj_fixcol(k22, K11) == 4


def test_count_inj_couples_components():
    # two isolated left vertices have 2 injective placements into a 2-left
    # target, not 2*2: injectivity is global
    two_l = TwoColouredGraph(2, 0, [])
    target = TwoColouredGraph(2, 0, [])
    assert count_inj_fixcol(target, two_l) == 2


def test_count_bis_examples():
    assert count_bis(EMPTY) == 1
    assert count_bis(K11) == 3
    assert count_bis(P4) == 8


def test_count_bis_matches_subset_enumeration():
    for name in ("k11", "p3", "p4", "two_k11", "coexistence", "case1"):
        g = fixture_bigraph(name)
        assert count_bis(g) == count_bis_naive(g)


def test_surjection_examples():
    assert surjection_count(3, 2) == 6
    assert surjection_count(2, 3) == 0
    for n in range(1, 8):
        assert surjection_count(n, 1) == 1
    assert surjection_count(0, 0) == 1


def test_surjection_bracket():
    from math import log

    for k in range(1, 7):
        for n in range(1, 61):
            if n < 2 * k * log(k):
                continue
            t = surjection_count(n, k)
            assert t <= k**n
            assert (n - 2 * k) * k**n <= n * t


def test_set_partitions_bell_numbers():
    bells = [1, 1, 2, 5, 15, 52]
    for n, b in enumerate(bells):
        parts = list(set_partitions(n))
        assert len(parts) == b
        for p in parts:
            flat = sorted(v for block in p for v in block)
            assert flat == list(range(n))


def test_partition_sum_single_edge():
    for h in (P4, fixture_bigraph("coexistence")):
        lhs, rhs = partition_sum_check(h, K11)
        assert lhs == rhs == len(h.edges)


def test_partition_sum_two_isolated_left():
    j = TwoColouredGraph(2, 0, [])
    lhs, rhs = partition_sum_check(K11, j)
    assert lhs == rhs == 1


def test_partition_sum_guard():
    big = TwoColouredGraph(6, 0, [])
    with pytest.raises(ValueError):
        partition_sum_check(K11, big)


def test_partition_sum_exhaustive_small():
    # every target with sides up to 4 against every instance with sides up
    # to 3, one representative per class
    hs = canonical_side_bounded(4)
    js = canonical_side_bounded(3)
    for h in hs:
        for j in js:
            lhs, rhs = partition_sum_check(h, j)
            assert lhs == rhs, (h, j)


def test_fixcol_multiplicative_over_instance_union():
    h = fixture_bigraph("coexistence")
    p3 = fixture_bigraph("p3")
    assert count_fixcol(h, disjoint_union([K11, p3])) == count_fixcol(
        h, K11
    ) * count_fixcol(h, p3)


def test_fixcol_multiplicative_over_target_tensor():
    p3 = fixture_bigraph("p3")
    for g in canonical_side_bounded(2):
        assert count_fixcol(tensor(p3, P4), g) == count_fixcol(p3, g) * count_fixcol(
            P4, g
        )


def test_backend_equivalence_exhaustive():
    # optimized counters against the naive full enumeration, every pair of
    # classes with at most 3 vertices per side
    pool = canonical_side_bounded(3)
    small = [g for g in pool if g.total <= 4]
    for h in small:
        for g in small:
            assert count_fixcol(h, g) == count_fixcol_naive(h, g)


def test_backend_equivalence_fixtures():
    graphs = [fixture_graph(n) for n in ("h_is", "triangle", "p3_plain", "toy")]
    for h in graphs:
        for g in graphs:
            assert count_col(h, g) == count_col_naive(h, g)
