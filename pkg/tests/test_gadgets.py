import random
from fractions import Fraction

import mpmath
import pytest

from homlab.counting import WorkBudgetExceeded, count_bis
from homlab.fixtures import fixture_bigraph, fixture_graph
from homlab.gadgets import (
    GadgetParams,
    _to_fraction,
    approx_bracket_report,
    build_bis_gadget,
    build_kab_gamma_gadget,
    dirichlet,
    normalized_exponents,
    params_from_scale,
    phase_decompose_bis,
    phase_decompose_col,
    phase_decompose_kab,
    xz_bound_check,
)
from homlab.graphs import TwoColouredGraph
from homlab.structure import PreconditionError

K11 = TwoColouredGraph(1, 1, [(0, 0)])
EMPTY = TwoColouredGraph(0, 0, [])
SINGLE_L = TwoColouredGraph(1, 0, [])


def test_dirichlet_rational_hit():
    assert dirichlet([Fraction(1, 3)], 3) == (3, [1])


def test_dirichlet_sqrt2():
    # |5*sqrt(2) - 7| is about 0.071, within 1/10
    with mpmath.workprec(300):
        root2 = _to_fraction(mpmath.sqrt(2))
        q, ps = dirichlet([root2], 10)
    assert (q, ps) == (5, [7])
    assert abs(q * root2 - ps[0]) * 10 <= 1


def test_dirichlet_two_dimensional():
    with mpmath.workprec(300):
        alphas = [_to_fraction(mpmath.sqrt(2)), _to_fraction(mpmath.sqrt(3))]
    q, ps = dirichlet(alphas, 100)
    assert 1 <= q <= 100
    for v, p in zip(alphas, ps):
        assert p >= 1
        assert abs(q * v - p) ** 2 * 100 <= 1


def test_dirichlet_seeded_bounds():
    rng = random.Random(7)
    for _ in range(25):
        d = rng.choice([1, 2, 3])
        big_n = rng.randint(2, 800)
        alphas = [
            Fraction(rng.randint(1, 10**4), rng.randint(1, 10**4)) for _ in range(d)
        ]
        q, ps = dirichlet(alphas, big_n)
        assert 1 <= q <= big_n
        for v, p in zip(alphas, ps):
            assert p >= 1 and abs(q * v - p) ** d * big_n <= 1


def test_gadget_params_validate():
    with pytest.raises(PreconditionError):
        GadgetParams(a=0, b=1)
    with pytest.raises(PreconditionError):
        GadgetParams(a=1, b=1, copies_gamma=-1)


def test_params_from_scale_bounds():
    h = fixture_bigraph("coexistence")
    p = params_from_scale(h, K11, 4)
    assert p.q is not None and p.q <= 16
    assert abs(p.q * p.alpha * 64 - p.a) <= Fraction(1, 4)


def test_normalized_exponents_max_half():
    h = fixture_bigraph("case1")
    alpha, beta, gamma_exp = normalized_exponents(h, K11)
    assert max(alpha, beta) == Fraction(1, 2)
    assert abs(gamma_exp - Fraction(1, 2)) < Fraction(1, 2**100)


def test_build_kab_tiny():
    g = build_kab_gamma_gadget(K11, EMPTY, EMPTY, GadgetParams(a=1, b=1))
    assert g.total == 4
    assert len(g.edges) == 3


def test_build_kab_counts():
    g = build_kab_gamma_gadget(
        K11, K11, EMPTY, GadgetParams(a=2, b=1, copies_gamma=1)
    )
    # K(2,1) has 2 edges, two instance/decoration edges, and the cross edges
    # attach both remaining left vertices to K's right vertex
    assert (g.lsize, g.rsize) == (4, 3)
    assert len(g.edges) == 2 + 1 + 1 + 2


def test_build_kab_rejects_disconnected_instance():
    two = TwoColouredGraph(2, 2, [(0, 0), (1, 1)])
    with pytest.raises(PreconditionError):
        build_kab_gamma_gadget(two, EMPTY, EMPTY, GadgetParams(a=1, b=1))


def test_build_kab_rejects_isolated_right_decoration():
    lonely = TwoColouredGraph(0, 1, [])
    with pytest.raises(PreconditionError):
        build_kab_gamma_gadget(K11, lonely, EMPTY, GadgetParams(a=1, b=1))


def test_phase_kab_trivial_target():
    rep = phase_decompose_kab(K11, SINGLE_L, EMPTY, EMPTY, GadgetParams(a=1, b=1))
    assert rep.exact
    assert [(e.key, e.actual) for e in rep.entries] == [((((0,), (0,))), 1)]


def test_phase_kab_p4_phases_match():
    rep = phase_decompose_kab(
        fixture_bigraph("p4"), K11, EMPTY, EMPTY, GadgetParams(a=1, b=1)
    )
    assert rep.exact
    assert rep.total_actual == rep.total_independent


def test_phase_kab_with_decoration_and_selector():
    rep = phase_decompose_kab(
        fixture_bigraph("coexistence"),
        K11,
        K11,
        fixture_bigraph("p3"),
        GadgetParams(a=2, b=2, copies_gamma=1, copies_j=1),
    )
    assert rep.exact


def test_phase_kab_guard():
    big = TwoColouredGraph(12, 12, [(i, j) for i in range(12) for j in range(12)])
    with pytest.raises(WorkBudgetExceeded):
        phase_decompose_kab(
            fixture_bigraph("p4"), big, EMPTY, EMPTY, GadgetParams(a=1, b=1)
        )


def test_bis_gadget_build_shape():
    g = build_bis_gadget(K11, EMPTY, GadgetParams(a=1, b=1))
    # one block per instance vertex, plus the joining edges
    assert (g.lsize, g.rsize) == (2, 2)
    assert len(g.edges) == 3


def test_bis_phase_counts_match_independent_sets():
    p4 = fixture_bigraph("p4")
    for gp, want in (
        (SINGLE_L, 2),
        (K11, 3),
        (fixture_bigraph("p3"), 5),
        (p4, 8),
    ):
        rep = phase_decompose_bis(p4, gp, EMPTY, GadgetParams(a=1, b=1))
        assert rep.exact
        assert rep.good_permissible == count_bis(gp) == want
        assert rep.nonpermissible_good_zero


def test_bis_with_decoration():
    rep = phase_decompose_bis(
        fixture_bigraph("coexistence"), K11, K11,
        GadgetParams(a=1, b=1, copies_gamma=1),
    )
    assert rep.good_permissible == 3
    assert rep.nonpermissible_good_zero
    assert rep.total_actual == rep.total_independent


def test_col_gadget_edge_only():
    rep = phase_decompose_col(fixture_graph("h_is"), EMPTY, EMPTY, 0, 0, 0)
    assert rep.exact
    # the gadget degenerates to one edge; each ordered target pair hosts one
    assert all(e.predicted == 1 for e in rep.entries)
    assert rep.total_actual == 3


def test_col_gadget_blocks_and_selector():
    h = fixture_graph("h_is")
    rep = phase_decompose_col(h, K11, K11, 1, 1, 0)
    assert rep.exact
    by_key = {e.key: e.actual for e in rep.entries}
    # deg(0) = 2, deg(1) = 1; the cover subgraph of (0,0) admits 3 edge
    # placements, of (0,1)/(1,0) exactly 2 each
    assert by_key[((0,), (0,))] == 2 * 2 * 3
    assert by_key[((0,), (1,))] == 2 * 1 * 2
    assert by_key[((1,), (0,))] == 1 * 2 * 2


def test_col_k3_grid():
    k3 = fixture_graph("triangle")
    for size_a in (0, 1, 2):
        for size_b in (0, 1, 2):
            rep = phase_decompose_col(k3, K11, K11, size_a, size_b, 1)
            assert rep.exact


def test_col_refuses_trivial_target():
    from homlab.graphs import Graph

    with pytest.raises(PreconditionError):
        phase_decompose_col(Graph(1, [(0, 0)]), K11, K11, 1, 1, 0)


def test_xz_bound_examples():
    assert xz_bound_check(1, Fraction(1, 7), 5, 10)
    assert xz_bound_check(5, Fraction(1, 100), 5, 100)
    assert xz_bound_check(2, Fraction(-1, 10), 2, 10)


def test_bracket_reports_hold():
    h = fixture_bigraph("coexistence")
    for n in (4, 6, 8):
        rep = approx_bracket_report(h, K11, n)
        assert rep.all_ok


def test_bracket_monotone_on_strict_witness_target():
    h = fixture_bigraph("case1")
    ratios = [approx_bracket_report(h, K11, n).dominant_ratio for n in (4, 6, 8)]
    assert ratios[0] < ratios[1] < ratios[2]


def test_work_budget_env_override(monkeypatch):
    monkeypatch.setenv("HOMLAB_MAX_WORK", "10")
    with pytest.raises(WorkBudgetExceeded):
        phase_decompose_kab(
            fixture_bigraph("p4"), K11, EMPTY, EMPTY, GadgetParams(a=2, b=2)
        )
