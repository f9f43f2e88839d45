import random
from fractions import Fraction

import mpmath
import pytest

from homlab.bicliques import (
    all_bicliques,
    analyze,
    dominating_set,
    dominating_set_rational,
    exponent_pair,
    extremal_pair,
    gamma,
    gamma_dominating_set,
    maximal_bicliques,
    zeta_profile,
)
from homlab.fixtures import fixture_bigraph
from homlab.graphs import TwoColouredGraph, canonical_side_bounded
from homlab.structure import (
    Biclique,
    PreconditionError,
    fullness,
    is_maximal_biclique,
)

K11 = TwoColouredGraph(1, 1, [(0, 0)])
P4 = TwoColouredGraph(2, 2, [(0, 0), (1, 0), (1, 1)])
EMPTY = TwoColouredGraph(0, 0, [])


def test_all_bicliques_k11():
    bs = all_bicliques(K11)
    assert len(bs) == 1
    assert is_maximal_biclique(K11, bs[0])


def test_all_bicliques_p4():
    keys = {b.key() for b in maximal_bicliques(P4)}
    assert keys == {((1,), (0, 1)), ((0, 1), (0,))}


def test_coexistence_maximal_bicliques():
    h = fixture_bigraph("coexistence")
    keys = {b.key() for b in maximal_bicliques(h)}
    assert ((0,), (0, 1, 2, 3)) in keys
    assert ((0, 1, 2, 3), (0,)) in keys
    assert ((0, 1), (0, 1)) in keys
    assert ((0, 2), (0, 2)) in keys


def test_exponent_pair_requires_full_nontrivial():
    k22 = TwoColouredGraph(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
    with pytest.raises(PreconditionError):
        exponent_pair(k22)
    with pytest.raises(PreconditionError):
        exponent_pair(TwoColouredGraph(2, 1, [(0, 0)]))  # not full


def test_exponent_pair_symmetry():
    ep = exponent_pair(fixture_bigraph("case1"))
    # same ratio on both sides forces equal display exponents
    a, b = ep.display()
    assert a == b == mpmath.mpf("0.5")
    assert (ep.alpha_form() - ep.beta_form()).is_zero()


def test_exponent_pair_two_to_one_ratio():
    # left ratio is the square of the right ratio: alpha:beta = 1:2
    h = TwoColouredGraph(
        4,
        2,
        [(i, 0) for i in range(4)] + [(0, 1)],
    )
    # full: vertex 0 on L sees all of R; vertex 0 on R sees all of L
    ep = exponent_pair(h)
    assert (ep.v_l, ep.f_l, ep.v_r, ep.f_r) == (4, 1, 2, 1)
    a, b = ep.display()
    assert mpmath.almosteq(2 * a, b)


def test_dominating_set_scale_invariance():
    h = fixture_bigraph("coexistence")
    base = dominating_set_rational(h, Fraction(1), Fraction(1))
    for s in (Fraction(2), Fraction(1, 3), Fraction(7, 5)):
        assert dominating_set_rational(h, s, s) == base


def test_dominating_set_matches_eq_pair():
    h = fixture_bigraph("coexistence")
    ep = exponent_pair(h)
    assert dominating_set(h, ep) == dominating_set_rational(h, Fraction(1), Fraction(1))


def test_zeta_profile_empty_decoration():
    h = fixture_bigraph("case1")
    zp = zeta_profile(h, EMPTY)
    assert zp.zeta_ex1 == zp.zeta_ex2 == 1
    assert all(v == 1 for v in zp.zeta.values())


def test_zeta_profile_case_values():
    for name, ex2 in (("case1", 27), ("case3", 29)):
        h = fixture_bigraph(name)
        zp = zeta_profile(h, K11)
        assert zp.zeta_ex1 == 9 and zp.zeta_ex2 == ex2
        b1 = Biclique(frozenset({0, 1, 2}), frozenset({0, 1, 2}))
        assert zp.zeta[b1] == 16


def test_gamma_values():
    h = fixture_bigraph("case1")
    ep = exponent_pair(h)
    gv = gamma(zeta_profile(h, EMPTY), ep)
    assert gv.as_fraction() == 0
    gv = gamma(zeta_profile(h, K11), ep)
    assert gv.as_fraction() == Fraction(1, 2)
    h3 = fixture_bigraph("case3")
    gv3 = gamma(zeta_profile(h3, K11), exponent_pair(h3))
    assert gv3.tuple4() == (29, 9, 9, 1)
    assert gv3.as_fraction() is None
    assert gv3.decimal(12).startswith("0.5325")


def test_gamma_dominating_examples():
    ctx1 = analyze(fixture_bigraph("case1"), K11)
    assert [b.key() for b in ctx1.c_ab_gamma] == [((0, 1, 2), (0, 1, 2))]
    ctx3 = analyze(fixture_bigraph("case3"), K11)
    ex = sorted(b.key() for b in extremal_pair(ctx3.target, ctx3.profile))
    assert sorted(b.key() for b in ctx3.c_ab_gamma) == ex


def test_empty_decoration_gamma_set_equals_plain_set():
    for name in ("case1", "case3", "coexistence", "p4"):
        ctx = analyze(fixture_bigraph(name))
        assert ctx.c_ab_gamma == ctx.c_ab


def test_analysis_json_is_serializable():
    import json

    ctx = analyze(fixture_bigraph("coexistence"), K11)
    payload = json.dumps(ctx.to_json_dict(), sort_keys=True)
    assert "gamma_tuple" in payload


def _float_argmax(h, gamma_graph, prec=200):
    """Independent floating-point recomputation of the reweighted argmax."""
    prof = fullness(h)
    ep = exponent_pair(h)
    zp = zeta_profile(h, gamma_graph)
    with mpmath.workprec(prec):
        gam = mpmath.log(mpmath.mpf(zp.zeta_ex2) / zp.zeta_ex1) / mpmath.log(
            mpmath.mpf(ep.v_r) / ep.f_r
        )
        alpha = mpmath.log(mpmath.mpf(ep.v_r) / ep.f_r)
        beta = mpmath.log(mpmath.mpf(ep.v_l) / ep.f_l)

        def kab_weight(b):
            return alpha * mpmath.log(len(b.s_l)) + beta * mpmath.log(len(b.s_r))

        allb = all_bicliques(h)
        best = max(kab_weight(b) for b in allb)
        c_ab = [b for b in allb if mpmath.almosteq(kab_weight(b), best)]

        def gweight(b):
            return mpmath.log(zp.zeta[b]) + gam * mpmath.log(len(b.s_r))

        best2 = max(gweight(b) for b in c_ab)
        return sorted(b.key() for b in c_ab if mpmath.almosteq(gweight(b), best2))


def test_certified_argmax_matches_float_oracle():
    # exhaustive over full non-trivial targets with up to 3 vertices a side,
    # then a seeded sample of bigger ones; decorations up to 2 vertices a side
    gammas = canonical_side_bounded(2)
    pool = [
        h
        for h in canonical_side_bounded(3)
        if fullness(h).is_full and not fullness(h).is_trivial
    ]
    rng = random.Random(4242)
    for _ in range(60):
        l = rng.randint(3, 5)
        r = rng.randint(3, 5)
        edges = {
            (i, jj)
            for i in range(l)
            for jj in range(r)
            if rng.random() < 0.55
        }
        h = TwoColouredGraph(l, r, edges)
        prof = fullness(h)
        if prof.is_full and not prof.is_trivial:
            pool.append(h)
    checked = 0
    for h in pool:
        ep = exponent_pair(h)
        c_ab = dominating_set(h, ep)
        for g in gammas:
            zp = zeta_profile(h, g)
            gv = gamma(zp, ep)
            winners = gamma_dominating_set(h, ep, zp, gv, c_ab)
            assert sorted(b.key() for b in winners) == _float_argmax(h, g), (h, g)
            checked += 1
    assert checked >= 400


def test_enumeration_guard():
    with pytest.raises(PreconditionError):
        all_bicliques(TwoColouredGraph(21, 1, [(i, 0) for i in range(21)]))
