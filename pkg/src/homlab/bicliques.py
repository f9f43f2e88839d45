"""Biclique enumeration and the dominance analysis.

For a full, non-trivial 2-coloured target the analysis fixes exponents
(alpha, beta) that equalize the two extremal bicliques' weight, computes the
argmax set of |S_L|^alpha |S_R|^beta over all bicliques, then reweights by a
decoration graph: each maximal biclique gets the count of the decoration into
its derived subgraph, and an exponent correction gamma re-equalizes the
extremal pair.  All argmax decisions go through the certified comparator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import exactcmp
from .counting import count_fixcol
from .exactcmp import LogForm
from .graphs import TwoColouredGraph, _popcount_iter
from .structure import (
    Biclique,
    FullnessProfile,
    PreconditionError,
    derived_subgraph,
    is_maximal_biclique,
    neighbourhood_joint,
    require_full_nontrivial,
)

BICLIQUE_SIDE_GUARD = 20


def all_bicliques(h: TwoColouredGraph) -> list[Biclique]:
    """Every biclique (both sides non-empty) of h, deterministically ordered."""
    if h.lsize > BICLIQUE_SIDE_GUARD or h.rsize > BICLIQUE_SIDE_GUARD:
        raise PreconditionError(
            f"biclique enumeration limited to {BICLIQUE_SIDE_GUARD} vertices per side"
        )
    out = []
    for lmask in range(1, 1 << h.lsize):
        joint = (1 << h.rsize) - 1
        for i in _popcount_iter(lmask):
            joint &= h.left_adj[i]
        if not joint:
            continue
        s_l = frozenset(_popcount_iter(lmask))
        # all non-empty subsets of the joint neighbourhood pair with s_l
        members = list(_popcount_iter(joint))
        for rmask in range(1, 1 << len(members)):
            s_r = frozenset(members[k] for k in _popcount_iter(rmask))
            out.append(Biclique(s_l, s_r))
    out.sort(key=lambda b: b.key())
    return out


def maximal_bicliques(h: TwoColouredGraph) -> list[Biclique]:
    """Maximal bicliques, via the closure characterization."""
    seen = set()
    out = []
    for lmask in range(1, 1 << h.lsize):
        joint = (1 << h.rsize) - 1
        for i in _popcount_iter(lmask):
            joint &= h.left_adj[i]
        if not joint:
            continue
        s_r = frozenset(_popcount_iter(joint))
        s_l = neighbourhood_joint(h, s_r, "R")
        b = Biclique(s_l, s_r)
        if s_l and b.key() not in seen:
            seen.add(b.key())
            assert is_maximal_biclique(h, b)
            out.append(b)
    out.sort(key=lambda b: b.key())
    return out


# ---------------------------------------------------------------------------
# Exponent pair
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExponentPair:
    """Exponents equalizing the two extremal bicliques, stored symbolically.

    alpha is proportional to ln(v_r/f_r) and beta to ln(v_l/f_l); only the
    ratio matters for any argmax decision (scale invariance), display values
    are normalized so max(alpha, beta) = 1/2.
    """

    v_l: int
    f_l: int
    v_r: int
    f_r: int

    def alpha_form(self) -> LogForm:
        return LogForm.ln(self.v_r, self.f_r)

    def beta_form(self) -> LogForm:
        return LogForm.ln(self.v_l, self.f_l)

    def display(self, prec: int = 200) -> tuple[mpmath.mpf, mpmath.mpf]:
        with mpmath.workprec(prec):
            a0 = mpmath.log(mpmath.mpf(self.v_r) / self.f_r)
            b0 = mpmath.log(mpmath.mpf(self.v_l) / self.f_l)
            s = 1 / (2 * max(a0, b0))
            return (+(a0 * s), +(b0 * s))


def exponent_pair(h: TwoColouredGraph) -> ExponentPair:
    prof = require_full_nontrivial(h)
    # full + non-trivial forces proper containment on both sides
    assert len(prof.f_l) < h.lsize and len(prof.f_r) < h.rsize
    return ExponentPair(
        v_l=h.lsize, f_l=len(prof.f_l), v_r=h.rsize, f_r=len(prof.f_r)
    )


def extremal_pair(h: TwoColouredGraph, prof: FullnessProfile) -> tuple[Biclique, Biclique]:
    """The two distinguished maximal bicliques (f_l, all R) and (all L, f_r)."""
    ex1 = Biclique(prof.f_l, frozenset(range(h.rsize)))
    ex2 = Biclique(frozenset(range(h.lsize)), prof.f_r)
    return ex1, ex2


# ---------------------------------------------------------------------------
# Dominating sets
# ---------------------------------------------------------------------------

def _argmax_certified(
    candidates: list[Biclique],
    weight,  # Biclique -> LogForm
    start_bits: int,
    max_bits: int,
) -> list[Biclique]:
    best: list[Biclique] = []
    best_form: LogForm | None = None
    for b in candidates:
        f = weight(b)
        if best_form is None:
            best, best_form = [b], f
            continue
        verdict = exactcmp.certified_compare(f, best_form, start_bits, max_bits)
        if verdict == exactcmp.GREATER:
            best, best_form = [b], f
        elif verdict == exactcmp.EQUAL:
            best.append(b)
    return best


def dominating_set(
    h: TwoColouredGraph,
    ep: ExponentPair,
    start_bits: int = exactcmp.DEFAULT_START_BITS,
    max_bits: int = exactcmp.DEFAULT_MAX_BITS,
) -> list[Biclique]:
    """Argmax of |S_L|^alpha |S_R|^beta over all bicliques; ties retained."""
    alpha, beta = ep.alpha_form(), ep.beta_form()

    def weight(b: Biclique) -> LogForm:
        return alpha * LogForm.ln(len(b.s_l)) + beta * LogForm.ln(len(b.s_r))

    winners = _argmax_certified(all_bicliques(h), weight, start_bits, max_bits)
    assert all(is_maximal_biclique(h, b) for b in winners)
    return winners


def dominating_set_rational(
    h: TwoColouredGraph,
    alpha: Fraction,
    beta: Fraction,
    start_bits: int = exactcmp.DEFAULT_START_BITS,
    max_bits: int = exactcmp.DEFAULT_MAX_BITS,
) -> list[Biclique]:
    """Dominating set for explicit rational exponents (exploratory use)."""
    if alpha <= 0 or beta <= 0:
        raise PreconditionError("exponents must be positive")

    def weight(b: Biclique) -> LogForm:
        return LogForm.ln(len(b.s_l)).scale(alpha) + LogForm.ln(len(b.s_r)).scale(beta)

    winners = _argmax_certified(all_bicliques(h), weight, start_bits, max_bits)
    assert all(is_maximal_biclique(h, b) for b in winners)
    return winners


# ---------------------------------------------------------------------------
# Decoration reweighting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ZetaProfile:
    """Per-maximal-biclique decoration counts plus the extremal closed forms."""

    zeta: dict  # Biclique -> int
    zeta_ex1: int
    zeta_ex2: int

    def __post_init__(self):
        assert self.zeta_ex1 <= self.zeta_ex2


def zeta_value(h: TwoColouredGraph, b: Biclique, gamma_graph: TwoColouredGraph) -> int:
    """Count of the decoration into the subgraph the phase b confines it to."""
    return count_fixcol(derived_subgraph(h, b), gamma_graph)


def zeta_profile(
    h: TwoColouredGraph, gamma_graph: TwoColouredGraph
) -> ZetaProfile:
    prof = require_full_nontrivial(h)
    ex1, ex2 = extremal_pair(h, prof)
    zeta = {}
    for b in maximal_bicliques(h):
        zeta[b] = zeta_value(h, b, gamma_graph)
    closed_ex1 = len(prof.f_l) ** gamma_graph.lsize * h.rsize ** gamma_graph.rsize
    assert zeta[ex1] == closed_ex1, "closed form for the complete-bipartite side"
    assert zeta[ex2] == count_fixcol(h, gamma_graph)
    return ZetaProfile(zeta=zeta, zeta_ex1=zeta[ex1], zeta_ex2=zeta[ex2])


@dataclass(frozen=True)
class GammaValue:
    """The correction exponent, as the integer 4-tuple it is defined by.

    gamma solves zeta_ex1 * v_r^gamma = zeta_ex2 * f_r^gamma, i.e.
    gamma = ln(zeta_ex2/zeta_ex1) / ln(v_r/f_r) >= 0.
    """

    zeta_ex2: int
    zeta_ex1: int
    v_r: int
    f_r: int

    def as_fraction(self) -> Fraction | None:
        return exactcmp.log_ratio_as_fraction(
            self.zeta_ex2, self.zeta_ex1, self.v_r, self.f_r
        )

    def decimal(self, digits: int = 30) -> str:
        with mpmath.workprec(digits * 4 + 40):
            num = mpmath.log(mpmath.mpf(self.zeta_ex2) / self.zeta_ex1)
            den = mpmath.log(mpmath.mpf(self.v_r) / self.f_r)
            return mpmath.nstr(num / den, digits)

    def tuple4(self) -> tuple[int, int, int, int]:
        return (self.zeta_ex2, self.zeta_ex1, self.v_r, self.f_r)


def gamma(zp: ZetaProfile, ep: ExponentPair) -> GammaValue:
    gv = GammaValue(
        zeta_ex2=zp.zeta_ex2, zeta_ex1=zp.zeta_ex1, v_r=ep.v_r, f_r=ep.f_r
    )
    # residual of the defining equation, multiplied through by ln(v_r/f_r):
    # it must cancel identically.
    residual = (
        LogForm.ln(gv.zeta_ex1) * LogForm.ln(ep.v_r, ep.f_r)
        + LogForm.ln(gv.zeta_ex2, gv.zeta_ex1) * LogForm.ln(ep.v_r)
        - LogForm.ln(gv.zeta_ex2) * LogForm.ln(ep.v_r, ep.f_r)
        - LogForm.ln(gv.zeta_ex2, gv.zeta_ex1) * LogForm.ln(ep.f_r)
    )
    assert residual.is_zero(), "defining equation must cancel symbolically"
    return gv


def _gamma_weight(b: Biclique, zp: ZetaProfile, ep: ExponentPair) -> LogForm:
    """ln of (zeta(b) * |S_R|^gamma), scaled by the positive ln(v_r/f_r)."""
    return LogForm.ln(zp.zeta[b]) * LogForm.ln(ep.v_r, ep.f_r) + LogForm.ln(
        len(b.s_r)
    ) * LogForm.ln(zp.zeta_ex2, zp.zeta_ex1)


def gamma_dominating_set(
    h: TwoColouredGraph,
    ep: ExponentPair,
    zp: ZetaProfile,
    gv: GammaValue,
    c_ab: list[Biclique],
    start_bits: int = exactcmp.DEFAULT_START_BITS,
    max_bits: int = exactcmp.DEFAULT_MAX_BITS,
) -> list[Biclique]:
    """Argmax of zeta(b) * |S_R|^gamma over the dominating set; ties retained."""
    prof = require_full_nontrivial(h)
    ex1, ex2 = extremal_pair(h, prof)
    w_ex1 = _gamma_weight(ex1, zp, ep)
    w_ex2 = _gamma_weight(ex2, zp, ep)
    assert (w_ex1 - w_ex2).is_zero(), "extremal weights equalized by construction"
    winners = _argmax_certified(
        c_ab, lambda b: _gamma_weight(b, zp, ep), start_bits, max_bits
    )
    assert all(is_maximal_biclique(h, b) for b in winners)
    return winners


# ---------------------------------------------------------------------------
# One-call analysis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DominanceContext:
    """Everything the dominance analysis produces for one (target, decoration)."""

    target: TwoColouredGraph
    gamma_graph: TwoColouredGraph
    profile: FullnessProfile
    ep: ExponentPair
    bicliques: list[Biclique]
    maximal: list[Biclique]
    c_ab: list[Biclique]
    zp: ZetaProfile
    gv: GammaValue
    c_ab_gamma: list[Biclique]

    @property
    def contains_extremal(self) -> bool:
        ex1, ex2 = extremal_pair(self.target, self.profile)
        return ex1 in self.c_ab or ex2 in self.c_ab

    @property
    def contains_nonextremal(self) -> bool:
        ex = set(extremal_pair(self.target, self.profile))
        return any(b not in ex for b in self.c_ab)

    def to_json_dict(self) -> dict:
        ex1, ex2 = extremal_pair(self.target, self.profile)
        alpha, beta = self.ep.display()
        return {
            "target": self.target.to_text(),
            "gamma_graph": self.gamma_graph.to_text(),
            "full_left": sorted(self.profile.f_l),
            "full_right": sorted(self.profile.f_r),
            "alpha": mpmath.nstr(alpha, 30),
            "beta": mpmath.nstr(beta, 30),
            "extremal": [list(map(list, ex1.key())), list(map(list, ex2.key()))],
            "bicliques": [list(map(list, b.key())) for b in self.bicliques],
            "maximal": [list(map(list, b.key())) for b in self.maximal],
            "dominating": [list(map(list, b.key())) for b in self.c_ab],
            "zeta": {
                str(b.key()): str(v) for b, v in sorted(
                    self.zp.zeta.items(), key=lambda kv: kv[0].key()
                )
            },
            "zeta_ex1": str(self.zp.zeta_ex1),
            "zeta_ex2": str(self.zp.zeta_ex2),
            "gamma_tuple": list(self.gv.tuple4()),
            "gamma_decimal": self.gv.decimal(30),
            "gamma_dominating": [list(map(list, b.key())) for b in self.c_ab_gamma],
        }


def analyze(
    h: TwoColouredGraph,
    gamma_graph: TwoColouredGraph | None = None,
    start_bits: int = exactcmp.DEFAULT_START_BITS,
    max_bits: int = exactcmp.DEFAULT_MAX_BITS,
) -> DominanceContext:
    """Full dominance analysis; with no decoration the empty graph is used."""
    if gamma_graph is None:
        gamma_graph = TwoColouredGraph(0, 0, [])
    prof = require_full_nontrivial(h)
    ep = exponent_pair(h)
    bic = all_bicliques(h)
    maximal = maximal_bicliques(h)
    c_ab = dominating_set(h, ep, start_bits, max_bits)
    zp = zeta_profile(h, gamma_graph)
    gv = gamma(zp, ep)
    c_ab_gamma = gamma_dominating_set(h, ep, zp, gv, c_ab, start_bits, max_bits)
    if not gamma_graph.total:
        assert c_ab_gamma == c_ab, "empty decoration must not change the argmax"
    return DominanceContext(
        target=h,
        gamma_graph=gamma_graph,
        profile=prof,
        ep=ep,
        bicliques=bic,
        maximal=maximal,
        c_ab=c_ab,
        zp=zp,
        gv=gv,
        c_ab_gamma=c_ab_gamma,
    )
