"""Reduction gadgets and their exact phase decompositions.

Three constructions are materialized at desk scale:

* the decorated complete-bipartite gadget: a K(a,b) with a connected
  instance, decoration copies and selector copies all glued to its right
  side; its homomorphism count splits exactly over biclique phases,
* the per-vertex gadget encoding independent sets: one decorated K(a,b)
  per instance vertex, wired along instance edges; good permissible phase
  vectors biject with independent sets,
* the two-pin plain-graph gadget: special vertices w_a, w_b with attached
  independent blocks, selector copies and the instance; its count splits
  exactly over edge pairs (h(w_a), h(w_b)).

Every per-phase count has a closed form that is exact at any scale; the
decomposers recompute the counts by brute-force bucketing and compare.
Approximation enters only through the integer-exponent selection (the
simultaneous rational approximation below) and is reported as two-sided
bracket residuals, never folded into the exact identities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .bicliques import (
    all_bicliques,
    dominating_set,
    exponent_pair,
    extremal_pair,
    gamma,
    gamma_dominating_set,
    maximal_bicliques,
    zeta_profile,
)
from .counting import (
    WorkBudgetExceeded,
    count_bis,
    count_col,
    count_fixcol,
    surjection_count,
    work_budget,
)
from .graphs import Graph, TwoColouredGraph, disjoint_union
from .structure import (
    Biclique,
    PreconditionError,
    derived_subgraph,
    h_uv,
    has_trivial_component,
    require_full_nontrivial,
)

GADGET_VERTEX_GUARD = 22
DIRICHLET_SCAN_GUARD = 10**5


# ---------------------------------------------------------------------------
# Simultaneous rational approximation
# ---------------------------------------------------------------------------

def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (float, str)):
        return Fraction(x)
    if isinstance(x, mpmath.mpf):
        man, exp = mpmath.mp.mpf(x).man_exp
        return Fraction(int(man)) * Fraction(2) ** int(exp)
    raise TypeError(f"cannot convert {type(x)} to an exact fraction")


def _cf_convergents(x: Fraction):
    """Continued fraction convergents (p, q) of a positive fraction."""
    p0, q0, p1, q1 = 0, 1, 1, 0
    while True:
        a = x.numerator // x.denominator
        p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
        yield p1, q1
        frac = x - a
        if frac == 0:
            return
        x = 1 / frac


def dirichlet(alphas, big_n: int) -> tuple[int, list[int]]:
    """Positive integers q <= big_n and p_i with |q*alpha_i - p_i| <= big_n^(-1/d).

    Inputs are taken as exact rationals (high-precision binary floats convert
    exactly), so the bound check is exact: the d-th power of each error is
    compared against 1/big_n in rational arithmetic.  One value is handled by
    continued-fraction convergents; several by an exhaustive scan over q.
    Existence within the bound is guaranteed either way.
    """
    if big_n < 1:
        raise ValueError("big_n must be positive")
    vals = [_to_fraction(a) for a in alphas]
    if not vals or any(v <= 0 for v in vals):
        raise ValueError("alphas must be positive")
    d = len(vals)
    if d == 1:
        x = vals[0]
        best = None
        for p, q in _cf_convergents(x):
            if q > big_n:
                break
            if p >= 1:
                best = (q, [p])
        if best is not None and abs(best[0] * x - best[1][0]) * big_n <= 1:
            return best
        # fall through to the scan when convergents with p >= 1 are too coarse
    if big_n > DIRICHLET_SCAN_GUARD:
        raise PreconditionError(f"scan bound {big_n} above guard {DIRICHLET_SCAN_GUARD}")
    for q in range(1, big_n + 1):
        ps = []
        for v in vals:
            p = int(q * v + Fraction(1, 2))
            if p < 1 or abs(q * v - p) ** d * big_n > 1:
                break
            ps.append(p)
        else:
            return q, ps
    raise RuntimeError("no admissible (q, p) found; existence is guaranteed")


# ---------------------------------------------------------------------------
# Parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GadgetParams:
    """Sizes for one gadget instance.

    For scale-derived parameters, ``q`` and ``n`` record the approximation
    choice and (a, b) satisfy |q*alpha*n^3 - a| <= 1/n and
    |q*(beta*n^3 + gamma_exp*n^2) - b| <= 1/n for the stored exponents.
    """

    a: int
    b: int
    copies_gamma: int = 0
    copies_j: int = 0
    q: int | None = None
    n: int | None = None
    alpha: Fraction | None = None
    beta: Fraction | None = None
    gamma_exp: Fraction | None = None

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise PreconditionError("gadget sides must be at least 1")
        if self.copies_gamma < 0 or self.copies_j < 0:
            raise PreconditionError("copy counts must be non-negative")
        if self.n is not None:
            bound = Fraction(1, self.n)
            assert self.q is not None
            assert abs(self.q * self.alpha * self.n**3 - self.a) <= bound
            assert (
                abs(
                    self.q * (self.beta * self.n**3 + self.gamma_exp * self.n**2)
                    - self.b
                )
                <= bound
            )


def normalized_exponents(
    h: TwoColouredGraph, gamma_graph: TwoColouredGraph, prec: int = 240
) -> tuple[Fraction, Fraction, Fraction]:
    """(alpha, beta, gamma) as exact dyadic snapshots at ``prec`` bits.

    alpha and beta are normalized so the larger is 1/2; gamma is the
    correction exponent of the decoration.
    """
    ep = exponent_pair(h)
    zp = zeta_profile(h, gamma_graph)
    gv = gamma(zp, ep)
    with mpmath.workprec(prec):
        a0 = mpmath.log(mpmath.mpf(ep.v_r) / ep.f_r)
        b0 = mpmath.log(mpmath.mpf(ep.v_l) / ep.f_l)
        s = 1 / (2 * max(a0, b0))
        g0 = mpmath.log(mpmath.mpf(gv.zeta_ex2) / gv.zeta_ex1) / mpmath.log(
            mpmath.mpf(gv.v_r) / gv.f_r
        )
        return _to_fraction(+(a0 * s)), _to_fraction(+(b0 * s)), _to_fraction(+g0)


def params_from_scale(
    h: TwoColouredGraph,
    gamma_graph: TwoColouredGraph,
    n: int,
    copies_gamma: int = 0,
    copies_j: int = 0,
    prec: int = 240,
) -> GadgetParams:
    """Derive (a, b, q) by simultaneous approximation at scale n."""
    alpha, beta, gamma_exp = normalized_exponents(h, gamma_graph, prec)
    q, (a, b) = dirichlet([alpha * n**3, beta * n**3 + gamma_exp * n**2], n**2)
    return GadgetParams(
        a=a,
        b=b,
        copies_gamma=copies_gamma,
        copies_j=copies_j,
        q=q,
        n=n,
        alpha=alpha,
        beta=beta,
        gamma_exp=gamma_exp,
    )


# ---------------------------------------------------------------------------
# Homomorphism enumeration with key-vertex bucketing
# ---------------------------------------------------------------------------

def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _guarded(h_l: int, h_r: int, g: TwoColouredGraph) -> None:
    if g.total > GADGET_VERTEX_GUARD:
        raise WorkBudgetExceeded(
            f"gadget has {g.total} vertices, guard is {GADGET_VERTEX_GUARD}"
        )
    estimate = max(h_l, 1) ** g.lsize * max(h_r, 1) ** g.rsize
    if estimate > work_budget():
        raise WorkBudgetExceeded(
            f"phase bucketing estimate {estimate} above budget {work_budget()}"
        )


def _iter_hom_keys(
    h: TwoColouredGraph,
    g: TwoColouredGraph,
    key_l: list[int],
    key_r: list[int],
):
    """All colour-preserving homomorphisms of g into h, yielding for each the
    assignment tuples over key_l and key_r (in key order).

    Key vertices are assigned first so their constraints prune early; the
    rest follows in breadth-first order from the keys.
    """
    _guarded(h.lsize, h.rsize, g)
    if (g.lsize and not h.lsize) or (g.rsize and not h.rsize):
        return
    order: list[tuple[str, int]] = [("L", i) for i in key_l] + [
        ("R", j) for j in key_r
    ]
    placed = set(order)
    queue = list(order)
    while queue:
        side, u = queue.pop(0)
        nbrs = (
            [("R", j) for j in _bits(g.left_adj[u])]
            if side == "L"
            else [("L", i) for i in _bits(g.right_adj[u])]
        )
        for v in nbrs:
            if v not in placed:
                placed.add(v)
                order.append(v)
                queue.append(v)
    for v in [("L", i) for i in range(g.lsize)] + [("R", j) for j in range(g.rsize)]:
        if v not in placed:
            placed.add(v)
            order.append(v)
            queue.append(v)
            while queue:
                side, u = queue.pop(0)
                nbrs = (
                    [("R", j) for j in _bits(g.left_adj[u])]
                    if side == "L"
                    else [("L", i) for i in _bits(g.right_adj[u])]
                )
                for w in nbrs:
                    if w not in placed:
                        placed.add(w)
                        order.append(w)
                        queue.append(w)

    pos = {v: k for k, v in enumerate(order)}
    earlier = []
    for k, (side, u) in enumerate(order):
        nbrs = (
            [("R", j) for j in _bits(g.left_adj[u])]
            if side == "L"
            else [("L", i) for i in _bits(g.right_adj[u])]
        )
        earlier.append([pos[v] for v in nbrs if pos[v] < k])
    sides = [side for side, _ in order]
    full_l = (1 << h.lsize) - 1
    full_r = (1 << h.rsize) - 1
    assign = [0] * len(order)
    nl = len(key_l)
    nk = nl + len(key_r)

    def rec(k: int):
        if k == len(order):
            yield tuple(assign[:nl]), tuple(assign[nl:nk])
            return
        side = sides[k]
        cand = full_l if side == "L" else full_r
        adj = h.right_adj if side == "L" else h.left_adj
        for e in earlier[k]:
            cand &= adj[assign[e]]
        m = cand
        while m:
            low = m & -m
            assign[k] = low.bit_length() - 1
            m ^= low
            yield from rec(k + 1)

    yield from rec(0)


# ---------------------------------------------------------------------------
# Decorated K(a,b) gadget
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _KabLayout:
    graph: TwoColouredGraph
    k_left: list[int]
    k_right: list[int]


def _validate_kab_inputs(g_prime, gamma_graph, j):
    if len(g_prime.components()) > 1:
        raise PreconditionError("instance must be connected")
    if g_prime.isolated_right():
        raise PreconditionError("instance must have no isolated right vertices")
    if gamma_graph.isolated_right() or j.isolated_right():
        raise PreconditionError("decorations must have no isolated right vertices")


def _build_kab_layout(
    g_prime: TwoColouredGraph,
    gamma_graph: TwoColouredGraph,
    j: TwoColouredGraph,
    params: GadgetParams,
) -> _KabLayout:
    kab = TwoColouredGraph(
        params.a,
        params.b,
        list(itertools.product(range(params.a), range(params.b))),
    )
    pieces = [kab, g_prime]
    pieces += [gamma_graph] * params.copies_gamma
    pieces += [j] * params.copies_j
    base = disjoint_union(pieces)
    k_right = list(range(params.b))
    # every left vertex outside the K block attaches to all of K's right side
    extra = [(i, r) for i in range(params.a, base.lsize) for r in k_right]
    graph = TwoColouredGraph(base.lsize, base.rsize, set(base.edges) | set(extra))
    return _KabLayout(graph=graph, k_left=list(range(params.a)), k_right=k_right)


def build_kab_gamma_gadget(
    g_prime: TwoColouredGraph,
    gamma_graph: TwoColouredGraph,
    j: TwoColouredGraph,
    params: GadgetParams,
) -> TwoColouredGraph:
    """The decorated complete-bipartite gadget.

    Disjoint union of K(a,b), the connected instance, decoration copies and
    selector copies, plus all edges from K's right side to every left vertex
    of the attachments.
    """
    _validate_kab_inputs(g_prime, gamma_graph, j)
    return _build_kab_layout(g_prime, gamma_graph, j, params).graph


@dataclass(frozen=True)
class PhaseEntry:
    key: tuple
    predicted: int
    actual: int


@dataclass(frozen=True)
class PhaseReport:
    entries: list[PhaseEntry]
    total_actual: int
    total_independent: int

    @property
    def exact(self) -> bool:
        return (
            all(e.predicted == e.actual for e in self.entries)
            and sum(e.actual for e in self.entries) == self.total_actual
            and self.total_actual == self.total_independent
        )

    def to_json_dict(self) -> dict:
        return {
            "phases": [
                {
                    "key": [list(map(int, part)) for part in e.key],
                    "predicted": str(e.predicted),
                    "actual": str(e.actual),
                }
                for e in self.entries
            ],
            "total": str(self.total_actual),
            "total_independent_route": str(self.total_independent),
            "exact": self.exact,
        }


def phase_decompose_kab(
    h: TwoColouredGraph,
    g_prime: TwoColouredGraph,
    gamma_graph: TwoColouredGraph,
    j: TwoColouredGraph,
    params: GadgetParams,
) -> PhaseReport:
    """Exact per-biclique phase counts, brute force against the closed form.

    The closed form for phase (S_L, S_R) is T(a,|S_L|) T(b,|S_R|) times the
    decoration, selector and instance counts into the subgraph the phase
    confines attachments to, each raised to its copy count.  The identity is
    exact at any scale and any target; the total is re-derived by the
    production counter.
    """
    _validate_kab_inputs(g_prime, gamma_graph, j)
    layout = _build_kab_layout(g_prime, gamma_graph, j, params)
    buckets: dict[tuple, int] = {}
    for img_l, img_r in _iter_hom_keys(h, layout.graph, layout.k_left, layout.k_right):
        key = (tuple(sorted(set(img_l))), tuple(sorted(set(img_r))))
        buckets[key] = buckets.get(key, 0) + 1
    entries = []
    for b in all_bicliques(h):
        if len(b.s_l) > params.a or len(b.s_r) > params.b:
            continue
        sub = derived_subgraph(h, b)
        predicted = (
            surjection_count(params.a, len(b.s_l))
            * surjection_count(params.b, len(b.s_r))
            * count_fixcol(sub, gamma_graph) ** params.copies_gamma
            * count_fixcol(sub, j) ** params.copies_j
            * count_fixcol(sub, g_prime)
        )
        key = b.key()
        entries.append(
            PhaseEntry(key=key, predicted=predicted, actual=buckets.pop(key, 0))
        )
    assert not buckets, f"phases outside the biclique set: {sorted(buckets)}"
    total = sum(e.actual for e in entries)
    independent = count_fixcol(h, layout.graph)
    return PhaseReport(entries=entries, total_actual=total, total_independent=independent)


# ---------------------------------------------------------------------------
# Independent-set gadget
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _BisLayout:
    graph: TwoColouredGraph
    block_left: list[list[int]]
    block_right: list[list[int]]
    instance_order: list[tuple[str, int]]


def _build_bis_layout(
    g_prime: TwoColouredGraph,
    gamma_graph: TwoColouredGraph,
    params: GadgetParams,
) -> _BisLayout:
    empty = TwoColouredGraph(0, 0, [])
    block = _build_kab_layout(
        empty,
        gamma_graph,
        empty,
        GadgetParams(a=params.a, b=params.b, copies_gamma=params.copies_gamma),
    ).graph
    order = [("L", i) for i in range(g_prime.lsize)] + [
        ("R", j) for j in range(g_prime.rsize)
    ]
    base = disjoint_union([block] * len(order))
    block_left = [
        list(range(t * block.lsize, t * block.lsize + params.a))
        for t in range(len(order))
    ]
    block_right = [
        list(range(t * block.rsize, t * block.rsize + params.b))
        for t in range(len(order))
    ]
    index = {v: t for t, v in enumerate(order)}
    extra = []
    for i, jj in g_prime.edges:
        tu, tv = index[("L", i)], index[("R", jj)]
        # right side of u's copy joins left side of v's copy completely
        for r in block_right[tu]:
            for l in block_left[tv]:
                extra.append((l, r))
    graph = TwoColouredGraph(base.lsize, base.rsize, set(base.edges) | set(extra))
    return _BisLayout(
        graph=graph,
        block_left=block_left,
        block_right=block_right,
        instance_order=order,
    )


def build_bis_gadget(
    g_prime: TwoColouredGraph,
    gamma_graph: TwoColouredGraph,
    params: GadgetParams,
) -> TwoColouredGraph:
    """One decorated K(a,b) copy per instance vertex, wired along edges."""
    if gamma_graph.isolated_right():
        raise PreconditionError("decoration must have no isolated right vertices")
    return _build_bis_layout(g_prime, gamma_graph, params).graph


@dataclass(frozen=True)
class BisPhaseReport:
    vector_counts: dict
    good_permissible: int
    bis_count: int
    nonpermissible_good_zero: bool
    total_actual: int
    total_independent: int

    @property
    def exact(self) -> bool:
        return (
            self.good_permissible == self.bis_count
            and self.nonpermissible_good_zero
            and self.total_actual == self.total_independent
        )

    def to_json_dict(self) -> dict:
        return {
            "vectors": {str(k): str(v) for k, v in sorted(self.vector_counts.items())},
            "good_permissible_vectors": self.good_permissible,
            "independent_sets": str(self.bis_count),
            "nonpermissible_good_zero": self.nonpermissible_good_zero,
            "total": str(self.total_actual),
            "total_independent_route": str(self.total_independent),
            "exact": self.exact,
        }


def phase_decompose_bis(
    h: TwoColouredGraph,
    g_prime: TwoColouredGraph,
    gamma_graph: TwoColouredGraph,
    params: GadgetParams,
) -> BisPhaseReport:
    """Bucket by per-vertex phase vector and check the independent-set bijection.

    Good vectors assign an extremal phase to every instance vertex; a good
    vector is permissible unless some instance edge pairs the two opposite
    extremal phases in the blocked direction.  Permissible good vectors
    biject with independent sets of the instance, and non-permissible good
    vectors must have zero homomorphisms.
    """
    prof = require_full_nontrivial(h)
    if gamma_graph.isolated_right():
        raise PreconditionError("decoration must have no isolated right vertices")
    layout = _build_bis_layout(g_prime, gamma_graph, params)
    ex1, ex2 = extremal_pair(h, prof)
    key_l = [v for block in layout.block_left for v in block]
    key_r = [v for block in layout.block_right for v in block]
    nverts = len(layout.instance_order)

    buckets: dict[tuple, int] = {}
    for img_l, img_r in _iter_hom_keys(h, layout.graph, key_l, key_r):
        vec = []
        for t in range(nverts):
            sl = img_l[t * params.a : (t + 1) * params.a]
            sr = img_r[t * params.b : (t + 1) * params.b]
            vec.append((tuple(sorted(set(sl))), tuple(sorted(set(sr)))))
        key = tuple(vec)
        buckets[key] = buckets.get(key, 0) + 1

    ex1_key, ex2_key = ex1.key(), ex2.key()
    index = {v: t for t, v in enumerate(layout.instance_order)}

    def permissible(vec) -> bool:
        for i, jj in g_prime.edges:
            if vec[index[("L", i)]] == ex1_key and vec[index[("R", jj)]] == ex2_key:
                return False
        return True

    good_perm = 0
    nonperm_zero = True
    for vec in itertools.product((ex1_key, ex2_key), repeat=nverts):
        if permissible(vec):
            good_perm += 1
        elif buckets.get(tuple(vec), 0) != 0:
            nonperm_zero = False
    return BisPhaseReport(
        vector_counts=buckets,
        good_permissible=good_perm,
        bis_count=count_bis(g_prime),
        nonpermissible_good_zero=nonperm_zero,
        total_actual=sum(buckets.values()),
        total_independent=count_fixcol(h, layout.graph),
    )


# ---------------------------------------------------------------------------
# Two-pin plain-graph gadget
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _ColLayout:
    graph: Graph
    w_a: int
    w_b: int


def _build_col_layout(
    g_prime: TwoColouredGraph,
    j: TwoColouredGraph,
    size_a: int,
    size_b: int,
    copies_j: int,
) -> _ColLayout:
    w_a, w_b = 0, 1
    nxt = 2
    edges: list[tuple[int, int]] = [(w_a, w_b)]
    for _ in range(size_a):
        edges.append((w_a, nxt))
        nxt += 1
    for _ in range(size_b):
        edges.append((w_b, nxt))
        nxt += 1
    for piece in [j] * copies_j + [g_prime]:
        l0 = nxt
        nxt += piece.lsize
        r0 = nxt
        nxt += piece.rsize
        edges += [(l0 + i, r0 + jj) for i, jj in piece.edges]
        edges += [(w_b, l0 + i) for i in range(piece.lsize)]
        edges += [(w_a, r0 + jj) for jj in range(piece.rsize)]
    return _ColLayout(graph=Graph(nxt, edges), w_a=w_a, w_b=w_b)


def build_col_gadget(
    g_prime: TwoColouredGraph,
    j: TwoColouredGraph,
    size_a: int,
    size_b: int,
    copies_j: int = 0,
) -> Graph:
    """Two pinned vertices with attached blobs, as a plain graph.

    w_a and w_b are adjacent; w_a sees an independent block of ``size_a``
    vertices, every right vertex of the instance and of each selector copy;
    w_b symmetrically sees the ``size_b`` block and the left sides.
    """
    if size_a < 0 or size_b < 0 or copies_j < 0:
        raise PreconditionError("sizes must be non-negative")
    return _build_col_layout(g_prime, j, size_a, size_b, copies_j).graph


def phase_decompose_col(
    h: Graph,
    g_prime: TwoColouredGraph,
    j: TwoColouredGraph,
    size_a: int,
    size_b: int,
    copies_j: int = 0,
) -> PhaseReport:
    """Exact per-edge-pair counts for the two-pin gadget.

    For the phase (u, v) = (images of w_a, w_b) the closed form is
    deg(u)^size_a * deg(v)^size_b times the selector and instance counts
    into the cover neighbourhood subgraph of (u, v).  The phases run over
    ordered pairs on edges, a self-loop contributing the single pair (u, u);
    their sum is the full homomorphism count, re-derived independently.
    """
    if has_trivial_component(h):
        raise PreconditionError("target has a trivial component")
    layout = _build_col_layout(g_prime, j, size_a, size_b, copies_j)
    g = layout.graph
    if g.n > GADGET_VERTEX_GUARD:
        raise WorkBudgetExceeded(
            f"gadget has {g.n} vertices, guard is {GADGET_VERTEX_GUARD}"
        )
    if max(h.n, 1) ** g.n > work_budget():
        raise WorkBudgetExceeded(
            f"phase bucketing estimate {max(h.n, 1) ** g.n} above budget {work_budget()}"
        )
    buckets: dict[tuple[int, int], int] = {}
    for pair in _col_bucketed(h, g, layout.w_a, layout.w_b):
        buckets[pair] = buckets.get(pair, 0) + 1
    entries = []
    for u in range(h.n):
        for v in sorted(_bits(h.adj[u])):
            sub = h_uv(h, u, v)
            predicted = (
                h.degree(u) ** size_a
                * h.degree(v) ** size_b
                * count_fixcol(sub, j) ** copies_j
                * count_fixcol(sub, g_prime)
            )
            entries.append(
                PhaseEntry(key=((u,), (v,)), predicted=predicted, actual=buckets.pop((u, v), 0))
            )
    assert not buckets, f"phases outside the edge set: {sorted(buckets)}"
    total = sum(e.actual for e in entries)
    independent = count_col(h, g)
    return PhaseReport(entries=entries, total_actual=total, total_independent=independent)


def _col_bucketed(h: Graph, g: Graph, w_a: int, w_b: int):
    order = [w_a, w_b]
    placed = {w_a, w_b}
    queue = [w_a, w_b]
    while queue:
        u = queue.pop(0)
        for w in sorted(_bits(g.adj[u])):
            if w not in placed:
                placed.add(w)
                order.append(w)
                queue.append(w)
    for v in range(g.n):
        if v not in placed:
            placed.add(v)
            order.append(v)
    pos = {v: k for k, v in enumerate(order)}
    earlier = []
    self_loop = []
    for k, u in enumerate(order):
        earlier.append([pos[w] for w in _bits(g.adj[u]) if w != u and pos[w] < k])
        self_loop.append(g.has_edge(u, u))
    full = (1 << h.n) - 1
    loop_mask = 0
    for u in range(h.n):
        if h.has_edge(u, u):
            loop_mask |= 1 << u
    assign = [0] * len(order)

    def rec(k: int):
        if k == len(order):
            yield (assign[0], assign[1])
            return
        cand = full
        if self_loop[k]:
            cand &= loop_mask
        for e in earlier[k]:
            cand &= h.adj[assign[e]]
        m = cand
        while m:
            low = m & -m
            assign[k] = low.bit_length() - 1
            m ^= low
            yield from rec(k + 1)

    yield from rec(0)


# ---------------------------------------------------------------------------
# Scalar bounds and bracket reports
# ---------------------------------------------------------------------------

def xz_bound_check(x, z, k_cap: int, n: int, prec: int = 200) -> bool:
    """Whether |x^z - 1| <= 2*k_cap/n, certified by interval arithmetic."""
    iv = mpmath.iv
    old = iv.prec
    try:
        iv.prec = prec
        xf = _to_fraction(x)
        zf = _to_fraction(z)
        xi = iv.mpf(xf.numerator) / xf.denominator
        zi = iv.mpf(zf.numerator) / zf.denominator
        lhs = abs(iv.exp(zi * iv.log(xi)) - 1)
        rhs = iv.mpf(2 * k_cap) / n
        return lhs.b <= rhs.a
    finally:
        iv.prec = old


@dataclass(frozen=True)
class BracketEntry:
    biclique_key: tuple
    lo: str
    hi: str
    width_bound: str
    ok: bool


@dataclass(frozen=True)
class BracketReport:
    n: int
    params: GadgetParams
    entries: list[BracketEntry]
    dominant_ratio: Fraction | None  # None when every phase is a winner

    @property
    def all_ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def to_json_dict(self) -> dict:
        if self.dominant_ratio is None:
            ratio = "inf"
        else:
            with mpmath.workprec(200):
                ratio = mpmath.nstr(
                    mpmath.mpf(self.dominant_ratio.numerator)
                    / self.dominant_ratio.denominator,
                    30,
                )
        return {
            "n": self.n,
            "a": self.params.a,
            "b": self.params.b,
            "q": self.params.q,
            "entries": [
                {
                    "biclique": [list(part) for part in e.biclique_key],
                    "ratio_lo": e.lo,
                    "ratio_hi": e.hi,
                    "width_bound": e.width_bound,
                    "ok": e.ok,
                }
                for e in self.entries
            ],
            "dominant_ratio": ratio,
            "all_ok": self.all_ok,
        }


def approx_bracket_report(
    h: TwoColouredGraph,
    gamma_graph: TwoColouredGraph,
    n: int,
    prec: int = 200,
) -> BracketReport:
    """Two-sided bracket residuals for the integer-exponent approximation.

    For every maximal biclique the exact ratio between the integer-exponent
    contribution zeta^(q n^2) |S_L|^a |S_R|^b and its idealized form
    (|S_L|^alpha |S_R|^beta)^(q n^3) (zeta |S_R|^gamma)^(q n^2) equals
    |S_L|^d1 |S_R|^d2 with |d1|, |d2| <= 1/n, so it lies within 1 +- w for
    w = 3(|V_L|+|V_R|)/n (two scalar-power bounds composed).  The ratio is
    evaluated in interval arithmetic against that bracket.

    ``dominant_ratio`` is the exact integer-contribution quotient between the
    reweighted winner and the best other biclique, the quantity whose growth
    in n the separation argument rests on.
    """
    params = params_from_scale(h, gamma_graph, n)
    ep = exponent_pair(h)
    zp = zeta_profile(h, gamma_graph)
    gv = gamma(zp, ep)
    c_ab = dominating_set(h, ep)
    winners = gamma_dominating_set(h, ep, zp, gv, c_ab)
    width = Fraction(3 * (h.lsize + h.rsize), n)
    lo_bound, hi_bound = 1 - width, 1 + width
    entries = []
    iv = mpmath.iv
    old = iv.prec
    try:
        iv.prec = prec

        def iv_frac(fr: Fraction):
            return iv.mpf(fr.numerator) / fr.denominator

        d1 = params.a - params.q * iv_frac(params.alpha) * n**3
        d2 = params.b - params.q * (
            iv_frac(params.beta) * n**3 + iv_frac(params.gamma_exp) * n**2
        )
        for b in maximal_bicliques(h):
            sl, sr = len(b.s_l), len(b.s_r)
            ratio = iv.exp(d1 * iv.log(iv.mpf(sl)) + d2 * iv.log(iv.mpf(sr)))
            ratio_lo = _to_fraction(mpmath.mpf(ratio.a))
            ratio_hi = _to_fraction(mpmath.mpf(ratio.b))
            ok = (lo_bound <= 0 or ratio_lo >= lo_bound) and ratio_hi <= hi_bound
            entries.append(
                BracketEntry(
                    biclique_key=b.key(),
                    lo=mpmath.nstr(mpmath.mpf(ratio.a), 30),
                    hi=mpmath.nstr(mpmath.mpf(ratio.b), 30),
                    width_bound=str(width),
                    ok=bool(ok),
                )
            )
    finally:
        iv.prec = old
    dominant = _dominant_ratio(h, params, winners, zp)
    return BracketReport(n=n, params=params, entries=entries, dominant_ratio=dominant)


def _dominant_ratio(
    h: TwoColouredGraph,
    params: GadgetParams,
    winners: list[Biclique],
    zp,
) -> Fraction | None:
    """Exact contribution quotient winner / best-other; None without others."""

    def contribution(b: Biclique) -> int:
        return (
            zp.zeta[b] ** (params.q * params.n**2)
            * len(b.s_l) ** params.a
            * len(b.s_r) ** params.b
        )

    win = max(contribution(b) for b in winners)
    winner_keys = {b.key() for b in winners}
    others = [
        contribution(b) for b in maximal_bicliques(h) if b.key() not in winner_keys
    ]
    if not others:
        return None
    return Fraction(win, max(others))
