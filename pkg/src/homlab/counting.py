"""Exact homomorphism counters.

All counts are exact Python integers.  The production counters factor the
instance into connected components and run a backtracking search over a DFS
vertex order with bitmask feasibility pruning; the ``*_naive`` variants
enumerate every vertex map and exist as an independent second route for the
same numbers.
"""

from __future__ import annotations

import itertools
import math
import os
from typing import Iterator

from .graphs import Graph, TwoColouredGraph, quotient, _popcount_iter

DEFAULT_WORK_BUDGET = 10**9
WORK_BUDGET_ENV = "HOMLAB_MAX_WORK"


class WorkBudgetExceeded(RuntimeError):
    """An enumeration would exceed the configured branch-node budget."""


def work_budget() -> int:
    raw = os.environ.get(WORK_BUDGET_ENV)
    if raw is None:
        return DEFAULT_WORK_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{WORK_BUDGET_ENV} must be an integer, got {raw!r}") from None


def _check_estimate(estimate: int, what: str) -> None:
    budget = work_budget()
    if estimate > budget:
        raise WorkBudgetExceeded(
            f"{what} needs ~{estimate} branch nodes, budget is {budget} "
            f"(override with {WORK_BUDGET_ENV})"
        )


# ---------------------------------------------------------------------------
# Colour-preserving counting
# ---------------------------------------------------------------------------

def _component_order(
    g: TwoColouredGraph, comp: tuple[tuple[int, ...], tuple[int, ...]]
) -> list[tuple[str, int]]:
    """DFS order of one component so every later vertex has an earlier neighbour."""
    cl, cr = comp
    start = ("L", cl[0]) if cl else ("R", cr[0])
    seen = {start}
    order = [start]
    stack = [start]
    while stack:
        side, u = stack.pop()
        if side == "L":
            nbrs = [("R", j) for j in _popcount_iter(g.left_adj[u])]
        else:
            nbrs = [("L", i) for i in _popcount_iter(g.right_adj[u])]
        for v in nbrs:
            if v not in seen:
                seen.add(v)
                order.append(v)
                stack.append(v)
    return order


def _count_component(
    h: TwoColouredGraph,
    g: TwoColouredGraph,
    comp: tuple[tuple[int, ...], tuple[int, ...]],
) -> int:
    order = _component_order(g, comp)
    full_l = (1 << h.lsize) - 1
    full_r = (1 << h.rsize) - 1
    # position of each g-vertex in the order, for neighbour lookups
    pos = {v: k for k, v in enumerate(order)}
    # earlier-placed neighbours of each vertex
    earlier: list[list[int]] = []
    for k, (side, u) in enumerate(order):
        if side == "L":
            nbrs = [("R", j) for j in _popcount_iter(g.left_adj[u])]
        else:
            nbrs = [("L", i) for i in _popcount_iter(g.right_adj[u])]
        earlier.append([pos[v] for v in nbrs if pos[v] < k])

    sides = [side for side, _ in order]
    assign = [0] * len(order)

    def rec(k: int) -> int:
        if k == len(order):
            return 1
        side = sides[k]
        cand = full_l if side == "L" else full_r
        adj = h.right_adj if side == "L" else h.left_adj
        for e in earlier[k]:
            cand &= adj[assign[e]]
        subtotal = 0
        m = cand
        while m:
            low = m & -m
            c = low.bit_length() - 1
            m ^= low
            assign[k] = c
            subtotal += rec(k + 1)
        return subtotal

    return rec(0)


def count_fixcol(h: TwoColouredGraph, g: TwoColouredGraph) -> int:
    """Number of colour-preserving homomorphisms from g to h."""
    result = 1
    for comp in g.components():
        result *= _count_component(h, g, comp)
        if result == 0:
            return 0
    return result


def count_inj_fixcol(h: TwoColouredGraph, g: TwoColouredGraph) -> int:
    """Number of injective colour-preserving homomorphisms from g to h.

    Injectivity couples components, so this runs one global search instead of
    multiplying per-component counts.
    """
    if g.lsize > h.lsize or g.rsize > h.rsize:
        return 0
    order: list[tuple[str, int]] = []
    for comp in g.components():
        order += _component_order(g, comp)
    pos = {v: k for k, v in enumerate(order)}
    earlier = []
    for k, (side, u) in enumerate(order):
        if side == "L":
            nbrs = [("R", j) for j in _popcount_iter(g.left_adj[u])]
        else:
            nbrs = [("L", i) for i in _popcount_iter(g.right_adj[u])]
        earlier.append([pos[v] for v in nbrs if pos[v] < k])
    sides = [side for side, _ in order]
    full_l = (1 << h.lsize) - 1
    full_r = (1 << h.rsize) - 1
    assign = [0] * len(order)

    def rec(k: int, used_l: int, used_r: int) -> int:
        if k == len(order):
            return 1
        side = sides[k]
        cand = full_l if side == "L" else full_r
        adj = h.right_adj if side == "L" else h.left_adj
        for e in earlier[k]:
            cand &= adj[assign[e]]
        cand &= ~(used_l if side == "L" else used_r)
        subtotal = 0
        m = cand
        while m:
            low = m & -m
            c = low.bit_length() - 1
            m ^= low
            assign[k] = c
            if side == "L":
                subtotal += rec(k + 1, used_l | low, used_r)
            else:
                subtotal += rec(k + 1, used_l, used_r | low)
        return subtotal

    return rec(0, 0, 0)


def count_fixcol_naive(h: TwoColouredGraph, g: TwoColouredGraph) -> int:
    """Full enumeration over every vertex map; the oracle route."""
    _check_estimate(
        max(h.lsize, 1) ** g.lsize * max(h.rsize, 1) ** g.rsize,
        "naive colour-preserving count",
    )
    if (g.lsize and not h.lsize) or (g.rsize and not h.rsize):
        return 0
    total = 0
    for lmap in itertools.product(range(h.lsize), repeat=g.lsize):
        for rmap in itertools.product(range(h.rsize), repeat=g.rsize):
            if all((h.left_adj[lmap[i]] >> rmap[j]) & 1 for i, j in g.edges):
                total += 1
    return total


# ---------------------------------------------------------------------------
# Plain homomorphism counting
# ---------------------------------------------------------------------------

def count_col(h: Graph, g: Graph) -> int:
    """Number of homomorphisms from g to h (loops in h are legal targets)."""
    result = 1
    for comp in g.components():
        result *= _count_col_component(h, g, comp)
        if result == 0:
            return 0
    return result


def _count_col_component(h: Graph, g: Graph, comp: tuple[int, ...]) -> int:
    start = comp[0]
    order = [start]
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in _popcount_iter(g.adj[u]):
            if w not in seen:
                seen.add(w)
                order.append(w)
                stack.append(w)
    pos = {v: k for k, v in enumerate(order)}
    earlier = []
    self_loop = []
    for k, u in enumerate(order):
        earlier.append(
            [pos[w] for w in _popcount_iter(g.adj[u]) if w != u and pos[w] < k]
        )
        self_loop.append(g.has_edge(u, u))
    full = (1 << h.n) - 1
    loop_mask = 0
    for u in range(h.n):
        if h.has_edge(u, u):
            loop_mask |= 1 << u
    assign = [0] * len(order)

    def rec(k: int) -> int:
        if k == len(order):
            return 1
        cand = full
        if self_loop[k]:
            cand &= loop_mask
        for e in earlier[k]:
            cand &= h.adj[assign[e]]
        subtotal = 0
        m = cand
        while m:
            low = m & -m
            c = low.bit_length() - 1
            m ^= low
            assign[k] = c
            subtotal += rec(k + 1)
        return subtotal

    return rec(0)


def count_col_naive(h: Graph, g: Graph) -> int:
    """Full enumeration over every vertex map; the oracle route."""
    _check_estimate(max(h.n, 1) ** g.n, "naive homomorphism count")
    if g.n and not h.n:
        return 0
    total = 0
    for vmap in itertools.product(range(h.n), repeat=g.n):
        if all(h.has_edge(vmap[u], vmap[v]) for u, v in g.edges):
            total += 1
    return total


# ---------------------------------------------------------------------------
# Independent sets of a 2-coloured graph
# ---------------------------------------------------------------------------

def h_independent_set_target() -> Graph:
    """The 2-vertex target whose homomorphism counts are independent-set counts.

    Vertex 0 carries a self-loop ("outside the set") and is adjacent to the
    loopless vertex 1 ("inside the set").
    """
    return Graph(2, [(0, 0), (0, 1)])


def count_bis(g: TwoColouredGraph) -> int:
    """Number of independent sets of g, the empty set included.

    Computed through the homomorphism counter with the looped-plus-pendant
    2-vertex target; mapping a vertex to the loopless target vertex puts it in
    the set.
    """
    return count_col(h_independent_set_target(), g.as_graph())


def count_bis_naive(g: TwoColouredGraph) -> int:
    """Direct subset enumeration, used to cross-check the identity route."""
    n = g.lsize + g.rsize
    _check_estimate(2 ** n, "naive independent-set count")
    plain = g.as_graph()
    total = 0
    for mask in range(1 << n):
        ok = True
        for u, v in plain.edges:
            if (mask >> u) & 1 and (mask >> v) & 1:
                ok = False
                break
        if ok:
            total += 1
    return total


# ---------------------------------------------------------------------------
# Surjections
# ---------------------------------------------------------------------------

def surjection_count(n: int, k: int) -> int:
    """Number of surjections from an n-set onto a k-set, by inclusion-exclusion."""
    if n < 0 or k < 0:
        raise ValueError("arguments must be non-negative")
    return sum(
        (-1) ** j * math.comb(k, j) * (k - j) ** n for j in range(k + 1)
    )


# ---------------------------------------------------------------------------
# Set partitions and the contraction identity
# ---------------------------------------------------------------------------

def set_partitions(n: int) -> Iterator[list[list[int]]]:
    """All set partitions of range(n), generated from restricted growth strings."""
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def rec(i: int, maxval: int):
        if i == n:
            parts: list[list[int]] = [[] for _ in range(maxval + 1)]
            for v, block in enumerate(rgs):
                parts[block].append(v)
            yield [list(p) for p in parts]
            return
        for b in range(maxval + 2):
            rgs[i] = b
            yield from rec(i + 1, max(maxval, b))

    yield from rec(1, 0)


PARTITION_SIDE_GUARD = 5  # Bell(5) = 52 per side


def partition_sum_check(
    h: TwoColouredGraph, j: TwoColouredGraph
) -> tuple[int, int]:
    """Both sides of the contraction identity.

    Left: the colour-preserving count of j into h.  Right: the sum, over all
    partitions of L(j) and R(j), of the injective counts of the contracted
    graphs.  The two always agree; callers assert it.
    """
    if j.lsize > PARTITION_SIDE_GUARD or j.rsize > PARTITION_SIDE_GUARD:
        raise ValueError(
            f"partition enumeration limited to {PARTITION_SIDE_GUARD} vertices per side"
        )
    lhs = count_fixcol(h, j)
    rhs = 0
    for theta_l in set_partitions(j.lsize):
        for theta_r in set_partitions(j.rsize):
            contracted = quotient(j, theta_l, theta_r)
            rhs += count_inj_fixcol(h, contracted)
    return lhs, rhs
