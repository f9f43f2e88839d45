"""Separating gadgets: pair distinguishers and strict-maximum selectors.

Two non-isomorphic 2-coloured graphs always disagree on the colour-preserving
count of some test graph no larger than the bigger of the two; the search
enumerates canonical representatives in increasing size and returns the first
separator.  The selector powers this up: given pairwise non-isomorphic
targets it builds one test graph on which a single target strictly beats all
the others, by recursion on the number of targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .counting import count_fixcol, count_fixcol_naive
from .graphs import (
    TwoColouredGraph,
    canonical_form,
    component_graphs,
    disjoint_union,
    iso_colour_preserving,
    iter_canonical_two_coloured,
    strip_isolated_right,
)
from .structure import PreconditionError


class TargetsIsomorphic(ValueError):
    """The search exhausted its size bound; the targets must be isomorphic."""


@dataclass(frozen=True)
class DistinguisherResult:
    j: TwoColouredGraph
    counts: tuple[int, ...]
    winner: int

    def __post_init__(self):
        w = self.counts[self.winner]
        assert all(c < w for i, c in enumerate(self.counts) if i != self.winner)


def find_pair_distinguisher(
    h1: TwoColouredGraph,
    h2: TwoColouredGraph,
    *,
    strip_right_isolated: bool = False,
) -> DistinguisherResult:
    """Smallest canonical test graph on which h1 and h2 disagree.

    Enumerates canonical representatives by total size, then left-side size,
    then canonical form, up to max(|V(h1)|, |V(h2)|) vertices; existence
    within that bound is guaranteed for non-isomorphic targets.  With
    ``strip_right_isolated`` the witness has its isolated R vertices removed
    and the separation is re-verified on the stripped graph.
    """
    bound = max(h1.total, h2.total)
    for j in iter_canonical_two_coloured(bound):
        c1 = count_fixcol(h1, j)
        c2 = count_fixcol(h2, j)
        if c1 != c2:
            if strip_right_isolated:
                j2 = strip_isolated_right(j)
                d1, d2 = count_fixcol(h1, j2), count_fixcol(h2, j2)
                if d1 != d2:
                    j, c1, c2 = j2, d1, d2
                # else: keep the unstripped witness, separation comes first
            winner = 0 if c1 > c2 else 1
            return DistinguisherResult(j=j, counts=(c1, c2), winner=winner)
    raise TargetsIsomorphic(
        f"no separator up to {bound} vertices; the targets are colour-isomorphic"
    )


def build_selector(hs: list[TwoColouredGraph]) -> DistinguisherResult:
    """One test graph on which exactly one target is the strict maximum.

    Recursion on the number of targets: select among the tail, and if the
    head ties the tail's winner on that test graph, splice in enough copies
    of it next to a head-vs-winner distinguisher to preserve the head's lead
    over everyone else.  The result is re-counted against every target.
    """
    if not hs:
        raise PreconditionError("need at least one target")
    for a in range(len(hs)):
        for b in range(a + 1, len(hs)):
            if iso_colour_preserving(hs[a], hs[b]):
                raise PreconditionError(f"targets {a} and {b} are colour-isomorphic")
    j, winner = _selector_rec(list(range(len(hs))), hs)
    counts = tuple(count_fixcol(h, j) for h in hs)
    result = DistinguisherResult(j=j, counts=counts, winner=winner)
    return result


def _selector_rec(
    idx: list[int], hs: list[TwoColouredGraph]
) -> tuple[TwoColouredGraph, int]:
    """Returns (test graph, winning index into hs) for the targets idx."""
    if len(idx) == 1:
        return TwoColouredGraph(0, 0, []), idx[0]
    if len(idx) == 2:
        r = find_pair_distinguisher(hs[idx[0]], hs[idx[1]])
        return r.j, idx[r.winner]
    head, tail = idx[0], idx[1:]
    j2, w2 = _selector_rec(tail, hs)
    m_head = count_fixcol(hs[head], j2)
    m_win = count_fixcol(hs[w2], j2)
    if m_head != m_win:
        return j2, (head if m_head > m_win else w2)
    m = m_head
    r = find_pair_distinguisher(hs[head], hs[w2])
    first, second = (head, w2) if r.winner == 0 else (w2, head)
    jp = r.j
    win_count = count_fixcol(hs[first], jp)
    others = [i for i in tail if i != w2]
    c = max(
        (Fraction(count_fixcol(hs[i], jp), win_count) for i in others),
        default=Fraction(0),
    )
    t = ceil(c * m)
    j = disjoint_union([jp] + [j2] * t)
    return j, first


def recount_verify(result: DistinguisherResult, hs: list[TwoColouredGraph]) -> bool:
    """Re-derive all counts with the naive enumerator and check strictness.

    Selector witnesses can hold many copies of one component, so the naive
    route enumerates one representative per component class and multiplies;
    nothing from the optimized counter is reused.
    """
    groups: dict[bytes, tuple[TwoColouredGraph, int]] = {}
    for comp in component_graphs(result.j):
        key = canonical_form(comp)
        if key in groups:
            groups[key] = (groups[key][0], groups[key][1] + 1)
        else:
            groups[key] = (comp, 1)
    counts = tuple(
        _prod(count_fixcol_naive(h, comp) ** mult for comp, mult in groups.values())
        for h in hs
    )
    if counts != result.counts:
        return False
    w = counts[result.winner]
    return all(c < w for i, c in enumerate(counts) if i != result.winner)


def _prod(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out
