"""Graph types, parsing, constructions and canonical forms.

Two kinds of objects live here.  A ``Graph`` is a plain undirected graph on
vertices 0..n-1; self-loops are allowed, parallel edges are not.  A
``TwoColouredGraph`` is a bipartite graph whose (L, R) part labelling is part
of the object: vertex identity is (side, index) and all mappings between such
graphs are required to respect sides.

Everything is immutable and pure; adjacency is precomputed as integer
bitmasks at construction time.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence


class ParseError(ValueError):
    """Raised when a graph file does not conform to the text format."""


def _popcount_iter(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class Graph:
    """Undirected graph; vertices 0..n-1, self-loops allowed, no parallel edges."""

    __slots__ = ("n", "edges", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.add((min(u, v), max(u, v)))
        self.n = n
        self.edges = frozenset(norm)
        adj = [0] * n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj = tuple(adj)
        self._hash = hash((n, self.edges))

    def degree(self, u: int) -> int:
        # a self-loop contributes exactly 1 (it adds u to its own mask once)
        return bin(self.adj[u]).count("1")

    def neighbours(self, u: int) -> frozenset[int]:
        return frozenset(_popcount_iter(self.adj[u]))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def components(self) -> list[tuple[int, ...]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in _popcount_iter(self.adj[u]):
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def to_text(self) -> str:
        lines = [f"graph {self.n}"]
        lines += [f"{u} {v}" for u, v in sorted(self.edges)]
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


class TwoColouredGraph:
    """Bipartite graph with a fixed (L, R) part labelling.

    Edges are pairs (i, j) with i an L-index and j an R-index, so side-internal
    edges and self-loops are impossible by construction.
    """

    __slots__ = ("lsize", "rsize", "edges", "left_adj", "right_adj", "_hash")

    def __init__(self, lsize: int, rsize: int, edges: Iterable[tuple[int, int]]):
        if lsize < 0 or rsize < 0:
            raise ValueError("side sizes must be non-negative")
        norm = set()
        for i, j in edges:
            if not (0 <= i < lsize):
                raise ValueError(f"L index {i} out of range")
            if not (0 <= j < rsize):
                raise ValueError(f"R index {j} out of range")
            norm.add((i, j))
        self.lsize = lsize
        self.rsize = rsize
        self.edges = frozenset(norm)
        ladj = [0] * lsize
        radj = [0] * rsize
        for i, j in self.edges:
            ladj[i] |= 1 << j
            radj[j] |= 1 << i
        self.left_adj = tuple(ladj)
        self.right_adj = tuple(radj)
        self._hash = hash((lsize, rsize, self.edges))

    @property
    def total(self) -> int:
        return self.lsize + self.rsize

    def degree_left(self, i: int) -> int:
        return bin(self.left_adj[i]).count("1")

    def degree_right(self, j: int) -> int:
        return bin(self.right_adj[j]).count("1")

    def isolated_right(self) -> frozenset[int]:
        return frozenset(j for j in range(self.rsize) if not self.right_adj[j])

    def components(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Connected components as (L-indices, R-indices) pairs."""
        seenl = [False] * self.lsize
        seenr = [False] * self.rsize
        comps = []
        for side, s in [("L", i) for i in range(self.lsize)] + [
            ("R", j) for j in range(self.rsize)
        ]:
            if (side == "L" and seenl[s]) or (side == "R" and seenr[s]):
                continue
            stack = [(side, s)]
            if side == "L":
                seenl[s] = True
            else:
                seenr[s] = True
            cl, cr = [], []
            while stack:
                sd, u = stack.pop()
                if sd == "L":
                    cl.append(u)
                    for j in _popcount_iter(self.left_adj[u]):
                        if not seenr[j]:
                            seenr[j] = True
                            stack.append(("R", j))
                else:
                    cr.append(u)
                    for i in _popcount_iter(self.right_adj[u]):
                        if not seenl[i]:
                            seenl[i] = True
                            stack.append(("L", i))
            comps.append((tuple(sorted(cl)), tuple(sorted(cr))))
        return comps

    def as_graph(self) -> Graph:
        """Forget the colouring: L-indices keep their value, R-index j becomes lsize+j."""
        return Graph(
            self.lsize + self.rsize,
            [(i, self.lsize + j) for i, j in self.edges],
        )

    def to_text(self) -> str:
        lines = [f"bigraph {self.lsize} {self.rsize}"]
        lines += [f"{i} {j}" for i, j in sorted(self.edges)]
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        return (
            isinstance(other, TwoColouredGraph)
            and self.lsize == other.lsize
            and self.rsize == other.rsize
            and self.edges == other.edges
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return (
            f"TwoColouredGraph(lsize={self.lsize}, rsize={self.rsize}, "
            f"edges={sorted(self.edges)})"
        )


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def _data_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_graph(text: str | bytes) -> Graph:
    """Parse the ``graph <n>`` text format; errors carry the offending line number."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty input, expected 'graph <n>' header") from None
    parts = header.split()
    if len(parts) != 2 or parts[0] != "graph":
        raise ParseError(f"malformed header, line {lineno}")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"malformed header, line {lineno}") from None
    if n < 0:
        raise ParseError(f"malformed header, line {lineno}")
    edges = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"malformed edge, line {lineno}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"malformed edge, line {lineno}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range, line {lineno}")
        key = (min(u, v), max(u, v))
        if key in edges:
            raise ParseError(f"duplicate edge, line {lineno}")
        edges.add(key)
    return Graph(n, edges)


def parse_bigraph(text: str | bytes) -> TwoColouredGraph:
    """Parse the ``bigraph <lsize> <rsize>`` text format."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty input, expected 'bigraph <lsize> <rsize>' header") from None
    parts = header.split()
    if len(parts) != 3 or parts[0] != "bigraph":
        raise ParseError(f"malformed header, line {lineno}")
    try:
        lsize, rsize = int(parts[1]), int(parts[2])
    except ValueError:
        raise ParseError(f"malformed header, line {lineno}") from None
    if lsize < 0 or rsize < 0:
        raise ParseError(f"malformed header, line {lineno}")
    edges = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"malformed edge, line {lineno}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"malformed edge, line {lineno}") from None
        if not 0 <= i < lsize:
            raise ParseError(f"L index out of range, line {lineno}")
        if not 0 <= j < rsize:
            raise ParseError(f"R index out of range, line {lineno}")
        if (i, j) in edges:
            raise ParseError(f"duplicate edge, line {lineno}")
        edges.add((i, j))
    return TwoColouredGraph(lsize, rsize, edges)


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def bip_double_cover(h: Graph) -> TwoColouredGraph:
    """Bipartite double cover: L = R = V(h); (u, v) is a cover edge iff {u,v} in E(h).

    A non-loop edge {u,v} yields the two cover edges (u,v) and (v,u); a
    self-loop {u,u} yields the single edge (u,u).
    """
    edges = set()
    for u, v in h.edges:
        edges.add((u, v))
        edges.add((v, u))
    return TwoColouredGraph(h.n, h.n, edges)


def tensor(h1: TwoColouredGraph, h2: TwoColouredGraph) -> TwoColouredGraph:
    """Side-respecting tensor product: L = L1 x L2, R = R1 x R2.

    ((a,b),(c,d)) is an edge iff (a,c) in E(h1) and (b,d) in E(h2).  Pairs are
    indexed row-major: (a,b) -> a*|L2|+b.
    """
    edges = []
    for a, c in h1.edges:
        for b, d in h2.edges:
            edges.append((a * h2.lsize + b, c * h2.rsize + d))
    return TwoColouredGraph(h1.lsize * h2.lsize, h1.rsize * h2.rsize, edges)


def _check_partition(parts: Sequence[Iterable[int]], size: int, label: str) -> list[tuple[int, ...]]:
    norm = [tuple(sorted(p)) for p in parts]
    seen: set[int] = set()
    for p in norm:
        for v in p:
            if not 0 <= v < size:
                raise ValueError(f"{label} partition uses out-of-range index {v}")
            if v in seen:
                raise ValueError(f"{label} partition repeats index {v}")
            seen.add(v)
    if len(seen) != size:
        raise ValueError(f"{label} partition does not cover all indices")
    return norm


def quotient(
    g: TwoColouredGraph,
    theta_l: Sequence[Iterable[int]],
    theta_r: Sequence[Iterable[int]],
) -> TwoColouredGraph:
    """Contract every part of the two partitions; duplicate edges collapse."""
    pl = _check_partition(theta_l, g.lsize, "L")
    pr = _check_partition(theta_r, g.rsize, "R")
    lmap = {v: k for k, part in enumerate(pl) for v in part}
    rmap = {v: k for k, part in enumerate(pr) for v in part}
    edges = {(lmap[i], rmap[j]) for i, j in g.edges}
    return TwoColouredGraph(len(pl), len(pr), edges)


def disjoint_union(gs: Sequence[TwoColouredGraph]) -> TwoColouredGraph:
    """Side-wise concatenation with index shifting."""
    edges = []
    loff = roff = 0
    for g in gs:
        edges += [(i + loff, j + roff) for i, j in g.edges]
        loff += g.lsize
        roff += g.rsize
    return TwoColouredGraph(loff, roff, edges)


def induced_subgraph(
    h: TwoColouredGraph, lset: Iterable[int], rset: Iterable[int]
) -> TwoColouredGraph:
    """Induced 2-coloured subgraph; new indices follow the sorted old ones."""
    lsel = sorted(set(lset))
    rsel = sorted(set(rset))
    lmap = {v: k for k, v in enumerate(lsel)}
    rmap = {v: k for k, v in enumerate(rsel)}
    edges = [
        (lmap[i], rmap[j]) for i, j in h.edges if i in lmap and j in rmap
    ]
    return TwoColouredGraph(len(lsel), len(rsel), edges)


def strip_isolated_right(g: TwoColouredGraph) -> TwoColouredGraph:
    """Drop R vertices with no incident edge, keeping everything else."""
    keep = [j for j in range(g.rsize) if g.right_adj[j]]
    rmap = {v: k for k, v in enumerate(keep)}
    return TwoColouredGraph(g.lsize, len(keep), [(i, rmap[j]) for i, j in g.edges])


def component_graphs(g: TwoColouredGraph) -> list[TwoColouredGraph]:
    """Connected components as standalone 2-coloured graphs."""
    out = []
    for cl, cr in g.components():
        lmap = {v: k for k, v in enumerate(cl)}
        rmap = {v: k for k, v in enumerate(cr)}
        edges = [(lmap[i], rmap[j]) for i, j in g.edges if i in lmap]
        out.append(TwoColouredGraph(len(cl), len(cr), edges))
    return out


def two_colourings(g: Graph) -> list[TwoColouredGraph]:
    """The two proper 2-colourings of a connected bipartite graph.

    Always returns both side assignments, even when they produce equal
    objects (a lone edge looks the same either way round).  Raises if g is
    disconnected or not bipartite.  Within each side, vertices keep their
    relative order.
    """
    comps = g.components()
    if len(comps) != 1:
        raise ValueError("two_colourings needs a connected graph")
    colour = {0: 0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in _popcount_iter(g.adj[u]):
            if w == u:
                raise ValueError("graph has a self-loop, not bipartite")
            if w not in colour:
                colour[w] = 1 - colour[u]
                stack.append(w)
            elif colour[w] == colour[u]:
                raise ValueError("graph is not bipartite")
    out = []
    for flip in (0, 1):
        left = sorted(v for v in range(g.n) if colour[v] ^ flip == 0)
        right = sorted(v for v in range(g.n) if colour[v] ^ flip == 1)
        lmap = {v: k for k, v in enumerate(left)}
        rmap = {v: k for k, v in enumerate(right)}
        edges = []
        for u, v in g.edges:
            if u in lmap:
                edges.append((lmap[u], rmap[v]))
            else:
                edges.append((lmap[v], rmap[u]))
        out.append(TwoColouredGraph(len(left), len(right), edges))
    return out


# ---------------------------------------------------------------------------
# Canonical forms and colour-preserving isomorphism
# ---------------------------------------------------------------------------

def _refined_keys(g: TwoColouredGraph) -> tuple[list, list]:
    """Iterated degree refinement; returns hashable per-vertex keys per side."""
    lkey = [g.degree_left(i) for i in range(g.lsize)]
    rkey = [g.degree_right(j) for j in range(g.rsize)]
    for _ in range(g.lsize + g.rsize):
        nl = [
            (lkey[i], tuple(sorted(rkey[j] for j in _popcount_iter(g.left_adj[i]))))
            for i in range(g.lsize)
        ]
        nr = [
            (rkey[j], tuple(sorted(lkey[i] for i in _popcount_iter(g.right_adj[j]))))
            for j in range(g.rsize)
        ]
        # compress to ranks so keys stay small
        lranks = {k: r for r, k in enumerate(sorted(set(nl)))}
        rranks = {k: r for r, k in enumerate(sorted(set(nr)))}
        nl2 = [lranks[k] for k in nl]
        nr2 = [rranks[k] for k in nr]
        if nl2 == lkey and nr2 == rkey:
            break
        lkey, rkey = nl2, nr2
    return lkey, rkey


def _row_string(g: TwoColouredGraph, lorder: Sequence[int]) -> tuple:
    """Row-major bit matrix for the given row order, columns sorted lexicographically."""
    cols = []
    for j in range(g.rsize):
        mask = g.right_adj[j]
        cols.append(tuple((mask >> i) & 1 for i in lorder))
    cols.sort()
    return tuple(bit for row in range(g.lsize) for col in cols for bit in (col[row],))


def canonical_form(g: TwoColouredGraph) -> bytes:
    """Canonical byte string: equal iff a colour-preserving isomorphism exists.

    Minimizes the adjacency bit matrix over row orders that respect the degree
    refinement classes (columns are sorted per candidate row order), so the
    search space is the product of class factorials rather than lsize!.
    """
    lkey, _ = _refined_keys(g)
    classes: dict[int, list[int]] = {}
    for i in range(g.lsize):
        classes.setdefault(lkey[i], []).append(i)
    ordered_classes = [classes[k] for k in sorted(classes)]
    best: tuple | None = None
    for perm_parts in itertools.product(
        *(itertools.permutations(c) for c in ordered_classes)
    ):
        lorder = [v for part in perm_parts for v in part]
        s = _row_string(g, lorder)
        if best is None or s < best:
            best = s
    bits = best if best is not None else ()
    payload = bytearray()
    payload += g.lsize.to_bytes(2, "big")
    payload += g.rsize.to_bytes(2, "big")
    acc = 0
    nbits = 0
    for b in bits:
        acc = (acc << 1) | b
        nbits += 1
        if nbits == 8:
            payload.append(acc)
            acc, nbits = 0, 0
    if nbits:
        payload.append(acc << (8 - nbits))
    return bytes(payload)


def colour_iso(
    g1: TwoColouredGraph, g2: TwoColouredGraph
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Side-respecting isomorphism witness (sigma_l, sigma_r) or None.

    sigma_l[i] is the image in g2 of g1's L-vertex i, similarly sigma_r.
    """
    if g1.lsize != g2.lsize or g1.rsize != g2.rsize:
        return None
    if len(g1.edges) != len(g2.edges):
        return None
    k1l, _ = _refined_keys(g1)
    k2l, _ = _refined_keys(g2)
    if sorted(k1l) != sorted(k2l):
        return None
    # group g1's and g2's L vertices by refined key; try key-respecting bijections
    c1: dict[int, list[int]] = {}
    c2: dict[int, list[int]] = {}
    for i in range(g1.lsize):
        c1.setdefault(k1l[i], []).append(i)
    for i in range(g2.lsize):
        c2.setdefault(k2l[i], []).append(i)
    if {k: len(v) for k, v in c1.items()} != {k: len(v) for k, v in c2.items()}:
        return None
    keys = sorted(c1)
    for choice in itertools.product(*(itertools.permutations(c2[k]) for k in keys)):
        sigma_l = [0] * g1.lsize
        for k, images in zip(keys, choice):
            for src, dst in zip(c1[k], images):
                sigma_l[src] = dst
        # columns must now match as multisets; greedily pair equal columns
        def col(g, j, order):
            return tuple((g.right_adj[j] >> i) & 1 for i in order)

        want: dict[tuple, list[int]] = {}
        for j in range(g2.rsize):
            want.setdefault(col(g2, j, sigma_l), []).append(j)
        sigma_r = [None] * g1.rsize
        ok = True
        for j in range(g1.rsize):
            key = tuple((g1.right_adj[j] >> i) & 1 for i in range(g1.lsize))
            bucket = want.get(key)
            if not bucket:
                ok = False
                break
            sigma_r[j] = bucket.pop()
        if ok:
            return tuple(sigma_l), tuple(sigma_r)
    return None


def iso_colour_preserving(g1: TwoColouredGraph, g2: TwoColouredGraph) -> bool:
    return colour_iso(g1, g2) is not None


# ---------------------------------------------------------------------------
# Enumeration of canonical representatives
# ---------------------------------------------------------------------------

_ENUM_EDGE_CELL_LIMIT = 25  # refuse 2^(l*r) enumeration beyond this


def _labelled_bigraphs(lsize: int, rsize: int) -> Iterator[TwoColouredGraph]:
    cells = [(i, j) for i in range(lsize) for j in range(rsize)]
    if len(cells) > _ENUM_EDGE_CELL_LIMIT:
        raise ValueError(
            f"refusing to enumerate 2^{len(cells)} labelled graphs for split "
            f"({lsize},{rsize})"
        )
    for mask in range(1 << len(cells)):
        edges = [cells[k] for k in range(len(cells)) if (mask >> k) & 1]
        yield TwoColouredGraph(lsize, rsize, edges)


def iter_canonical_two_coloured(
    max_total: int,
    *,
    max_per_side: int | None = None,
    skip_isolated_right: bool = False,
) -> Iterator[TwoColouredGraph]:
    """Canonical representatives of 2-coloured graphs, smallest first.

    Ordered by total vertex count, then lsize, then canonical form; one
    representative per colour-preserving isomorphism class.  With
    ``skip_isolated_right`` classes containing an isolated R vertex are left
    out.  Lazy across (total, lsize) shapes, so early consumers never touch
    the large shapes.
    """
    for n in range(max_total + 1):
        for lsize in range(n + 1):
            rsize = n - lsize
            if max_per_side is not None and (
                lsize > max_per_side or rsize > max_per_side
            ):
                continue
            reps: dict[bytes, TwoColouredGraph] = {}
            for g in _labelled_bigraphs(lsize, rsize):
                if skip_isolated_right and g.isolated_right():
                    continue
                key = canonical_form(g)
                if key not in reps:
                    reps[key] = g
            for key in sorted(reps):
                yield reps[key]


def canonical_two_coloured(
    max_total: int,
    *,
    max_per_side: int | None = None,
    skip_isolated_right: bool = False,
) -> list[TwoColouredGraph]:
    """Eager form of :func:`iter_canonical_two_coloured`."""
    return list(
        iter_canonical_two_coloured(
            max_total,
            max_per_side=max_per_side,
            skip_isolated_right=skip_isolated_right,
        )
    )


def canonical_side_bounded(
    max_per_side: int, *, skip_isolated_right: bool = False
) -> list[TwoColouredGraph]:
    """Canonical representatives with both sides bounded by ``max_per_side``."""
    return canonical_two_coloured(
        2 * max_per_side,
        max_per_side=max_per_side,
        skip_isolated_right=skip_isolated_right,
    )
