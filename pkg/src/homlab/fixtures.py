"""Bundled fixture graphs and their frozen expected values.

Every expected number here is either stated by the worked examples the
fixtures transcribe ("worked-example") or recomputed by an independent oracle
in the test suite ("oracle").  The verification suite re-derives each one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from .graphs import Graph, TwoColouredGraph, parse_bigraph, parse_graph


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str  # "graph" | "bigraph"
    text: str
    description: str
    expected: dict = field(default_factory=dict)


def _load(name: str) -> str:
    return (
        resources.files("homlab").joinpath("data", name).read_text(encoding="utf-8")
    )


def fixture_path(name: str) -> str:
    """Filesystem path of a bundled fixture file (for CLI invocations)."""
    return str(resources.files("homlab").joinpath("data", name))


def _fixture(name: str, kind: str, filename: str, description: str, expected=None):
    return Fixture(
        name=name,
        kind=kind,
        text=_load(filename),
        description=description,
        expected=expected or {},
    )


def load_fixtures() -> dict[str, Fixture]:
    fx = [
        _fixture(
            "case1",
            "bigraph",
            "case1.bigraph",
            "9+9 target whose single-edge decoration yields a strict non-extremal winner",
            expected={
                "edge_count": 27,
                "zeta_k11": {"ex1": 9, "ex2": 27, "b1": 16, "b2": 15},
                "gamma_k11": "1/2",
                "stage": "CaseI",
                "source": "worked-example",
            },
        ),
        _fixture(
            "case3",
            "bigraph",
            "case3.bigraph",
            "case1 plus edges (4,4),(5,5); extremal pair dominates every decoration seen",
            expected={
                "edge_count": 29,
                "zeta_k11": {"ex1": 9, "ex2": 29, "b1": 16, "b2": 15},
                "stage": "CaseIII",
                "source": "worked-example",
            },
        ),
        _fixture(
            "coexistence",
            "bigraph",
            "coexistence.bigraph",
            "4+4 target where extremal and non-extremal bicliques tie for every decoration",
            expected={
                "edge_count": 9,
                "dominating_eq": [
                    ((0,), (0, 1, 2, 3)),
                    ((0, 1), (0, 1)),
                    ((0, 2), (0, 2)),
                    ((0, 1, 2, 3), (0,)),
                ],
                "dominating_a_gt_b": [((0, 1, 2, 3), (0,))],
                "dominating_a_lt_b": [((0,), (0, 1, 2, 3))],
                "stage": "CaseII_Conjectured",
                "case2_exponent": "1/2",
                "source": "worked-example",
            },
        ),
        _fixture(
            "toy",
            "graph",
            "toy.graph",
            "4-regular hub-and-looped-rim graph with two edge-neighbourhood classes",
            expected={"hull_classes": 2, "lambda_size": 20, "source": "oracle"},
        ),
        _fixture(
            "h_is",
            "graph",
            "h_is.graph",
            "looped vertex plus pendant; counts independent sets",
            expected={"col_p3": 5, "source": "worked-example"},
        ),
        _fixture(
            "triangle",
            "graph",
            "triangle.graph",
            "K3; counts proper 3-colourings",
            expected={"col_edge": 6, "source": "oracle"},
        ),
        _fixture("p3_plain", "graph", "p3.graph", "plain path on 3 vertices"),
        _fixture(
            "p3",
            "bigraph",
            "p3.bigraph",
            "2-coloured path on 3 vertices, centre on L",
        ),
        _fixture(
            "p4",
            "bigraph",
            "p4.bigraph",
            "2-coloured path on 4 vertices; the smallest full non-trivial target",
            expected={"bis": 8, "stage": "BaseCaseP4", "source": "oracle"},
        ),
        _fixture("k11", "bigraph", "k11.bigraph", "a single 2-coloured edge"),
        _fixture("two_k11", "bigraph", "two_k11.bigraph", "two disjoint edges"),
    ]
    return {f.name: f for f in fx}


FIXTURES = load_fixtures()


def fixture_graph(name: str) -> Graph:
    f = FIXTURES[name]
    if f.kind != "graph":
        raise ValueError(f"fixture {name} is a {f.kind}")
    return parse_graph(f.text)


def fixture_bigraph(name: str) -> TwoColouredGraph:
    f = FIXTURES[name]
    if f.kind != "bigraph":
        raise ValueError(f"fixture {name} is a {f.kind}")
    return parse_bigraph(f.text)
