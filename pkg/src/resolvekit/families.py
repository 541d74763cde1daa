"""Deterministic generators for named graph families.

Also ships the 15-vertex unicyclic showcase graph together with its published
6-class resolving partition and 9-vertex resolving set. That graph is stated
with 1-based vertex names (triangle 1,2,3; leaves 4-7 on 1, 8-11 on 2,
12-15 on 3); every id here is the 1-based name minus one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, cartesian_product, from_edge_list
from .resolvability import OrderedPartition, VertexSequence

KINDS = ("complete", "path", "cycle", "star", "grid", "paper_unicyclic")


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its integer parameters."""

    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))


def complete(n: int) -> Graph:
    """K_n."""
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    """P_n with vertices in walk order 0-1-...-(n-1)."""
    if n < 1:
        raise ValueError("path graph needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """C_n with vertices in walk order."""
    if n < 3:
        raise ValueError("cycle graph needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with center 0 and leaves 1..leaves."""
    if leaves < 1:
        raise ValueError("star graph needs at least one leaf")
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def grid(r: int, t: int) -> Graph:
    """The r x t grid, built as the Cartesian product P_r x P_t."""
    if r < 1 or t < 1:
        raise ValueError("grid needs r, t >= 1")
    g, _ = cartesian_product(path(r), path(t))
    return g


def generate(spec: FamilySpec) -> Graph:
    """Build the graph a :class:`FamilySpec` describes."""
    builders = {
        "complete": lambda p: complete(*p),
        "path": lambda p: path(*p),
        "cycle": lambda p: cycle(*p),
        "star": lambda p: star(*p),
        "grid": lambda p: grid(*p),
        "paper_unicyclic": lambda p: paper_unicyclic_example()[0],
    }
    try:
        return builders[spec.kind](spec.params)
    except TypeError as exc:
        raise ValueError(f"bad parameters {spec.params} for {spec.kind}: {exc}") from exc


def paper_unicyclic_example() -> tuple[Graph, OrderedPartition, VertexSequence]:
    """The 15-vertex unicyclic showcase graph with its published witnesses.

    Returns (graph, resolving partition, resolving set), all 0-based. The
    partition has 6 classes and the set has 9 vertices; both are certified
    resolving by the verifiers (see the test suite).
    """
    edges = [(0, 1), (0, 2), (1, 2)]
    edges += [(0, leaf) for leaf in range(3, 7)]
    edges += [(1, leaf) for leaf in range(7, 11)]
    edges += [(2, leaf) for leaf in range(11, 15)]
    g = from_edge_list(15, edges)
    # 1-based classes {4,1,2,3},{8},{12},{5,9,13},{6,10,14},{7,11,15}
    pi = OrderedPartition(
        (
            (3, 0, 1, 2),
            (7,),
            (11,),
            (4, 8, 12),
            (5, 9, 13),
            (6, 10, 14),
        )
    )
    # 1-based set {4,5,6,8,9,10,12,13,14}
    s = VertexSequence((3, 4, 5, 7, 8, 9, 11, 12, 13))
    return g, pi, s
