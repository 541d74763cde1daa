"""Metric and partition representations, and the resolving-object verifiers.

A vertex sequence S resolves a graph when the distance vectors r(v|S) are
pairwise distinct; an ordered partition resolves it when the vectors of
distances to the classes are pairwise distinct. Verifiers return a
:class:`Certificate` carrying either the verdict "resolving" or the
lexicographically first colliding vertex pair as a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import DistanceMatrix

Representation = tuple[int, ...]


@dataclass(frozen=True)
class VertexSequence:
    """Ordered sequence of distinct vertex ids."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        verts = tuple(int(v) for v in self.vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("vertex sequence contains duplicates")
        if any(v < 0 for v in verts):
            raise ValueError("vertex ids must be nonnegative")
        object.__setattr__(self, "vertices", verts)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def validate_for(self, n: int) -> None:
        for v in self.vertices:
            if v >= n:
                raise ValueError(f"vertex {v} out of range for an {n}-vertex graph")


@dataclass(frozen=True)
class OrderedPartition:
    """Ordered list of disjoint nonempty vertex classes.

    Class members are stored sorted; the class order is significant because
    representations are read off in it.
    """

    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        norm = []
        seen: set[int] = set()
        for cls in self.classes:
            members = tuple(sorted(int(v) for v in cls))
            if not members:
                raise ValueError("partition classes must be nonempty")
            if any(v < 0 for v in members):
                raise ValueError("vertex ids must be nonnegative")
            if seen & set(members):
                raise ValueError("partition classes must be disjoint")
            if len(set(members)) != len(members):
                raise ValueError("class contains duplicate vertices")
            seen |= set(members)
            norm.append(members)
        object.__setattr__(self, "classes", tuple(norm))

    @property
    def t(self) -> int:
        return len(self.classes)

    def validate_for(self, n: int) -> None:
        union = {v for cls in self.classes for v in cls}
        if union != set(range(n)):
            raise ValueError(f"classes do not partition 0..{n - 1}")

    def assignment_vector(self, n: int) -> list[int]:
        """Class index of every vertex; requires the partition to cover 0..n-1."""
        self.validate_for(n)
        out = [-1] * n
        for i, cls in enumerate(self.classes):
            for v in cls:
                out[v] = i
        return out

    @staticmethod
    def from_assignment(assign: Sequence[int]) -> "OrderedPartition":
        t = max(assign) + 1
        classes: list[list[int]] = [[] for _ in range(t)]
        for v, c in enumerate(assign):
            classes[c].append(v)
        return OrderedPartition(tuple(tuple(c) for c in classes))


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable verdict for a candidate resolving set or partition.

    ``witness`` is present exactly when the verdict is "not-resolving" and
    names the lexicographically first vertex pair with equal representations.
    """

    verdict: str
    witness: tuple[int, int] | None
    kind: str
    obj: tuple
    graph_sha: str

    @property
    def resolving(self) -> bool:
        return self.verdict == "resolving"

    def to_dict(self) -> dict:
        def unfold(x):
            return [unfold(y) for y in x] if isinstance(x, tuple) else x

        return {
            "verdict": self.verdict,
            "witness": list(self.witness) if self.witness is not None else None,
            "kind": self.kind,
            "object": unfold(self.obj),
            "graph_sha": self.graph_sha,
        }


def distance_to_set(dm: DistanceMatrix, v: int, members: Iterable[int]) -> int:
    """min over x in members of d(v, x); rejects the empty set."""
    members = tuple(members)
    if not members:
        raise ValueError("distance to the empty set is undefined")
    return min(int(dm.d[v, x]) for x in members)


def metric_representation(dm: DistanceMatrix, v: int, s: VertexSequence) -> Representation:
    """r(v|S): distances from v to the sequence members, order preserved."""
    return tuple(int(dm.d[v, x]) for x in s.vertices)


def partition_representation(dm: DistanceMatrix, v: int, pi: OrderedPartition) -> Representation:
    """r(v|Pi): distances from v to each class; zero at v's own class."""
    return tuple(distance_to_set(dm, v, cls) for cls in pi.classes)


def _first_collision(reps: list[Representation]) -> tuple[int, int] | None:
    """Lexicographically first (u, v), u < v, with reps[u] == reps[v]."""
    first_two: dict[Representation, list[int]] = {}
    for v, rep in enumerate(reps):
        bucket = first_two.setdefault(rep, [])
        if len(bucket) < 2:
            bucket.append(v)
    best: tuple[int, int] | None = None
    for bucket in first_two.values():
        if len(bucket) == 2:
            pair = (bucket[0], bucket[1])
            if best is None or pair < best:
                best = pair
    return best


def is_resolving_set(dm: DistanceMatrix, s: VertexSequence) -> Certificate:
    """Certificate stating whether S resolves the graph behind ``dm``.

    The empty sequence resolves only K_1 (the length-0 vectors of two or
    more vertices always collide).
    """
    s.validate_for(dm.n)
    reps = [metric_representation(dm, v, s) for v in range(dm.n)]
    witness = _first_collision(reps)
    return Certificate(
        verdict="resolving" if witness is None else "not-resolving",
        witness=witness,
        kind="set",
        obj=s.vertices,
        graph_sha=dm.graph_sha,
    )


def is_resolving_partition(dm: DistanceMatrix, pi: OrderedPartition) -> Certificate:
    """Certificate stating whether the ordered partition resolves the graph."""
    pi.validate_for(dm.n)
    reps = [partition_representation(dm, v, pi) for v in range(dm.n)]
    witness = _first_collision(reps)
    return Certificate(
        verdict="resolving" if witness is None else "not-resolving",
        witness=witness,
        kind="partition",
        obj=pi.classes,
        graph_sha=dm.graph_sha,
    )
