"""Perfect matchings on {0..m-1} and their canonical enumeration order."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ValidationError
from .game import Edge, GameInstance

__all__ = [
    "PerfectMatching",
    "enumerate_matchings",
    "contains_edge",
    "validate_matching",
    "matching_count",
]


@dataclass(frozen=True, slots=True)
class PerfectMatching:
    """Partition of {0..m-1} into m/2 unordered pairs.

    Edges are stored sorted by smaller endpoint, which is also the textual
    order: ``"0-1,2-3"``.
    """

    edges: tuple[Edge, ...]

    def __post_init__(self):
        edges = tuple(sorted(self.edges, key=lambda e: (e.i, e.j)))
        object.__setattr__(self, "edges", edges)
        if not edges:
            raise ValidationError("a matching needs at least one edge")
        seen: set[int] = set()
        for e in edges:
            if e.i in seen or e.j in seen:
                raise ValidationError(f"vertex reused across edges near {e}")
            seen.add(e.i)
            seen.add(e.j)
        m = 2 * len(edges)
        if seen != set(range(m)):
            missing = sorted(set(range(m)) - seen)
            extra = sorted(seen - set(range(m)))
            raise ValidationError(
                f"matching must cover 0..{m - 1} exactly"
                f" (missing {missing}, out of range {extra})"
            )

    @classmethod
    def parse(cls, text: str) -> "PerfectMatching":
        return cls(tuple(Edge.parse(part) for part in text.split(",")))

    @property
    def m(self) -> int:
        return 2 * len(self.edges)

    def __contains__(self, edge: Edge) -> bool:
        return edge in self.edges

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.edges)


def enumerate_matchings(inst: GameInstance) -> list[PerfectMatching]:
    """All perfect matchings on {0..m-1} in canonical order.

    Canonical order pairs the lowest unmatched index with each larger
    unmatched partner in increasing order, recursively; the edge sequences
    come out lexicographically sorted.  The list has (m-1)!! entries.
    """
    out: list[PerfectMatching] = []
    acc: list[Edge] = []

    def extend(unmatched: tuple[int, ...]) -> None:
        if not unmatched:
            out.append(PerfectMatching(tuple(acc)))
            return
        lo, rest = unmatched[0], unmatched[1:]
        for k, partner in enumerate(rest):
            acc.append(Edge(lo, partner))
            extend(rest[:k] + rest[k + 1 :])
            acc.pop()

    extend(tuple(range(inst.m)))
    return out


def contains_edge(y: PerfectMatching, edge: Edge | tuple[int, int]) -> bool:
    """Membership test, accepting the pair in either order."""
    if not isinstance(edge, Edge):
        i, j = edge
        if i == j:
            return False
        edge = Edge(i, j)
    return edge in y


def validate_matching(
    edges: Iterable[Edge | tuple[int, int]], inst: GameInstance
) -> PerfectMatching:
    """Checked construction against a specific instance.

    Self-pairs, out-of-range vertices, overlaps, and unmatched vertices are
    each reported with their own message.
    """
    normalized: list[Edge] = []
    for e in edges:
        if not isinstance(e, Edge):
            i, j = e
            if i == j:
                raise ValidationError(f"self-pair {i}-{j} is not allowed")
            e = Edge(i, j)
        normalized.append(e)
    for e in normalized:
        if e.j >= inst.m:
            raise ValidationError(f"vertex {e.j} out of range for m={inst.m}")
    owner: dict[int, Edge] = {}
    for e in normalized:
        for v in e:
            if v in owner:
                raise ValidationError(
                    f"vertex {v} appears in both {owner[v]} and {e}"
                )
            owner[v] = e
    missing = [v for v in range(inst.m) if v not in owner]
    if missing:
        raise ValidationError(f"matching leaves vertices unmatched: {missing}")
    return PerfectMatching(tuple(normalized))


def matching_count(m: int) -> int:
    """(m-1)!!, the number of perfect matchings on m points, without enumerating."""
    count = 1
    for k in range(m - 1, 0, -2):
        count *= k
    return count
