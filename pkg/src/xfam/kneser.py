"""Bipartite disjointness graphs between two families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .setfamily import Family

__all__ = ["BipartiteDisjointness", "build", "is_regular", "neighborhood", "neighborhood_ratio"]


@dataclass(frozen=True)
class BipartiteDisjointness:
    left: Family
    right: Family
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def left_degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def right_degrees(self) -> list[int]:
        deg = [0] * len(self.right)
        for row in self.adjacency:
            for j in row:
                deg[j] += 1
        return deg

    @property
    def edge_count(self) -> int:
        return sum(self.left_degrees)


def build(F: Family, G: Family) -> BipartiteDisjointness:
    """Edge ``(i, j)`` iff ``F[i]`` and ``G[j]`` are disjoint."""
    if F.n != G.n:
        raise ValueError(f"ground sets differ: {F.n} vs {G.n}")
    gs = G.members
    adj = tuple(tuple(j for j, g in enumerate(gs) if not f & g) for f in F.members)
    return BipartiteDisjointness(F, G, adj)


def is_regular(g: BipartiteDisjointness) -> bool:
    """Constant degree inside each part; an empty part counts as regular."""
    return len(set(g.left_degrees)) <= 1 and len(set(g.right_degrees)) <= 1


def neighborhood(g: BipartiteDisjointness, S: Iterable[int]) -> frozenset[int]:
    """Right-hand indices adjacent to some left index in ``S``."""
    out: set[int] = set()
    for i in S:
        out.update(g.adjacency[i])
    return frozenset(out)


def neighborhood_ratio(g: BipartiteDisjointness, S: Iterable[int]) -> Fraction:
    S = list(S)
    if not S:
        raise ValueError("neighborhood ratio of an empty set")
    return Fraction(len(neighborhood(g, S)), len(set(S)))
