"""Orbit counting for finite group actions.

One pass over (group element, set element) pairs feeds both a union-find
partition and a Burnside fixed-point sum; the two orbit counts must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Sequence, TypeVar

from .errors import ConsistencyError

T = TypeVar("T", bound=Hashable)


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry
            self.count -= 1


@dataclass(frozen=True)
class OrbitSummary:
    count: int
    sizes: tuple[int, ...]  # per orbit, in order of first appearance


def orbit_summary(elements: Sequence[T], actions: Sequence[Callable[[T], T]]) -> OrbitSummary:
    """Partition elements under a fully materialized group of actions.

    The Burnside count (average number of fixed points) is computed in the
    same pass and checked against the partition count; a mismatch or a
    fixed-point sum not divisible by the group order means the actions do
    not form a group on this set and raises ConsistencyError.
    """
    elems = list(elements)
    index = {e: i for i, e in enumerate(elems)}
    if len(index) != len(elems):
        raise ValueError("duplicate elements")
    if not actions:
        raise ValueError("empty group")
    uf = UnionFind(len(elems))
    fixed = 0
    for act in actions:
        for i, e in enumerate(elems):
            j = index.get(act(e))
            if j is None:
                raise ConsistencyError("action does not map the set to itself")
            if i == j:
                fixed += 1
            else:
                uf.union(i, j)
    if fixed % len(actions):
        raise ConsistencyError(
            f"fixed-point sum {fixed} not divisible by group order {len(actions)}")
    burnside = fixed // len(actions)
    if burnside != uf.count:
        raise ConsistencyError(
            f"Burnside count {burnside} != partition count {uf.count}")
    sizes: dict[int, int] = {}
    order: list[int] = []
    for i in range(len(elems)):
        r = uf.find(i)
        if r not in sizes:
            sizes[r] = 0
            order.append(r)
        sizes[r] += 1
    return OrbitSummary(count=uf.count, sizes=tuple(sizes[r] for r in order))


def orbits(elements: Sequence[T], actions: Sequence[Callable[[T], T]]) -> list[list[T]]:
    """Explicit orbits, each listed in first-appearance order."""
    elems = list(elements)
    index = {e: i for i, e in enumerate(elems)}
    uf = UnionFind(len(elems))
    for act in actions:
        for i, e in enumerate(elems):
            j = index.get(act(e))
            if j is None:
                raise ConsistencyError("action does not map the set to itself")
            uf.union(i, j)
    by_root: dict[int, list[T]] = {}
    roots: list[int] = []
    for i, e in enumerate(elems):
        r = uf.find(i)
        if r not in by_root:
            by_root[r] = []
            roots.append(r)
        by_root[r].append(e)
    return [by_root[r] for r in roots]
