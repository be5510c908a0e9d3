"""Equivalence closure of a binary relation, via union-find."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass

from catcomp.errors import StructuralError


class UnionFind:
    """Disjoint sets whose root is always the least element of the set."""

    def __init__(self, elements: Iterable[int] = ()) -> None:
        self.parent: dict[int, int] = {x: x for x in elements}

    def find(self, x: int) -> int:
        if x not in self.parent:
            self.parent[x] = x
            return x
        if self.parent[x] != x:
            self.parent[x] = self.find(self.parent[x])
        return self.parent[x]

    def union(self, x: int, y: int) -> None:
        px, py = self.find(x), self.find(y)
        self.parent[px] = self.parent[py] = min(px, py)


@dataclass(frozen=True)
class Partition:
    """Blocks ordered by their least element."""

    carrier: frozenset[int]
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise StructuralError("partition has an empty block")
            if seen & block:
                raise StructuralError(f"partition blocks overlap on {sorted(seen & block)}")
            seen |= block
        if seen != self.carrier:
            raise StructuralError("partition blocks do not cover the carrier")

    def block_of(self, x: int) -> frozenset[int]:
        for block in self.blocks:
            if x in block:
                return block
        raise StructuralError(f"{x} is not in the carrier")

    def representative(self, x: int) -> int:
        return min(self.block_of(x))

    def minima(self) -> frozenset[int]:
        return frozenset(min(block) for block in self.blocks)


def equivalence_closure(carrier: Iterable[int], pairs: Iterable[tuple[int, int]]) -> Partition:
    carrier = frozenset(carrier)
    uf = UnionFind(carrier)
    for x, y in pairs:
        if x not in carrier or y not in carrier:
            raise StructuralError(f"pair ({x}, {y}) leaves the carrier")
        uf.union(x, y)
    grouped: dict[int, set[int]] = defaultdict(set)
    for x in carrier:
        grouped[uf.find(x)].add(x)
    return Partition(carrier, tuple(frozenset(grouped[root]) for root in sorted(grouped)))
