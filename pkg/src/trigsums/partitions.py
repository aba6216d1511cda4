"""Integer partitions in multiplicity-vector form."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

__all__ = [
    "PartitionMultiplicities",
    "enumerate_partitions",
    "multinomial_factor",
    "partition_count",
    "format_partition_table",
]


@dataclass(frozen=True)
class PartitionMultiplicities:
    """A partition of ``k`` stored as ``{part size: count}``.

    Only parts that occur are stored, so ``multiplicities.get(i, 0)`` is n_i.
    """

    k: int
    multiplicities: tuple[tuple[int, int], ...]

    @classmethod
    def from_parts(cls, parts: Mapping[int, int]) -> PartitionMultiplicities:
        items = tuple(sorted((i, n) for i, n in parts.items() if n))
        k = sum(i * n for i, n in items)
        return cls(k, items)

    def n(self, i: int) -> int:
        for size, count in self.multiplicities:
            if size == i:
                return count
        return 0

    @property
    def num_parts(self) -> int:
        return sum(count for _, count in self.multiplicities)

    def parts(self) -> tuple[int, ...]:
        """Parts in non-increasing order, e.g. (2, 1, 1, 1)."""
        out: list[int] = []
        for size, count in sorted(self.multiplicities, reverse=True):
            out.extend([size] * count)
        return tuple(out)

    def vector(self) -> list[int]:
        return [self.n(i) for i in range(1, self.k + 1)]

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.parts()) + "}"


def _descending(k: int, largest: int) -> Iterator[list[int]]:
    if k == 0:
        yield []
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _descending(k - first, first):
            yield [first] + rest


def enumerate_partitions(k: int) -> Iterator[PartitionMultiplicities]:
    """Yield every partition of k once, in reverse lexicographic order of parts.

    For k = 5 this is {5}, {4,1}, {3,2}, {3,1,1}, {2,2,1}, {2,1,1,1}, {1,1,1,1,1}.
    k = 0 yields the single empty partition.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    for parts in _descending(k, k):
        counts: dict[int, int] = {}
        for p in parts:
            counts[p] = counts.get(p, 0) + 1
        yield PartitionMultiplicities.from_parts(counts)


def multinomial_factor(p: PartitionMultiplicities) -> int:
    """N! / prod n_i! with N the total number of parts."""
    out = math.factorial(p.num_parts)
    for _, count in p.multiplicities:
        out //= math.factorial(count)
    return out


@lru_cache(maxsize=None)
def partition_count(k: int) -> int:
    """p(k) via Euler's pentagonal-number recurrence."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    total = 0
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        if g1 > k:
            break
        sign = 1 if j % 2 else -1
        total += sign * partition_count(k - g1)
        g2 = j * (3 * j + 1) // 2
        if g2 <= k:
            total += sign * partition_count(k - g2)
        j += 1
    return total


def format_partition_table(k: int) -> str:
    """Plain-text layout: one row per partition, columns n_1 .. n_k."""
    rows = [["Partition"] + [f"n_{i}" for i in range(1, k + 1)]]
    for p in enumerate_partitions(k):
        rows.append([str(p)] + [str(c) if c else "" for c in p.vector()])
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows
    )
