"""Integer partitions with restricted parts, counted and enumerated exactly.

Three part classes matter here: unrestricted parts, prime parts, and odd
prime parts (2 excluded).  Counts use the standard one-part-at-a-time
dynamic program and live in Python ints, so nothing overflows.  On top of
the per-sum functions sits the cumulative family: all odd-prime partitions
with sum at most n, which is what the witness construction consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np


class PartClass(Enum):
    """Which integers are allowed as parts."""

    ALL = "all"
    PRIME = "prime"
    ODD_PRIME = "oddprime"


@dataclass(frozen=True)
class Partition:
    """Weakly increasing parts; the empty tuple is the partition of 0."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p < 1 for p in self.parts):
            raise ValueError("parts must be >= 1")
        if any(a > b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly increasing")

    @cached_property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts)


def primes_up_to(n: int) -> list[int]:
    """All primes <= n, ascending (sieve of Eratosthenes)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < 2:
        return []
    flags = np.ones(n + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).tolist()


def allowed_parts(n: int, part_class: PartClass) -> list[int]:
    """The ascending list of parts <= n permitted by ``part_class``."""
    if part_class is PartClass.ALL:
        return list(range(1, n + 1))
    primes = primes_up_to(n)
    if part_class is PartClass.ODD_PRIME:
        return [p for p in primes if p != 2]
    return primes


def count_partitions_up_to(n: int, part_class: PartClass) -> list[int]:
    """Exact partition counts for every sum ``0..n`` at once.

    ``result[m]`` is the number of partitions of ``m`` with parts in the
    class.  One dynamic-programming pass per allowed part; the table is the
    cheap way to get a whole range of counts.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    dp = [0] * (n + 1)
    dp[0] = 1
    for a in allowed_parts(n, part_class):
        # ascending m, reading entries already updated in this pass: that is
        # the unbounded recurrence, i.e. a part may repeat
        for m, below in zip(range(a, n + 1), dp):
            dp[m] += below
    return dp


def count_partitions(n: int, part_class: PartClass) -> int:
    """Number of partitions of exactly ``n`` with parts in the class."""
    return count_partitions_up_to(n, part_class)[n]


def enumerate_partitions(n: int, part_class: PartClass) -> Iterator[Partition]:
    """Yield each partition of exactly ``n`` once, in lexicographic order.

    Parts come out weakly increasing; the stream length equals
    `count_partitions(n, part_class)`.  For ``n = 0`` the single empty
    partition is yielded.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    pool = allowed_parts(n, part_class)

    def rec(remaining: int, start: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(tuple(prefix))
            return
        for idx in range(start, len(pool)):
            a = pool[idx]
            if a > remaining:
                break
            prefix.append(a)
            yield from rec(remaining - a, idx, prefix)
            prefix.pop()

    yield from rec(n, 0, [])


def p_set_size(n: int) -> int:
    """Number of nonempty odd-prime partitions with sum <= n.

    The empty partition is excluded: every member must be mappable to a
    graph, which needs at least one part.  Equals the sum of the odd-prime
    counts for sums 3..n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < 3:
        return 0
    table = count_partitions_up_to(n, PartClass.ODD_PRIME)
    return sum(table[3:])


def p_set_enumerate(n: int) -> Iterator[Partition]:
    """Yield the nonempty odd-prime partitions with sum <= n.

    Grouped by ascending sum, lexicographic within a sum; the stream length
    equals `p_set_size(n)`.  Two runs produce identical sequences.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    for s in range(3, n + 1):
        yield from enumerate_partitions(s, PartClass.ODD_PRIME)


def product_of_parts(parts: Sequence[int]) -> int:
    """Exact product of the parts (1 for the empty sequence)."""
    out = 1
    for p in parts:
        out *= p
    return out
