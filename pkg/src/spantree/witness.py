"""Graphs realizing prescribed spanning-tree counts on a chosen vertex count.

A flower is the one-point union of cycles.  Its spanning-tree count is the
product of the cycle lengths: every block contributes independently, and a
cycle of length x has exactly x spanning trees.  Starting from a partition
of some s <= n into odd primes, gluing a path onto the flower pads the
vertex count up to exactly n without changing the count (a tree block
contributes a factor of 1).  Distinct partitions give distinct products,
by unique factorization, so each partition yields its own realizable count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graphs import Graph, cycle, identify, path
from .partitions import Partition, p_set_enumerate, primes_up_to, product_of_parts

__all__ = [
    "Witness",
    "DistinctnessReport",
    "flower",
    "build_witness",
    "witness_family",
    "certify_distinct",
    "sidecar_json",
]


@dataclass(frozen=True)
class Witness:
    """An n-vertex connected graph with spanning-tree count Π parts.

    ``tau_value`` is taken from the partition product; recomputing it from
    the graph via the Laplacian is a verification step that belongs to the
    test suite, not to construction.
    """

    partition: Partition
    graph: Graph
    tau_value: int
    n: int


@dataclass(frozen=True)
class DistinctnessReport:
    """Outcome of a pairwise-distinctness check over spanning-tree counts.

    ``collisions`` holds one ``(count, first_index, second_index)`` triple
    per repeated value, indices referring to input order.
    """

    ok: bool
    collisions: tuple[tuple[int, int, int], ...]

    def __bool__(self) -> bool:
        return self.ok


def flower(parts: Partition | Sequence[int]) -> Graph:
    """One-point union of cycles with the given lengths, glued at vertex 0.

    Parameters
    ----------
    parts : Partition or sequence of int
        Cycle lengths, each >= 3.

    Returns
    -------
    Graph
        Vertex 0 is the shared hub; the graph has ``sum(parts) - k + 1``
        vertices and ``sum(parts)`` edges for k cycles.
    """
    lengths = tuple(parts.parts if isinstance(parts, Partition) else parts)
    if not lengths:
        raise ValueError("flower needs at least one cycle")
    if any(x < 3 for x in lengths):
        raise ValueError("cycle lengths must be >= 3")
    g = cycle(lengths[0])
    for x in lengths[1:]:
        g = identify(g, 0, cycle(x), 0)
    return g


def build_witness(p: Partition, n: int) -> Witness:
    """Attach a path to ``flower(p)`` so the result has exactly n vertices.

    Requires every part to be an odd prime and ``sum(parts) <= n``.  The
    flower has ``s - k + 1`` vertices, so a path on ``n - s + k`` vertices,
    merged endpoint-to-hub, lands on n exactly; a one-vertex path is the
    degenerate no-op case.
    """
    if not p.parts:
        raise ValueError("partition must be nonempty")
    s = p.total
    if s > n:
        raise ValueError(f"partition sum {s} exceeds target vertex count {n}")
    odd_primes = set(primes_up_to(max(p.parts))) - {2}
    if any(x not in odd_primes for x in p.parts):
        raise ValueError("every part must be an odd prime")
    k = len(p)
    g = identify(flower(p), 0, path(n - s + k), 0)
    return Witness(partition=p, graph=g, tau_value=product_of_parts(p.parts), n=n)


def witness_family(n: int) -> Iterator[Witness]:
    """One witness per nonempty odd-prime partition with sum <= n.

    Stream order follows the partition enumeration (ascending sum, then
    lexicographic), so two runs are identical.  Empty for n < 3.
    """
    for p in p_set_enumerate(n):
        yield build_witness(p, n)


def certify_distinct(witnesses: Iterable[Witness]) -> DistinctnessReport:
    """Check that all spanning-tree counts in the collection differ.

    For family output this must always pass: the counts are products of
    odd primes, and equal products force equal multisets of parts.
    """
    seen: dict[int, int] = {}
    collisions: list[tuple[int, int, int]] = []
    for idx, w in enumerate(witnesses):
        if w.tau_value in seen:
            collisions.append((w.tau_value, seen[w.tau_value], idx))
        else:
            seen[w.tau_value] = idx
    return DistinctnessReport(ok=not collisions, collisions=tuple(collisions))


def sidecar_json(w: Witness) -> str:
    """JSON descriptor accompanying a serialized witness graph.

    The count is a decimal string: products of many primes outgrow 64-bit
    integers, which not every JSON consumer can hold.
    """
    payload = {"n": w.n, "parts": list(w.partition.parts), "tau": str(w.tau_value)}
    return json.dumps(payload) + "\n"
