"""Exact spanning-tree counts via the matrix-tree identity.

Everything here is integer arithmetic on Python ints; no floating point is
involved at any step, so counts stay exact at any magnitude.  All functions
are pure and keep no shared state, which makes them safe to call from
concurrent workers.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .graphs import Graph

# Square matrix of exact integers, row-major.
IntMatrix = list[list[int]]


def laplacian(g: Graph) -> IntMatrix:
    """Combinatorial Laplacian ``D - A`` with multiplicities counted.

    Diagonal entries are vertex degrees (sums of multiplicities); the
    off-diagonal entry for a pair is minus its multiplicity.  Rows sum to 0.
    """
    n = g.n_vertices
    mat = [[0] * n for _ in range(n)]
    for u, v, m in g.edges:
        mat[u][u] += m
        mat[v][v] += m
        mat[u][v] -= m
        mat[v][u] -= m
    return mat


def principal_minor(mat: IntMatrix, strike: int) -> IntMatrix:
    """Copy of ``mat`` with row and column ``strike`` removed."""
    return [
        [x for j, x in enumerate(row) if j != strike]
        for i, row in enumerate(mat)
        if i != strike
    ]


def det_fraction_free(mat: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Each elimination step divides by the previous pivot and that division is
    exact, so intermediate values stay integers.  Pivoting swaps in the
    first nonzero candidate below the diagonal; magnitude is irrelevant for
    exactness.  A zero pivot column with no candidate means the determinant
    is 0.  The empty (0 x 0) matrix has determinant 1 by convention.
    """
    k = len(mat)
    if k == 0:
        return 1
    m = [list(row) for row in mat]
    sign = 1
    prev = 1
    for col in range(k - 1):
        if m[col][col] == 0:
            for r in range(col + 1, k):
                if m[r][col] != 0:
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[col][col]
        pivot_row = m[col]
        for i in range(col + 1, k):
            row = m[i]
            factor = row[col]
            for j in range(col + 1, k):
                row[j] = (row[j] * pivot - factor * pivot_row[j]) // prev
            row[col] = 0
        prev = pivot
    return sign * m[k - 1][k - 1]


def tau(g: Graph) -> int:
    """Number of spanning trees of ``g``, exactly.

    Computed as the determinant of the Laplacian with the first row and
    column struck; by the matrix-tree identity every choice of struck index
    gives the same value.  Conventions: the 0-vertex graph has 0 spanning
    trees, the 1-vertex graph has 1, and any disconnected graph has 0 (the
    minor determinant vanishes on its own).
    """
    if g.n_vertices == 0:
        return 0
    return det_fraction_free(principal_minor(laplacian(g), 0))


def tau_bruteforce(g: Graph, *, budget: int = 5_000_000) -> int:
    """Count spanning trees by scanning all (n-1)-edge subsets.

    Independent of the determinant route: a subset counts when its edges
    (parallel copies are distinct edges) touch no cycle and leave one
    component.  Refuses when C(|E|, n-1) exceeds ``budget``.
    """
    n = g.n_vertices
    if n == 0:
        return 0
    instances = g.edge_instances()
    need = n - 1
    if len(instances) < need:
        return 0
    n_subsets = comb(len(instances), need)
    if n_subsets > budget:
        raise ValueError(
            f"{n_subsets} subsets exceed the enumeration budget of {budget}"
        )
    count = 0
    for subset in combinations(instances, need):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        merges = 0
        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                break
            parent[ru] = rv
            merges += 1
        if merges == need:
            count += 1
    return count
