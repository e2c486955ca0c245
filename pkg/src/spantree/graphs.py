"""Undirected multigraphs as immutable values.

Vertices are the integers ``0..n_vertices-1``.  Edges are unordered pairs
carrying an integer multiplicity >= 1; self-loops are rejected outright
because a loop can never lie on a spanning tree.  Every operation returns a
new graph, so instances can be shared freely between threads and worker
processes.

Multiplicities exist so that edge contraction stays closed under the graph
type (contracting one side of a triangle leaves a doubled edge).  All the
named constructors (`cycle`, `path`, `complete`) emit simple graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations


class EdgeListError(ValueError):
    """Malformed edge-list text.  ``line_no`` is 1-based."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Graph:
    """A multigraph on ``n_vertices`` labeled vertices.

    ``edges`` is stored canonically: one ``(u, v, multiplicity)`` triple per
    vertex pair with ``u < v``, sorted lexicographically.  The constructor
    accepts ``(u, v)`` pairs (multiplicity 1) or ``(u, v, m)`` triples with
    endpoints in either order and normalizes; repeated entries for the same
    pair have their multiplicities summed.  Equality and hashing follow the
    canonical form.
    """

    n_vertices: int
    edges: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n_vertices < 0:
            raise ValueError("vertex count must be nonnegative")
        merged: dict[tuple[int, int], int] = {}
        for entry in self.edges:
            if len(entry) == 2:
                u, v = entry
                m = 1
            elif len(entry) == 3:
                u, v, m = entry
            else:
                raise ValueError(f"edge entry {entry!r} is not a pair or a triple")
            if u == v:
                raise ValueError(f"self-loop at vertex {u} rejected")
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(
                    f"edge ({u}, {v}) outside vertex range 0..{self.n_vertices - 1}"
                )
            if m < 1:
                raise ValueError(f"multiplicity {m} for edge ({u}, {v}) must be >= 1")
            key = (u, v) if u < v else (v, u)
            merged[key] = merged.get(key, 0) + m
        object.__setattr__(
            self, "edges", tuple((u, v, m) for (u, v), m in sorted(merged.items()))
        )

    @property
    def n_edges(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(m for _, _, m in self.edges)

    def degree(self, u: int) -> int:
        """Degree of ``u`` counted with multiplicity."""
        return sum(m for a, b, m in self.edges if u == a or u == b)

    def multiplicity(self, u: int, v: int) -> int:
        """Multiplicity of the edge ``uv`` (0 when absent)."""
        key = (u, v) if u < v else (v, u)
        for a, b, m in self.edges:
            if (a, b) == key:
                return m
        return 0

    def neighbors(self) -> list[list[int]]:
        """Adjacency lists, ignoring multiplicities."""
        adj: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def edge_instances(self) -> list[tuple[int, int]]:
        """Every parallel copy as its own ``(u, v)`` pair."""
        out: list[tuple[int, int]] = []
        for u, v, m in self.edges:
            out.extend([(u, v)] * m)
        return out


def _check_vertex(g: Graph, u: int) -> None:
    if not (0 <= u < g.n_vertices):
        raise ValueError(f"vertex {u} not in graph on {g.n_vertices} vertices")


def cycle(length: int) -> Graph:
    """The cycle on ``length`` >= 3 vertices."""
    if length < 3:
        raise ValueError(f"cycle length must be >= 3, got {length}")
    return Graph(length, tuple((i, (i + 1) % length) for i in range(length)))


def path(n_vertices: int) -> Graph:
    """The path on ``n_vertices`` >= 1 vertices; one vertex means no edges."""
    if n_vertices < 1:
        raise ValueError(f"path needs at least one vertex, got {n_vertices}")
    return Graph(n_vertices, tuple((i, i + 1) for i in range(n_vertices - 1)))


def complete(n_vertices: int) -> Graph:
    """The complete graph on ``n_vertices`` >= 1 vertices."""
    if n_vertices < 1:
        raise ValueError(f"complete graph needs at least one vertex, got {n_vertices}")
    return Graph(n_vertices, tuple(combinations(range(n_vertices), 2)))


def identify(g: Graph, u: int, h: Graph, v: int) -> Graph:
    """One-point union: disjoint copies of ``g`` and ``h`` with ``u = v``.

    Vertices of ``g`` keep their labels, so the merged vertex is ``u``; the
    remaining vertices of ``h`` follow in their original order starting at
    ``g.n_vertices``.  The relabeling is deterministic, which keeps
    serialized output stable.
    """
    _check_vertex(g, u)
    _check_vertex(h, v)
    relabel: dict[int, int] = {}
    next_id = g.n_vertices
    for w in range(h.n_vertices):
        if w == v:
            relabel[w] = u
        else:
            relabel[w] = next_id
            next_id += 1
    edges = list(g.edges)
    edges.extend((relabel[a], relabel[b], m) for a, b, m in h.edges)
    return Graph(g.n_vertices + h.n_vertices - 1, tuple(edges))


def is_connected(g: Graph) -> bool:
    """Whether every vertex pair is joined by a path.

    The empty graph (0 vertices) counts as connected by convention.
    """
    if g.n_vertices == 0:
        return True
    adj = g.neighbors()
    seen = [False] * g.n_vertices
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        w = queue.popleft()
        for x in adj[w]:
            if not seen[x]:
                seen[x] = True
                reached += 1
                queue.append(x)
    return reached == g.n_vertices


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Remove one copy of the edge ``e``; the multiplicity drops by 1."""
    u, v = e
    key = (u, v) if u < v else (v, u)
    if g.multiplicity(*key) < 1:
        raise ValueError(f"edge {key} not present")
    edges = []
    for a, b, m in g.edges:
        if (a, b) == key:
            if m > 1:
                edges.append((a, b, m - 1))
        else:
            edges.append((a, b, m))
    return Graph(g.n_vertices, tuple(edges))


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Merge the endpoints of ``e`` into one vertex.

    Parallel edges produced by the merge keep their summed multiplicities;
    copies of ``e`` itself become loops and are discarded.  The surviving
    endpoint is ``min(e)`` and vertices above ``max(e)`` shift down by one.
    """
    u, v = e
    if u > v:
        u, v = v, u
    if g.multiplicity(u, v) < 1:
        raise ValueError(f"edge {(u, v)} not present")

    def relabel(w: int) -> int:
        if w == v:
            return u
        return w - 1 if w > v else w

    edges = []
    for a, b, m in g.edges:
        ra, rb = relabel(a), relabel(b)
        if ra != rb:
            edges.append((ra, rb, m))
    return Graph(g.n_vertices - 1, tuple(edges))


def format_edge_list(g: Graph) -> str:
    """Serialize to the edge-list text format.

    First line ``n <vertex_count>``, then one edge per line as ``u v`` (or
    ``u v m`` when the multiplicity exceeds 1), in canonical order.  The
    output round-trips bit-exactly through `parse_edge_list`.
    """
    lines = [f"n {g.n_vertices}"]
    for u, v, m in g.edges:
        lines.append(f"{u} {v}" if m == 1 else f"{u} {v} {m}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    Lines starting with ``#`` and blank lines are skipped.  The first
    meaningful line must be ``n <vertex_count>``; the rest are ``u v`` or
    ``u v multiplicity``.  Raises `EdgeListError` carrying the offending
    line number.
    """
    n_vertices: int | None = None
    entries: list[tuple[int, int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n_vertices is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise EdgeListError(line_no, f"expected 'n <vertex_count>', got {line!r}")
            try:
                n_vertices = int(tokens[1])
            except ValueError:
                raise EdgeListError(line_no, f"bad vertex count {tokens[1]!r}") from None
            if n_vertices < 0:
                raise EdgeListError(line_no, "vertex count must be nonnegative")
            continue
        if len(tokens) not in (2, 3):
            raise EdgeListError(line_no, f"expected 'u v [multiplicity]', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
            m = int(tokens[2]) if len(tokens) == 3 else 1
        except ValueError:
            raise EdgeListError(line_no, f"non-integer token in {line!r}") from None
        if u == v:
            raise EdgeListError(line_no, f"self-loop at vertex {u}")
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise EdgeListError(line_no, f"edge ({u}, {v}) outside vertex range")
        if m < 1:
            raise EdgeListError(line_no, f"multiplicity {m} must be >= 1")
        entries.append((u, v, m))
    if n_vertices is None:
        raise EdgeListError(1, "empty input: missing 'n <vertex_count>' line")
    return Graph(n_vertices, tuple(entries))
