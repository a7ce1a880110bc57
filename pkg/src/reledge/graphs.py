"""Simple undirected graphs: distance layers, independence, maximal
independent sets, the well-covered test, and fixed-length cycle search.

Vertices are 1..n.  Graphs are immutable after construction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from . import kernels
from .errors import ContractViolation, ParseError

DEFAULT_MIS_CAP = 1_000_000


@dataclass(frozen=True)
class Graph:
    """Finite, undirected, loopless, without multiple edges."""

    num_vertices: int
    adjacency: tuple  # tuple[frozenset, ...] of length num_vertices + 1; slot 0 unused

    def __post_init__(self):
        n = self.num_vertices
        if n < 0:
            raise ContractViolation("num_vertices must be nonnegative")
        if len(self.adjacency) != n + 1:
            raise ContractViolation("adjacency table must have num_vertices + 1 slots")
        for v in range(1, n + 1):
            for u in self.adjacency[v]:
                if not 1 <= u <= n:
                    raise ContractViolation(f"vertex {u} out of range in adjacency of {v}")
                if u == v:
                    raise ContractViolation(f"loop at vertex {v}")
                if v not in self.adjacency[u]:
                    raise ContractViolation(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable) -> "Graph":
        adj = [set() for _ in range(num_vertices + 1)]
        for u, v in edges:
            if not (1 <= u <= num_vertices and 1 <= v <= num_vertices):
                raise ContractViolation(f"edge ({u},{v}) out of range 1..{num_vertices}")
            if u == v:
                raise ContractViolation(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(num_vertices, tuple(frozenset(s) for s in adj))

    def vertices(self) -> range:
        return range(1, self.num_vertices + 1)

    def neighbors(self, v: int) -> frozenset:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edges(self) -> list:
        out = []
        for v in self.vertices():
            for u in self.adjacency[v]:
                if v < u:
                    out.append((v, u))
        return sorted(out)

    def num_edges(self) -> int:
        return sum(len(self.adjacency[v]) for v in self.vertices()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adjacency[u]

    def _check_vertex(self, v):
        if not 1 <= v <= self.num_vertices:
            raise ContractViolation(f"vertex {v} out of range 1..{self.num_vertices}")


def _check_subset(g: Graph, s) -> frozenset:
    s = frozenset(s)
    for v in s:
        g._check_vertex(v)
    return s


def _distances(g: Graph, sources: frozenset) -> dict:
    dist = {v: 0 for v in sources}
    queue = deque(sorted(sources))
    while queue:
        v = queue.popleft()
        for u in sorted(g.adjacency[v]):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def neighborhood_layer(g: Graph, s, i: int) -> frozenset:
    """Vertices at distance exactly i from the (nonempty) set s."""
    s = _check_subset(g, s)
    if not s:
        raise ContractViolation("distance layers require a nonempty source set")
    if i < 0:
        raise ContractViolation("layer index must be nonnegative")
    dist = _distances(g, s)
    return frozenset(v for v, d in dist.items() if d == i)


def closed_neighborhood(g: Graph, s, i: int) -> frozenset:
    """Vertices at distance at most i from the (nonempty) set s."""
    s = _check_subset(g, s)
    if not s:
        raise ContractViolation("distance layers require a nonempty source set")
    if i < 0:
        raise ContractViolation("layer index must be nonnegative")
    dist = _distances(g, s)
    return frozenset(v for v, d in dist.items() if d <= i)


def dominates(g: Graph, s, t) -> bool:
    """True iff every vertex of t lies in s or adjacent to s (empty s
    dominates only empty t)."""
    s = _check_subset(g, s)
    t = _check_subset(g, t)
    covered = set(s)
    for v in s:
        covered.update(g.adjacency[v])
    return t <= covered


def is_independent(g: Graph, s) -> bool:
    s = _check_subset(g, s)
    return all(u not in g.adjacency[v] for v in s for u in s)


def is_maximal_independent(g: Graph, s) -> bool:
    """Independent and dominating all vertices — the growth-free criterion."""
    s = _check_subset(g, s)
    return is_independent(g, s) and dominates(g, s, g.vertices())


def greedy_mis(g: Graph) -> frozenset:
    """Add the lowest-index vertex compatible with the chosen set, repeatedly."""
    chosen = set()
    blocked = set()
    for v in g.vertices():
        if v not in blocked:
            chosen.add(v)
            blocked.add(v)
            blocked.update(g.adjacency[v])
    return frozenset(chosen)


def enumerate_maximal_independent_sets(g: Graph, cap: int = DEFAULT_MIS_CAP) -> list:
    """All maximal independent sets, each once, ordered by size then members."""
    if cap <= 0:
        raise ContractViolation("cap must be positive")
    sets = kernels.all_maximal_independent_sets(g, cap)
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def is_well_covered(g: Graph, cap: int = DEFAULT_MIS_CAP) -> bool:
    """True iff every maximal independent set is maximum."""
    sets = enumerate_maximal_independent_sets(g, cap)
    sizes = {len(s) for s in sets}
    return len(sizes) <= 1


def contains_cycle_of_length(g: Graph, k: int) -> Optional[list]:
    """Some k-cycle as a vertex list, or None.  Subgraphs count, induced or
    not.  The returned cycle is the lexicographically least sequence rooted
    at its minimum vertex.
    """
    if not 3 <= k <= 8:
        raise ContractViolation(f"cycle length must be in 3..8, got {k}")
    n = g.num_vertices
    sorted_adj = [()] * (n + 1)
    for v in g.vertices():
        sorted_adj[v] = tuple(sorted(g.adjacency[v]))
    for start in g.vertices():
        path = [start]
        used = {start}
        found = _extend_cycle(sorted_adj, start, path, used, k, g)
        if found is not None:
            return found
    return None


def _extend_cycle(sorted_adj, start, path, used, k, g):
    if len(path) == k:
        return list(path) if start in g.adjacency[path[-1]] else None
    for v in sorted_adj[path[-1]]:
        if v > start and v not in used:
            path.append(v)
            used.add(v)
            found = _extend_cycle(sorted_adj, start, path, used, k, g)
            if found is not None:
                return found
            path.pop()
            used.remove(v)
    return None


def parse_dimacs_graph(text) -> Graph:
    """Parse DIMACS edge format: 'p edge n m' header, 'e u v' lines with
    u < v, 'c' comments."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    num_vertices = None
    num_edges = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if num_vertices is not None:
                raise ParseError("duplicate header", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"malformed header {line!r}", lineno)
            try:
                num_vertices, num_edges = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno) from None
            if num_vertices < 0 or num_edges < 0:
                raise ParseError("negative counts in header", lineno)
            continue
        if line.startswith("e"):
            if num_vertices is None:
                raise ParseError("edge before 'p edge' header", lineno)
            parts = line.split()
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"malformed edge line {line!r}", lineno) from None
            if not (1 <= u < v <= num_vertices):
                raise ParseError(f"edge ({u},{v}) violates 1 <= u < v <= {num_vertices}", lineno)
            if (u, v) in seen:
                raise ParseError(f"duplicate edge ({u},{v})", lineno)
            seen.add((u, v))
            edges.append((u, v))
            continue
        raise ParseError(f"unrecognized line {line!r}", lineno)
    if num_vertices is None:
        raise ParseError("missing 'p edge' header")
    if len(edges) != num_edges:
        raise ParseError(f"header promises {num_edges} edges, found {len(edges)}")
    return Graph.from_edges(num_vertices, edges)


def emit_dimacs_graph(g: Graph) -> str:
    """Serialize; edges sorted lexicographically.  parse(emit(g)) == g."""
    lines = [f"p edge {g.num_vertices} {g.num_edges()}"]
    for u, v in g.edges():
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"
