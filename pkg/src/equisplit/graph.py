"""Immutable simple undirected graphs with 1-based vertex ids.

The on-disk format is a plain edge list: optional '#' comment lines, a
header line "n m", then exactly m lines "u v". Parsing is strict: self
loops, duplicate edges, out-of-range ids and count mismatches are errors,
never repaired silently.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GraphParseError


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph; vertices are 1..n, adjacency lists are sorted.

    Index 0 of ``adj`` and ``degrees`` is an unused placeholder so that
    vertex ids index directly.
    """

    n: int
    m: int
    adj: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list, validating simplicity.

        Rejects self-loops, duplicate edges (in either orientation) and
        endpoints outside 1..n.
        """
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        lists: list[list[int]] = [[] for _ in range(n + 1)]
        m = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{n}")
            lists[u].append(v)
            lists[v].append(u)
            m += 1
        for v in range(1, n + 1):
            lists[v].sort()
            for a, b in zip(lists[v], lists[v][1:]):
                if a == b:
                    raise ValueError(f"duplicate edge ({min(v, a)}, {max(v, a)})")
        adj = tuple(tuple(lst) for lst in lists)
        degrees = tuple(len(lst) for lst in adj)
        return cls(n=n, m=m, adj=adj, degrees=degrees)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    def adjacent(self, u: int, v: int) -> bool:
        """True iff uv is an edge. Binary search on the shorter adjacency list."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return False
        if self.degrees[u] > self.degrees[v]:
            u, v = v, u
        lst = self.adj[u]
        i = bisect_left(lst, v)
        return i < len(lst) and lst[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in lexicographic order."""
        for u in range(1, self.n + 1):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def has_isolated_vertex(self) -> bool:
        return any(d == 0 for d in self.degrees[1:])

    def _check_vertex(self, v: int) -> None:
        if not (1 <= v <= self.n):
            raise ValueError(f"vertex {v} out of range 1..{self.n}")


@dataclass(frozen=True, slots=True)
class DegreeStats:
    """Non-decreasing degree ordering plus the degree-class counters.

    ordering: vertices sorted by (degree, id) ascending.
    p: number of vertices of degree n-1.
    r: number of vertices of degree 1.
    q: number of vertices of degree n-r-1.
    """

    ordering: tuple[int, ...]
    p: int
    r: int
    q: int


def compute_degree_stats(g: Graph) -> DegreeStats:
    """Degree ordering by counting sort (ties by ascending id) and the p/r/q counters."""
    n = g.n
    counts = [0] * (n + 1)
    for v in range(1, n + 1):
        counts[g.degrees[v]] += 1
    offsets = [0] * (n + 1)
    acc = 0
    for d in range(n + 1):
        offsets[d] = acc
        acc += counts[d]
    ordering = [0] * n
    for v in range(1, n + 1):  # ascending id keeps equal-degree ties deterministic
        d = g.degrees[v]
        ordering[offsets[d]] = v
        offsets[d] += 1
    p = counts[n - 1] if n >= 1 else 0
    r = counts[1] if n >= 1 else 0
    q = counts[n - r - 1] if 0 <= n - r - 1 <= n else 0
    return DegreeStats(ordering=tuple(ordering), p=p, r=r, q=q)


def strip_isolated(g: Graph) -> tuple[Graph, int]:
    """Drop degree-0 vertices, relabelling the rest to 1..n' in the same relative order.

    Returns the induced subgraph and the number of removed vertices.
    """
    keep = [v for v in range(1, g.n + 1) if g.degrees[v] > 0]
    removed = g.n - len(keep)
    if removed == 0:
        return g, 0
    relabel = {old: new for new, old in enumerate(keep, start=1)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges()]
    return Graph.from_edges(len(keep), edges), removed


def parse_graph(text: str | Iterable[str]) -> Graph:
    """Parse the edge-list format into a canonical Graph.

    Accepts a string or an iterable of lines. '#' lines are comments; the
    first data line must be "n m"; each of the following m data lines is an
    edge "u v" (either orientation, stored as u < v). LF and CRLF both work.
    Every violation raises GraphParseError naming the offending line.
    """
    if isinstance(text, str):
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
    else:
        lines = [ln.rstrip("\n") for ln in text]

    n = m = -1
    header_seen = False
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    edge_lines = 0
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r")
        if line.startswith("#"):
            continue
        parts = line.split()
        if not header_seen:
            if len(parts) != 2:
                raise GraphParseError("header must be two integers 'n m'", line_no)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphParseError("header must be two integers 'n m'", line_no) from None
            if n < 0 or m < 0:
                raise GraphParseError("header counts must be non-negative", line_no)
            header_seen = True
            continue
        edge_lines += 1
        if edge_lines > m:
            raise GraphParseError(f"more than the declared {m} edges", line_no)
        if len(parts) != 2:
            raise GraphParseError("edge line must be two integers 'u v'", line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError("edge line must be two integers 'u v'", line_no) from None
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise GraphParseError(f"vertex id out of range 1..{n}", line_no)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line_no)
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise GraphParseError(f"duplicate edge ({u}, {v})", line_no)
        seen.add((u, v))
        edges.append((u, v))
    if not header_seen:
        raise GraphParseError("missing header line 'n m'")
    if edge_lines < m:
        raise GraphParseError(f"expected {m} edges, found {edge_lines}")
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    """Canonical text form: header then edges u < v in lexicographic order."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"
