"""Split-graph recognition, split-partition normalization, and structure search.

A split graph is one whose vertex set partitions into a clique and an
independent set. ``split_partition`` uses the degree-sequence test (one
linear pass); ``is_split_oracle`` is an independent exhaustive search kept
around as ground truth for testing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IsolatedVertexError, OracleLimitError
from .graph import Graph

ORACLE_MAX_VERTICES = 16


@dataclass(frozen=True, slots=True)
class SplitPartition:
    """A clique/independent-set bipartition of the vertices.

    ``normalized`` means every clique vertex has at least one neighbor on
    the independent side (only possible when the host graph has no isolated
    vertices).
    """

    clique: frozenset[int]
    independent: frozenset[int]
    normalized: bool = False

    def validate(self, g: Graph) -> None:
        """Check the partition invariants edge by edge; raises ValueError."""
        if self.clique & self.independent:
            raise ValueError("clique and independent set overlap")
        if self.clique | self.independent != set(range(1, g.n + 1)):
            raise ValueError("partition does not cover the vertex set")
        ks = sorted(self.clique)
        for i, u in enumerate(ks):
            for v in ks[i + 1 :]:
                if not g.adjacent(u, v):
                    raise ValueError(f"clique pair ({u}, {v}) not adjacent")
        inds = sorted(self.independent)
        for i, u in enumerate(inds):
            for v in inds[i + 1 :]:
                if g.adjacent(u, v):
                    raise ValueError(f"independent pair ({u}, {v}) adjacent")
        if self.normalized:
            for k in ks:
                if not any(w in self.independent for w in g.adj[k]):
                    raise ValueError(f"clique vertex {k} has no independent neighbor")


def split_partition(g: Graph) -> SplitPartition | None:
    """Return a split partition, or None if the graph is not split.

    Degree-sequence test: order degrees non-increasingly d1 >= ... >= dn and
    let h = max{i : d_i >= i-1}; the graph is split iff
    sum(d_i for i <= h) == h*(h-1) + sum(d_i for i > h), in which case the h
    vertices of largest degree (ties by ascending id) form the clique.
    Runs in O(n + m).
    """
    n = g.n
    if n == 0:
        return SplitPartition(frozenset(), frozenset())
    # bucket by degree, descending; ascending id within a bucket
    buckets: list[list[int]] = [[] for _ in range(n)]
    for v in range(1, n + 1):
        buckets[g.degrees[v]].append(v)
    order: list[int] = []
    for d in range(n - 1, -1, -1):
        order.extend(buckets[d])
    degs = [g.degrees[v] for v in order]
    h = 0
    for i in range(1, n + 1):
        if degs[i - 1] >= i - 1:
            h = i
    head = sum(degs[:h])
    tail = sum(degs[h:])
    if head != h * (h - 1) + tail:
        return None
    return SplitPartition(clique=frozenset(order[:h]), independent=frozenset(order[h:]))


def normalize_partition(g: Graph, sp: SplitPartition) -> SplitPartition:
    """Move clique vertices with no independent-side neighbor to the independent side.

    Requires the host graph to have no isolated vertices. At most one vertex
    can ever move (a second candidate would be adjacent to the first, which
    is on the independent side after the move); asserted. The highest-id
    candidate moves, which keeps the result deterministic.
    """
    if g.has_isolated_vertex():
        raise IsolatedVertexError("cannot normalize a partition of a graph with isolated vertices")
    clique = set(sp.clique)
    independent = set(sp.independent)
    moves = 0
    while True:
        candidates = [k for k in clique if not any(w in independent for w in g.adj[k])]
        if not candidates:
            break
        k = max(candidates)
        clique.discard(k)
        independent.add(k)
        moves += 1
        assert moves <= 1, "two clique vertices moved; partition was not valid"
    return SplitPartition(clique=frozenset(clique), independent=frozenset(independent), normalized=True)


def is_split_oracle(g: Graph) -> bool:
    """Exhaustive ground truth: does any bipartition into clique + independent set exist?

    Tries every assignment of vertices to the two sides, in id order, cutting
    a branch as soon as the partial assignment breaks a side's requirement.
    Only for graphs with at most 16 vertices.
    """
    n = g.n
    if n > ORACLE_MAX_VERTICES:
        raise OracleLimitError(f"split oracle limited to {ORACLE_MAX_VERTICES} vertices, got {n}")
    adj_mask = _adjacency_masks(g)

    def assign(v: int, clique_mask: int, indep_mask: int) -> bool:
        if v > n:
            return True
        a = adj_mask[v]
        # v joins the clique: must see every clique vertex chosen so far
        if clique_mask & ~a == 0 and assign(v + 1, clique_mask | (1 << v), indep_mask):
            return True
        # v joins the independent side: must see none of it
        if indep_mask & a == 0 and assign(v + 1, clique_mask, indep_mask | (1 << v)):
            return True
        return False

    return assign(1, 0, 0)


def find_near_star_pair(g: Graph, sp: SplitPartition) -> tuple[int, int] | None:
    """Find (x, y), x in the clique and y independent, with every other
    independent vertex attached exactly to x and y seeing the whole clique or
    all of it except x.

    Brute force over clique x independent candidate pairs; returns the
    lexicographically first hit or None. Requires a normalized partition with
    at least 2 clique and 3 independent vertices.
    """
    if not sp.normalized:
        raise ValueError("partition must be normalized")
    if len(sp.clique) < 2 or len(sp.independent) < 3:
        raise ValueError("requires clique size >= 2 and independent size >= 3")
    ind = sorted(sp.independent)
    for x in sorted(sp.clique):
        for y in ind:
            if all(g.adj[z] == (x,) for z in ind if z != y):
                ny = set(g.adj[y])
                if ny == sp.clique or ny == sp.clique - {x}:
                    return (x, y)
    return None


def _adjacency_masks(g: Graph) -> list[int]:
    masks = [0] * (g.n + 1)
    for v in range(1, g.n + 1):
        acc = 0
        for w in g.adj[v]:
            acc |= 1 << w
        masks[v] = acc
    return masks
