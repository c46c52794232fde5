"""Exhaustive maximal-matching oracles for small graphs.

Ground truth for equimatchability at desk scale: enumerate every maximal
matching by branching on the lowest-id unsaturated vertex. ``maximal_matching_sizes``
only tracks achievable sizes (memoized, bitmask state); the witness path
materializes the matchings themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import IsolatedVertexError, OracleLimitError
from .graph import Graph
from .split import SplitPartition

ORACLE_MAX_VERTICES = 16


@dataclass(frozen=True)
class Matching:
    """A set of pairwise endpoint-disjoint edges, each stored as (u, v) with u < v."""

    edges: frozenset[tuple[int, int]]
    saturated: frozenset[int] = field(init=False)

    def __post_init__(self):
        seen: set[int] = set()
        for u, v in self.edges:
            if not u < v:
                raise ValueError(f"matching edge ({u}, {v}) must satisfy u < v")
            if u in seen or v in seen:
                raise ValueError(f"matching edges share endpoint at ({u}, {v})")
            seen.add(u)
            seen.add(v)
        object.__setattr__(self, "saturated", frozenset(seen))

    def __len__(self) -> int:
        return len(self.edges)

    def is_maximal_in(self, g: Graph) -> bool:
        """True iff no edge of g has both endpoints unsaturated."""
        return all(u in self.saturated or v in self.saturated for u, v in g.edges())

    def canonical(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))


def _require_oracle_input(g: Graph) -> None:
    if g.n > ORACLE_MAX_VERTICES:
        raise OracleLimitError(
            f"matching oracle limited to {ORACLE_MAX_VERTICES} vertices, got {g.n}"
        )
    if g.has_isolated_vertex():
        raise IsolatedVertexError("matching oracle requires a graph without isolated vertices")


def _neighbor_masks(g: Graph) -> tuple[list[int], list[int]]:
    """Per-vertex bitmasks of neighbors below and above the vertex id."""
    lower = [0] * (g.n + 2)
    upper = [0] * (g.n + 2)
    for v in range(1, g.n + 1):
        lo = hi = 0
        for w in g.adj[v]:
            if w < v:
                lo |= 1 << w
            else:
                hi |= 1 << w
        lower[v] = lo
        upper[v] = hi
    return lower, upper


def maximal_matching_sizes(g: Graph) -> frozenset[int]:
    """The exact set of cardinalities over all maximal matchings of g.

    Branching: take the lowest-id undecided vertex u; either match it to an
    unsaturated higher-id neighbor, or leave it unmatched forever. Leaving u
    unmatched is only allowed while all its lower-id neighbors are saturated;
    that incremental rule is exactly the leaf maximality condition, so every
    surviving leaf is a maximal matching. States (u, saturated-set) are
    memoized; achievable sizes are packed into an int bitmask.
    """
    _require_oracle_input(g)
    n = g.n
    lower, upper = _neighbor_masks(g)
    memo: dict[tuple[int, int], int] = {}

    def sizes_from(u: int, sat: int) -> int:
        while u <= n and (sat >> u) & 1:
            u += 1
        if u > n:
            return 1  # one maximal matching completed; contributes size 0
        key = (u, sat)
        cached = memo.get(key)
        if cached is not None:
            return cached
        acc = 0
        free_hi = upper[u] & ~sat
        while free_hi:
            vbit = free_hi & -free_hi
            free_hi ^= vbit
            acc |= sizes_from(u + 1, sat | vbit | (1 << u)) << 1
        if lower[u] & ~sat == 0:  # u may stay unmatched: lower neighbors all covered
            acc |= sizes_from(u + 1, sat)
        memo[key] = acc
        return acc

    mask = sizes_from(1, 0)
    return frozenset(i for i in range(n // 2 + 1) if (mask >> i) & 1)


def enumerate_maximal_matchings(g: Graph) -> Iterator[Matching]:
    """Yield every maximal matching exactly once, in the branching order above.

    Each leaf is re-checked for maximality against the host graph before
    being yielded.
    """
    _require_oracle_input(g)
    n = g.n
    lower, upper = _neighbor_masks(g)
    chosen: list[tuple[int, int]] = []

    def walk(u: int, sat: int) -> Iterator[Matching]:
        while u <= n and (sat >> u) & 1:
            u += 1
        if u > n:
            matching = Matching(frozenset(chosen))
            assert matching.is_maximal_in(g)
            yield matching
            return
        free_hi = upper[u] & ~sat
        while free_hi:
            vbit = free_hi & -free_hi
            free_hi ^= vbit
            v = vbit.bit_length() - 1
            chosen.append((u, v))
            yield from walk(u + 1, sat | vbit | (1 << u))
            chosen.pop()
        if lower[u] & ~sat == 0:
            yield from walk(u + 1, sat)

    yield from walk(1, 0)


def is_equimatchable_oracle(g: Graph, early_exit: bool = True) -> bool:
    """Ground truth: do all maximal matchings of g have the same size?

    With ``early_exit`` a pair of greedy maximal matchings built from
    opposite ends of the id range is tried first; different sizes settle the
    answer immediately. Both modes return the same value.
    """
    _require_oracle_input(g)
    if early_exit and len(_greedy_probe_sizes(g)) > 1:
        return False
    return len(maximal_matching_sizes(g)) == 1


def _greedy_probe_sizes(g: Graph) -> set[int]:
    sizes = set()
    for order in (range(1, g.n + 1), range(g.n, 0, -1)):
        saturated: set[int] = set()
        size = 0
        for u in order:
            if u in saturated:
                continue
            for v in g.adj[u]:
                if v not in saturated:
                    saturated.add(u)
                    saturated.add(v)
                    size += 1
                    break
        sizes.add(size)
    return sizes


def find_witness_matchings(g: Graph) -> tuple[Matching, Matching] | None:
    """Two maximal matchings of different sizes, or None if g is equimatchable.

    The returned pair has the smallest and largest achievable sizes; within
    each size the matching with the lexicographically smallest sorted edge
    list is chosen, so the witnesses do not depend on traversal details.
    """
    _require_oracle_input(g)
    best: dict[int, tuple[tuple[int, int], ...]] = {}
    for matching in enumerate_maximal_matchings(g):
        key = matching.canonical()
        size = len(key)
        if size not in best or key < best[size]:
            best[size] = key
    if len(best) < 2:
        return None
    smallest, largest = min(best), max(best)
    return Matching(frozenset(best[smallest])), Matching(frozenset(best[largest]))


def max_independent_crossing_edges(g: Graph, sp: SplitPartition) -> int:
    """Maximum number of pairwise disjoint edges between the two partition sides.

    Standard augmenting-path search on the bipartite crossing subgraph.
    """
    if g.n > ORACLE_MAX_VERTICES:
        raise OracleLimitError(
            f"matching oracle limited to {ORACLE_MAX_VERTICES} vertices, got {g.n}"
        )
    clique = sorted(sp.clique)
    independent = sp.independent
    match_of: dict[int, int] = {}  # independent vertex -> clique vertex

    def try_augment(k: int, visited: set[int]) -> bool:
        for i in g.adj[k]:
            if i in independent and i not in visited:
                visited.add(i)
                if i not in match_of or try_augment(match_of[i], visited):
                    match_of[i] = k
                    return True
        return False

    count = 0
    for k in clique:
        if try_augment(k, set()):
            count += 1
    return count
