"""Shared builders and independent reference oracles for the test suite.

The reference oracles here deliberately share no code with the package's
enumeration: ``edge_subset_matching_sizes`` filters all 2^m edge subsets,
``crossing_matching_reference`` recurses over crossing-edge subsets.
"""

from __future__ import annotations

from itertools import combinations

from equisplit import Graph, SplitPartition


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, list(combinations(range(1, n + 1), 2)))


def with_isolated(g: Graph, extra: int) -> Graph:
    """The same graph plus ``extra`` isolated vertices appended at the end."""
    return Graph.from_edges(g.n + extra, list(g.edges()))


def edge_subset_matching_sizes(g: Graph) -> frozenset[int]:
    """Reference oracle: enumerate all 2^m edge subsets, keep those that are
    matchings, keep the maximal ones, and collect their sizes."""
    edge_list = list(g.edges())
    m = len(edge_list)
    sizes = set()
    for mask in range(1 << m):
        chosen = [edge_list[i] for i in range(m) if (mask >> i) & 1]
        saturated: set[int] = set()
        is_matching = True
        for u, v in chosen:
            if u in saturated or v in saturated:
                is_matching = False
                break
            saturated.add(u)
            saturated.add(v)
        if not is_matching:
            continue
        if all(u in saturated or v in saturated for u, v in edge_list):
            sizes.add(len(chosen))
    return frozenset(sizes)


def crossing_matching_reference(g: Graph, sp: SplitPartition) -> int:
    """Reference for the maximum disjoint crossing-edge count: plain recursion
    over the crossing edges."""
    crossing = [
        (k, i)
        for k in sorted(sp.clique)
        for i in sorted(sp.independent)
        if g.adjacent(k, i)
    ]

    def best(idx: int, used: frozenset[int]) -> int:
        if idx == len(crossing):
            return 0
        k, i = crossing[idx]
        skip = best(idx + 1, used)
        if k in used or i in used:
            return skip
        return max(skip, 1 + best(idx + 1, used | {k, i}))

    return best(0, frozenset())


def all_graphs(n: int):
    """Yield every labeled graph on n vertices (including ones with isolated
    vertices)."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        yield Graph.from_edges(n, edges)
