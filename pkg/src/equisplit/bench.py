"""Timing helpers for the recognizer's linear-scaling check.

Two durations are measured per instance, with the edge list prepared ahead
of time so text parsing never enters the timed region:

  build_s      constructing the Graph from the in-memory edge list, which is
               the part of the pipeline that touches every edge;
  recognize_s  the decision itself, which reads the degree array and one
               adjacency query.

The scaling figure of merit is (build_s + recognize_s) / (n + m): the full
ingest-and-decide cost per input unit. The decision step alone is sublinear
in m for dense inputs, so it cannot be normalized by n + m on its own.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graph import Graph
from .recognition import recognize


@dataclass(frozen=True, slots=True)
class BenchRow:
    family: str
    n: int
    m: int
    build_s: float
    recognize_s: float

    @property
    def per_unit_s(self) -> float:
        return (self.build_s + self.recognize_s) / (self.n + self.m)


def bench_edge_list(family: str, n: int) -> list[tuple[int, int]]:
    """Edge list of the benchmark instance for a family at order n.

    Families iii and iv use the smallest valid pendant count (clique of 4,
    r = n - 4) so that m stays proportional to n; family v uses a = 0, b = 1.
    """
    if family == "i":
        return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    if family == "ii":
        return [(1, v) for v in range(2, n + 1)]
    if family == "iii":
        edges = [(u, v) for u in range(1, 5) for v in range(u + 1, 5)]
        edges.extend((1, leaf) for leaf in range(5, n + 1))
        return edges
    if family == "iv":
        edges = [(u, v) for u in range(1, 4) for v in range(u + 1, 4)]
        edges.extend((u, 4) for u in range(2, 4))
        edges.extend((1, leaf) for leaf in range(5, n + 1))
        return edges
    if family == "v":
        edges = [(u, v) for u in range(1, n - 1) for v in range(u + 1, n - 1)]
        edges.append((1, n))  # y sees the single A_x vertex
        edges.extend((u, n - 1) for u in range(2, n - 1))
        return edges
    raise ValueError(f"unknown family {family!r}")


def bench_instance(family: str, n: int, repeats: int = 3) -> BenchRow:
    """Best-of-``repeats`` build and recognize times for one instance."""
    _validate_size(family, n)
    edges = bench_edge_list(family, n)
    best_build = best_recognize = float("inf")
    result = None
    for _ in range(max(1, repeats)):
        t0 = time.perf_counter()
        g = Graph.from_edges(n, edges)
        t1 = time.perf_counter()
        result = recognize(g)
        t2 = time.perf_counter()
        best_build = min(best_build, t1 - t0)
        best_recognize = min(best_recognize, t2 - t1)
    assert result is not None and result.is_yes, f"benchmark instance {family} n={n} must be a YES"
    return BenchRow(family=family, n=n, m=len(edges), build_s=best_build, recognize_s=best_recognize)


def run_bench(family: str, sizes: list[int], repeats: int = 3) -> list[BenchRow]:
    return [bench_instance(family, n, repeats=repeats) for n in sizes]


def ratio_spread(rows: list[BenchRow]) -> float:
    """max/min of the per-unit cost across rows; 1.0 for fewer than 2 rows."""
    if len(rows) < 2:
        return 1.0
    ratios = [row.per_unit_s for row in rows]
    return max(ratios) / min(ratios)


def _validate_size(family: str, n: int) -> None:
    minimum = {"i": 4, "ii": 4, "iii": 6, "iv": 6, "v": 5}.get(family)
    if minimum is None:
        raise ValueError(f"unknown family {family!r}")
    if n < minimum:
        raise ValueError(f"family {family} benchmark needs n >= {minimum}, got {n}")
    if family == "v" and n % 2 == 0:
        raise ValueError(f"family v needs odd n, got {n}")
