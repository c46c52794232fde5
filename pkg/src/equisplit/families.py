"""Constructors for the five equimatchable split degree profiles, plus
seeded random graphs and single-edge mutation for adversarial testing.

Vertex numbering inside each family is fixed so tests can assert literal
degree vectors:

  iii  clique 1..n-r with universal vertex 1; pendants n-r+1..n attached to 1.
  iv   clique 1..n-r-1 with x = 1; y = n-r adjacent to 2..n-r-1;
       pendants n-r+1..n attached to x.
  v    clique 1..n-2; x = n-1 and y = n, not adjacent to each other;
       x sees 1..a and a+b+1..n-2, y sees 1..a and a+1..a+b.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True, slots=True)
class FamilySpec:
    """Parameters describing one generated family instance."""

    family: str
    n: int
    r: int | None = None
    a: int | None = None
    b: int | None = None
    c: int | None = None

    def build(self) -> Graph:
        if self.family == "i":
            return gen_complete(self.n)
        if self.family == "ii":
            return gen_star(self.n)
        if self.family == "iii":
            if self.r is None:
                raise ValueError("family iii requires r")
            return gen_family_iii(self.n, self.r)
        if self.family == "iv":
            if self.r is None:
                raise ValueError("family iv requires r")
            return gen_family_iv(self.n, self.r)
        if self.family == "v":
            if self.a is None or self.b is None or self.c is None:
                raise ValueError("family v requires a, b and c")
            return gen_family_v(self.n, self.a, self.b, self.c)
        raise ValueError(f"unknown family {self.family!r}")


def gen_complete(n: int) -> Graph:
    """The complete graph K_n."""
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def gen_star(n: int) -> Graph:
    """The star K_{1,n-1} with center vertex 1."""
    if n < 2:
        raise ValueError(f"star needs n >= 2, got {n}")
    return Graph.from_edges(n, [(1, v) for v in range(2, n + 1)])


def _check_pendant_family(n: int, r: int, family: str) -> None:
    if r < 2:
        raise ValueError(f"family {family} needs r >= 2, got r={r}")
    if (n - r) % 2 != 0:
        raise ValueError(f"family {family} needs n-r even, got n={n}, r={r}")
    if n - r < 4:
        raise ValueError(f"family {family} needs n-r >= 4, got n={n}, r={r}")


def gen_family_iii(n: int, r: int) -> Graph:
    """One universal vertex u = 1 inside a clique of size n-r, r pendants on u.

    Degree vector by vertex: n-1, then n-r-1 repeated n-r-1 times, then r ones.
    """
    _check_pendant_family(n, r, "iii")
    k = n - r
    edges = [(u, v) for u in range(1, k + 1) for v in range(u + 1, k + 1)]
    edges.extend((1, leaf) for leaf in range(k + 1, n + 1))
    return Graph.from_edges(n, edges)


def gen_family_iv(n: int, r: int) -> Graph:
    """Clique 1..n-r-1 with x = 1; y = n-r sees the clique except x; pendants on x.

    Degrees: d(x) = n-2, d(y) = n-r-2, other clique vertices n-r-1, pendants 1.
    """
    _check_pendant_family(n, r, "iv")
    k = n - r - 1
    y = n - r
    edges = [(u, v) for u in range(1, k + 1) for v in range(u + 1, k + 1)]
    edges.extend((u, y) for u in range(2, k + 1))
    edges.extend((1, leaf) for leaf in range(y + 1, n + 1))
    return Graph.from_edges(n, edges)


def gen_family_v(n: int, a: int, b: int, c: int) -> Graph:
    """Clique 1..n-2 plus a non-adjacent pair x = n-1, y = n.

    The clique splits into A = 1..a (adjacent to both x and y), then
    A_x = a+1..a+b (missing x, adjacent to y), then A_y = a+b+1..n-2
    (missing y, adjacent to x). Exactly the a vertices of A end up
    universal, and d(x)+d(y) = 2a+b+c = a+n-2.
    """
    if n % 2 == 0 or n < 5:
        raise ValueError(f"family v needs odd n >= 5, got {n}")
    if min(a, b, c) < 0 or a + b + c != n - 2:
        raise ValueError(f"family v needs a+b+c = n-2 with a,b,c >= 0, got {(a, b, c)}")
    if a + c < 1 or a + b < 1:
        raise ValueError(f"family v needs a+c >= 1 and a+b >= 1, got {(a, b, c)}")
    x, y = n - 1, n
    edges = [(u, v) for u in range(1, n - 1) for v in range(u + 1, n - 1)]
    edges.extend((u, x) for u in range(1, a + 1))
    edges.extend((u, x) for u in range(a + b + 1, n - 1))
    edges.extend((u, y) for u in range(1, a + b + 1))
    return Graph.from_edges(n, edges)


def gen_random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    """Erdos-Renyi style graph, deterministic per seed."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {edge_probability}")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < edge_probability
    ]
    return Graph.from_edges(n, edges)


def gen_random_split(n: int, clique_size: int, attach_probability: float, seed: int) -> Graph:
    """Random split graph: clique 1..clique_size, independent rest, random
    crossing edges with forced minimum attachments so that every clique
    vertex has an independent neighbor and no vertex is isolated.
    """
    if not 1 <= clique_size <= n - 1:
        raise ValueError(f"clique size must be in 1..n-1, got {clique_size} for n={n}")
    if not 0.0 <= attach_probability <= 1.0:
        raise ValueError(f"attach probability must be in [0, 1], got {attach_probability}")
    rng = random.Random(seed)
    ks = range(1, clique_size + 1)
    others = range(clique_size + 1, n + 1)
    edges = [(u, v) for u in ks for v in ks if u < v]
    crossing: set[tuple[int, int]] = set()
    for i in others:
        hits = [k for k in ks if rng.random() < attach_probability]
        if not hits:
            hits = [rng.choice(list(ks))]
        crossing.update((k, i) for k in hits)
    for k in ks:
        if not any((k, i) in crossing for i in others):
            crossing.add((k, rng.choice(list(others))))
    edges.extend(sorted(crossing))
    return Graph.from_edges(n, edges)


def mutate_edge(g: Graph, seed: int) -> Graph:
    """Flip one uniformly chosen vertex pair: add the edge if absent, remove
    it if present. Deterministic per seed; flipping twice with the same seed
    restores the original graph. May create isolated vertices.
    """
    if g.n < 2:
        raise ValueError(f"mutation needs n >= 2, got {g.n}")
    rng = random.Random(seed)
    u = rng.randrange(1, g.n + 1)
    v = rng.randrange(1, g.n)
    if v >= u:
        v += 1
    if u > v:
        u, v = v, u
    edges = set(g.edges())
    if (u, v) in edges:
        edges.discard((u, v))
    else:
        edges.add((u, v))
    return Graph.from_edges(g.n, sorted(edges))
