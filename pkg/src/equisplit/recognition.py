"""Linear-time test for membership in the equimatchable split graphs.

A graph on n >= 4 vertices without isolated vertices is an equimatchable
split graph exactly when its degree profile matches one of five shapes,
tagged i..v throughout this package:

  i    every vertex is universal (a complete graph).
  ii   one universal vertex, all others pendant (a star).
  iii  one universal vertex, r >= 2 pendants, n-r even, and every remaining
       vertex has degree n-r-1.
  iv   no universal vertex, r >= 2 pendants, n-r even, one vertex x of
       degree n-2 and one vertex y of degree n-r-2 with xy not an edge, and
       every remaining vertex has degree 1 or n-r-1.
  v    n odd, two vertices x, y with d(x)+d(y) = p+n-2 (p = number of
       universal vertices), and every remaining vertex has degree n-1 or n-2.

``recognize`` decides membership in O(n + m) reading only the degree
ordering, the counters p/r/q, and a single adjacency query.
``check_characterization`` tests the five shapes literally (quadratic pair
scans allowed) and is used as an internal cross-check, not the fast path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IsolatedVertexError
from .graph import DegreeStats, Graph, compute_degree_stats
from .matchings import is_equimatchable_oracle
from .split import is_split_oracle

CONDITION_TAGS = ("i", "ii", "iii", "iv", "v")


@dataclass(frozen=True, slots=True)
class ConditionProfile:
    """The distinguished vertex pair of conditions iv and v."""

    x: int
    y: int


@dataclass(frozen=True, slots=True)
class RecognitionResult:
    """Outcome of the recognizer.

    verdict is "YES" or "NO". A YES from the main algorithm carries the
    matched condition tag; a NO carries a machine-readable reason. Results
    for graphs on at most 3 vertices carry the reason "small-case-oracle"
    and no tag. ``profile`` holds the (x, y) pair for conditions iv and v.
    """

    verdict: str
    condition: str | None
    reason: str | None
    stats: DegreeStats
    profile: ConditionProfile | None = None

    def __post_init__(self):
        if self.verdict not in ("YES", "NO"):
            raise ValueError(f"verdict must be YES or NO, got {self.verdict!r}")
        if self.verdict == "YES" and self.condition is None and self.reason != "small-case-oracle":
            raise ValueError("YES verdict requires a condition tag")
        if self.verdict == "NO" and self.reason is None:
            raise ValueError("NO verdict requires a reason")
        if self.condition is not None and self.condition not in CONDITION_TAGS:
            raise ValueError(f"unknown condition tag {self.condition!r}")

    @property
    def is_yes(self) -> bool:
        return self.verdict == "YES"


def _require_no_isolated(g: Graph) -> None:
    if g.has_isolated_vertex():
        raise IsolatedVertexError(
            "recognition requires a graph without isolated vertices (strip them first)"
        )


def recognize(g: Graph) -> RecognitionResult:
    """Decide in O(n + m) whether g is an equimatchable split graph.

    Requires n >= 4 and no isolated vertices (use ``small_case`` below 4).
    Reads only the non-decreasing degree ordering v1..vn, the counters
    p/r/q, and the one adjacency query v_{r+1} vs v_n.
    """
    n = g.n
    if n < 4:
        raise ValueError(f"recognize requires n >= 4, got {n}; use small_case")
    _require_no_isolated(g)
    stats = compute_degree_stats(g)
    order = stats.ordering
    deg = g.degrees
    p, r, q = stats.p, stats.r, stats.q

    d1, d2 = deg[order[0]], deg[order[1]]
    if d2 == n - 1:
        # second-smallest degree already n-1 forces every degree to be n-1
        return RecognitionResult("YES", "i", None, stats)

    if d2 >= 2:
        if n % 2 == 1 and deg[order[2]] >= n - 2 and d1 + d2 == p + n - 2:
            return RecognitionResult(
                "YES", "v", None, stats, ConditionProfile(x=order[0], y=order[1])
            )
        if n % 2 == 0:
            reason = "dense-branch-even-order"
        elif deg[order[2]] < n - 2:
            reason = "dense-branch-third-degree-low"
        else:
            reason = "dense-branch-degree-sum-mismatch"
        return RecognitionResult("NO", None, reason, stats)

    # d2 == 1: at least two pendant vertices
    assert r >= 2
    if p == 1:
        if r == n - 1:
            return RecognitionResult("YES", "ii", None, stats)
        if (n - r) % 2 == 0 and q == n - r - 1:
            return RecognitionResult("YES", "iii", None, stats)
    if (
        (n - r) % 2 == 0
        and q == n - r - 2  # implies r <= n - 2, so order[r] is in range
        and deg[order[r]] == n - r - 2
        and deg[order[-1]] == n - 2
        and not g.adjacent(order[r], order[-1])
    ):
        assert p == 0, "a universal vertex would force d(v_n) = n-1"
        return RecognitionResult(
            "YES", "iv", None, stats, ConditionProfile(x=order[-1], y=order[r])
        )
    return RecognitionResult("NO", None, "pendant-branch-no-match", stats)


def check_characterization(g: Graph) -> str | None:
    """Test the five degree-profile shapes literally, first match in order i..v.

    Independent of the recognizer's ordering shortcuts: works from the raw
    degree multiset with explicit (possibly quadratic) pair searches for iv
    and v. Returns the tag or None.
    """
    n = g.n
    if n < 4:
        raise ValueError(f"check_characterization requires n >= 4, got {n}")
    _require_no_isolated(g)
    deg = g.degrees
    p = sum(1 for v in range(1, n + 1) if deg[v] == n - 1)
    r = sum(1 for v in range(1, n + 1) if deg[v] == 1)

    if p == n:
        return "i"
    if r == n - 1 and p == 1:
        return "ii"
    if (
        p == 1
        and r >= 2
        and (n - r) % 2 == 0
        and all(deg[v] in (1, n - r - 1, n - 1) for v in range(1, n + 1))
    ):
        return "iii"
    if p == 0 and r >= 2 and (n - r) % 2 == 0 and _condition_iv_pair(g, r) is not None:
        return "iv"
    if n % 2 == 1 and _condition_v_pair(g, p) is not None:
        return "v"
    return None


def _condition_iv_pair(g: Graph, r: int) -> tuple[int, int] | None:
    """The (x, y) pair of condition iv, or None.

    Degrees n-2 and n-r-2 are distinct from each other and from 1 and
    n-r-1 whenever r >= 2 and n-r is even, so the pair is unique if present.
    """
    n, deg = g.n, g.degrees
    xs = [v for v in range(1, n + 1) if deg[v] == n - 2]
    ys = [v for v in range(1, n + 1) if deg[v] == n - r - 2]
    if len(xs) != 1 or len(ys) != 1:
        return None
    x, y = xs[0], ys[0]
    if g.adjacent(x, y):
        return None
    for v in range(1, n + 1):
        if v != x and v != y and deg[v] not in (1, n - r - 1):
            return None
    return (x, y)


def _condition_v_pair(g: Graph, p: int) -> tuple[int, int] | None:
    """The lexicographically first (x, y) with d(x)+d(y) = p+n-2 and every
    other vertex of degree n-1 or n-2, or None."""
    n, deg = g.n, g.degrees
    target = p + n - 2
    offside = [v for v in range(1, n + 1) if deg[v] not in (n - 1, n - 2)]
    if len(offside) > 2:
        return None
    if len(offside) == 2:
        pairs = [(offside[0], offside[1])]
    elif len(offside) == 1:
        w = offside[0]
        pairs = [(min(w, v), max(w, v)) for v in range(1, n + 1) if v != w]
        pairs.sort()
    else:
        pairs = [(x, y) for x in range(1, n + 1) for y in range(x + 1, n + 1)]
    for x, y in pairs:
        if deg[x] + deg[y] == target:
            return (x, y)
    return None


def small_case(g: Graph) -> RecognitionResult:
    """Decide graphs on 1..3 vertices directly from the brute-force oracles."""
    if not (1 <= g.n <= 3):
        raise ValueError(f"small_case handles 1 <= n <= 3, got {g.n}")
    _require_no_isolated(g)
    ok = is_split_oracle(g) and is_equimatchable_oracle(g)
    stats = compute_degree_stats(g)
    return RecognitionResult("YES" if ok else "NO", None, "small-case-oracle", stats)


def decide(g: Graph) -> RecognitionResult:
    """Route to ``small_case`` for n <= 3 and ``recognize`` otherwise."""
    if g.n == 0:
        raise ValueError("cannot decide the empty graph")
    return small_case(g) if g.n <= 3 else recognize(g)
