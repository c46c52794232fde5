"""Drivers that compare the linear-time recognizer against the brute-force oracles.

Each driver returns a report dataclass whose JSON form is byte-stable:
aggregation over work chunks is order-independent (sums plus a minimum over
offending-graph serializations), so running with any number of worker
processes yields the identical report.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .families import FamilySpec, gen_random_graph, mutate_edge
from .graph import Graph, compute_degree_stats, serialize_graph, strip_isolated
from .matchings import is_equimatchable_oracle, max_independent_crossing_edges
from .recognition import decide
from .split import find_near_star_pair, is_split_oracle, normalize_partition, split_partition

EXHAUSTIVE_MAX_N = 7
RANDOM_N_VALUES = (7, 8, 9, 10, 11, 12)
RANDOM_DENSITIES = (0.3, 0.45, 0.6, 0.75, 0.85)
_CHUNK = 65536


@dataclass(frozen=True)
class CheckReport:
    """Aggregate outcome of one recognizer-versus-oracles run."""

    mode: str
    n: int | None
    count: int
    skipped_isolated: int
    disagreements: int
    first_disagreement: str | None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @property
    def ok(self) -> bool:
        return self.disagreements == 0


def check_graph(g: Graph) -> str | None:
    """None when the recognizer agrees with the two oracles on g, else a description."""
    result = decide(g)
    split_ok = is_split_oracle(g)
    equi_ok = split_ok and is_equimatchable_oracle(g)
    if result.is_yes == (split_ok and equi_ok):
        return None
    return json.dumps(
        {
            "graph": serialize_graph(g),
            "recognize": result.verdict,
            "condition": result.condition,
            "reason": result.reason,
            "split_oracle": split_ok,
            "equimatchable_oracle": equi_ok if split_ok else None,
        },
        sort_keys=True,
    )


def _pair_table(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """The labeled graph on n vertices whose edge set is the given bitmask
    over the lexicographic pair table (1,2), (1,3), ..., (n-1,n)."""
    return _build_from_mask(n, mask, _pair_table(n))


def _build_from_mask(n: int, mask: int, pairs: list[tuple[int, int]]) -> Graph:
    lists: list[list[int]] = [[] for _ in range(n + 1)]
    m = 0
    mm = mask
    while mm:
        bit = mm & -mm
        mm ^= bit
        u, v = pairs[bit.bit_length() - 1]
        lists[u].append(v)
        lists[v].append(u)
        m += 1
    # lexicographic pair order keeps every list sorted as built
    return Graph(
        n=n, m=m, adj=tuple(map(tuple, lists)), degrees=tuple(map(len, lists))
    )


def _incidence_masks(n: int, pairs: list[tuple[int, int]]) -> list[int]:
    inc = [0] * (n + 1)
    for i, (u, v) in enumerate(pairs):
        inc[u] |= 1 << i
        inc[v] |= 1 << i
    return inc


def _exhaustive_chunk(args: tuple[int, int, int]) -> tuple[int, int, int, str | None]:
    n, lo, hi = args
    pairs = _pair_table(n)
    inc = _incidence_masks(n, pairs)
    checked = skipped = bad = 0
    first: str | None = None
    for mask in range(lo, hi):
        if any(mask & inc[v] == 0 for v in range(1, n + 1)):
            skipped += 1
            continue
        g = _build_from_mask(n, mask, pairs)
        checked += 1
        failure = check_graph(g)
        if failure is not None:
            bad += 1
            if first is None or failure < first:
                first = failure
    return checked, skipped, bad, first


def _run_chunks(
    worker: Callable, chunk_args: list, workers: int
) -> Iterator:
    if workers <= 1:
        yield from map(worker, chunk_args)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            yield from pool.map(worker, chunk_args)


def check_exhaustive(n: int, workers: int = 1) -> CheckReport:
    """Check every labeled graph on n vertices (isolated-vertex graphs are
    counted and skipped). Exponential in n(n-1)/2; capped at n = 7."""
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive check supports 1 <= n <= {EXHAUSTIVE_MAX_N}, got {n}")
    total = 1 << (n * (n - 1) // 2)
    chunks = [(n, lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
    checked = skipped = bad = 0
    first: str | None = None
    for c_checked, c_skipped, c_bad, c_first in _run_chunks(_exhaustive_chunk, chunks, workers):
        checked += c_checked
        skipped += c_skipped
        bad += c_bad
        if c_first is not None and (first is None or c_first < first):
            first = c_first
    return CheckReport("exhaustive", n, checked, skipped, bad, first)


def _random_graph_for_index(index: int, seed: int) -> tuple[Graph, int]:
    """Deterministic isolated-free graph for slot ``index``: first hit in a
    per-slot seed sequence. Returns the graph and the number of rejected
    isolated-vertex attempts."""
    n = RANDOM_N_VALUES[index % len(RANDOM_N_VALUES)]
    p = RANDOM_DENSITIES[(index // len(RANDOM_N_VALUES)) % len(RANDOM_DENSITIES)]
    attempts = 0
    while True:
        sub_seed = (seed * 10_000_019 + index) * 1_000 + attempts
        g = gen_random_graph(n, p, sub_seed)
        if not g.has_isolated_vertex():
            return g, attempts
        attempts += 1


def _random_chunk(args: tuple[int, int, int]) -> tuple[int, int, int, str | None]:
    lo, hi, seed = args
    checked = skipped = bad = 0
    first: str | None = None
    for index in range(lo, hi):
        g, attempts = _random_graph_for_index(index, seed)
        skipped += attempts
        checked += 1
        failure = check_graph(g)
        if failure is not None:
            bad += 1
            if first is None or failure < first:
                first = failure
    return checked, skipped, bad, first


def check_random(count: int, seed: int, workers: int = 1) -> CheckReport:
    """Check ``count`` seeded random graphs cycling through n in 7..12 and a
    fixed density mix; graphs with isolated vertices are regenerated (and
    counted as skipped attempts)."""
    if count < 0:
        raise ValueError("count must be non-negative")
    step = 4096
    chunks = [(lo, min(lo + step, count), seed) for lo in range(0, count, step)]
    checked = skipped = bad = 0
    first: str | None = None
    for c_checked, c_skipped, c_bad, c_first in _run_chunks(_random_chunk, chunks, workers):
        checked += c_checked
        skipped += c_skipped
        bad += c_bad
        if c_first is not None and (first is None or c_first < first):
            first = c_first
    return CheckReport("random", None, checked, skipped, bad, first)


def check_files(graphs: Iterable[tuple[str, Graph]]) -> CheckReport:
    """Check explicitly provided graphs (path label, graph) pairs."""
    checked = bad = 0
    first: str | None = None
    for _, g in graphs:
        checked += 1
        failure = check_graph(g)
        if failure is not None:
            bad += 1
            if first is None or failure < first:
                first = failure
    return CheckReport("files", None, checked, 0, bad, first)


# ---------------------------------------------------------------------------
# structural-property scan over every small equimatchable split graph


@dataclass(frozen=True)
class LemmaReport:
    """Structural invariants checked over all certified equimatchable split
    graphs on n vertices (exhaustive over labeled graphs).

    Violation counters cover, in order: odd clique size whenever both sides
    have >= 2 vertices; at most two pairwise disjoint clique-to-independent
    edges; the near-star pair existing whenever the independent side has
    >= 3 vertices; the degree identity d(v1)+d(v2) = p+n-2 whenever
    2 <= d(v2) <= n-2; and agreement of the linear-time split test with the
    exhaustive split oracle on every scanned graph.
    """

    n: int
    graphs_scanned: int
    skipped_isolated: int
    certified: int
    clique_parity_violations: int
    crossing_bound_violations: int
    near_star_violations: int
    degree_sum_violations: int
    split_test_mismatches: int
    first_violation: str | None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @property
    def ok(self) -> bool:
        return (
            self.clique_parity_violations
            + self.crossing_bound_violations
            + self.near_star_violations
            + self.degree_sum_violations
            + self.split_test_mismatches
            == 0
        )


def _lemma_chunk(args: tuple[int, int, int]) -> tuple:
    n, lo, hi = args
    pairs = _pair_table(n)
    inc = _incidence_masks(n, pairs)
    scanned = skipped = certified = 0
    parity = crossing = near_star = degree_sum = split_mismatch = 0
    first: str | None = None

    def note(kind: str, g: Graph) -> None:
        nonlocal first
        record = json.dumps({"check": kind, "graph": serialize_graph(g)}, sort_keys=True)
        if first is None or record < first:
            first = record

    for mask in range(lo, hi):
        if any(mask & inc[v] == 0 for v in range(1, n + 1)):
            skipped += 1
            continue
        g = _build_from_mask(n, mask, pairs)
        scanned += 1
        sp = split_partition(g)
        if (sp is not None) != is_split_oracle(g):
            split_mismatch += 1
            note("split-test-vs-oracle", g)
            continue
        if sp is None or not is_equimatchable_oracle(g):
            continue
        certified += 1
        spn = normalize_partition(g, sp)
        k_size, i_size = len(spn.clique), len(spn.independent)
        if k_size >= 2 and i_size >= 2 and k_size % 2 == 0:
            parity += 1
            note("clique-size-parity", g)
        if max_independent_crossing_edges(g, spn) > 2:
            crossing += 1
            note("crossing-bound", g)
        if k_size >= 2 and i_size >= 3 and find_near_star_pair(g, spn) is None:
            near_star += 1
            note("near-star-pair", g)
        stats = compute_degree_stats(g)
        d1 = g.degrees[stats.ordering[0]]
        d2 = g.degrees[stats.ordering[1]]
        if 2 <= d2 <= n - 2 and d1 + d2 != stats.p + n - 2:
            degree_sum += 1
            note("degree-sum-identity", g)
    return (scanned, skipped, certified, parity, crossing, near_star, degree_sum, split_mismatch, first)


def lemma_scan(n: int, workers: int = 1) -> LemmaReport:
    """Exhaustively scan labeled graphs on n vertices (4 <= n <= 7) and check
    the structural invariants of equimatchable split graphs."""
    if not 4 <= n <= EXHAUSTIVE_MAX_N:
        raise ValueError(f"lemma scan supports 4 <= n <= {EXHAUSTIVE_MAX_N}, got {n}")
    total = 1 << (n * (n - 1) // 2)
    chunks = [(n, lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
    sums = [0] * 8
    first: str | None = None
    for result in _run_chunks(_lemma_chunk, chunks, workers):
        for i in range(8):
            sums[i] += result[i]
        if result[8] is not None and (first is None or result[8] < first):
            first = result[8]
    return LemmaReport(n, *sums, first)


# ---------------------------------------------------------------------------
# mutation robustness


@dataclass(frozen=True)
class MutationReport:
    """Recognizer-versus-oracles agreement over seeded single-edge mutants of
    the generated family graphs (results stripped of isolated vertices)."""

    mutants: int
    skipped_empty: int
    disagreements: int
    first_disagreement: str | None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @property
    def ok(self) -> bool:
        return self.disagreements == 0


def family_parameterizations(max_n: int, min_n: int = 4) -> list[FamilySpec]:
    """Every valid family parameterization with min_n <= n <= max_n."""
    specs: list[FamilySpec] = []
    for n in range(min_n, max_n + 1):
        specs.append(FamilySpec("i", n))
        specs.append(FamilySpec("ii", n))
        for r in range(2, n - 3):
            if (n - r) % 2 == 0:
                specs.append(FamilySpec("iii", n, r=r))
                specs.append(FamilySpec("iv", n, r=r))
        if n % 2 == 1 and n >= 5:
            for a in range(0, n - 1):
                for b in range(0, n - 1 - a):
                    c = n - 2 - a - b
                    if a + c >= 1 and a + b >= 1:
                        specs.append(FamilySpec("v", n, a=a, b=b, c=c))
    return specs


@dataclass(frozen=True)
class FamilyReport:
    """Soundness of the constructive generators: every valid parameterization
    must be recognized with its own family tag, match the literal
    characterization, be confirmed split + equimatchable by the oracles, and
    (families iii and iv) have maximal-matching size set {(n-r)/2}."""

    instances: int
    failures: int
    first_failure: str | None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @property
    def ok(self) -> bool:
        return self.failures == 0


def _family_instance_failure(spec: FamilySpec) -> str | None:
    from .matchings import maximal_matching_sizes
    from .recognition import check_characterization, recognize

    g = spec.build()
    problems = []
    result = recognize(g)
    if not (result.is_yes and result.condition == spec.family):
        problems.append(f"recognize={result.verdict}/{result.condition}")
    tag = check_characterization(g)
    if tag != spec.family:
        problems.append(f"characterization={tag}")
    if not is_split_oracle(g):
        problems.append("split-oracle=False")
    elif not is_equimatchable_oracle(g):
        problems.append("equimatchable-oracle=False")
    elif spec.family in ("iii", "iv"):
        sizes = maximal_matching_sizes(g)
        expected = (spec.n - (spec.r or 0)) // 2
        if sizes != frozenset({expected}):
            problems.append(f"sizes={sorted(sizes)} expected={{{expected}}}")
    if not problems:
        return None
    return json.dumps({"spec": asdict(spec), "problems": problems}, sort_keys=True)


def _family_chunk(args: tuple[int, int, int]) -> tuple[int, int, str | None]:
    lo, hi, max_n = args
    specs = family_parameterizations(max_n)[lo:hi]
    failures = 0
    first: str | None = None
    for spec in specs:
        failure = _family_instance_failure(spec)
        if failure is not None:
            failures += 1
            if first is None or failure < first:
                first = failure
    return len(specs), failures, first


def family_soundness(max_n: int = 12, workers: int = 1) -> FamilyReport:
    """Check every valid family parameterization with 4 <= n <= max_n."""
    total = len(family_parameterizations(max_n))
    step = 8
    chunks = [(lo, min(lo + step, total), max_n) for lo in range(0, total, step)]
    instances = failures = 0
    first: str | None = None
    for c_count, c_fail, c_first in _run_chunks(_family_chunk, chunks, workers):
        instances += c_count
        failures += c_fail
        if c_first is not None and (first is None or c_first < first):
            first = c_first
    return FamilyReport(instances, failures, first)


def _mutation_chunk(args: tuple[int, int, int, int]) -> tuple[int, int, int, str | None]:
    lo, hi, seed, max_n = args
    bases = [spec.build() for spec in family_parameterizations(max_n)]
    mutants = skipped = bad = 0
    first: str | None = None
    for index in range(lo, hi):
        base = bases[index % len(bases)]
        mutant = mutate_edge(base, seed + index)
        stripped, _ = strip_isolated(mutant)
        if stripped.n == 0:
            skipped += 1
            continue
        mutants += 1
        failure = check_graph(stripped)
        if failure is not None:
            bad += 1
            if first is None or failure < first:
                first = failure
    return mutants, skipped, bad, first


def mutation_check(count: int, seed: int, max_n: int = 10, workers: int = 1) -> MutationReport:
    """Mutate one edge of each family graph (cycling through all valid
    parameterizations up to max_n), strip isolated vertices, and compare the
    recognizer's verdict against the oracles."""
    step = 256
    chunks = [(lo, min(lo + step, count), seed, max_n) for lo in range(0, count, step)]
    mutants = skipped = bad = 0
    first: str | None = None
    for c_mut, c_skip, c_bad, c_first in _run_chunks(_mutation_chunk, chunks, workers):
        mutants += c_mut
        skipped += c_skip
        bad += c_bad
        if c_first is not None and (first is None or c_first < first):
            first = c_first
    return MutationReport(mutants, skipped, bad, first)
