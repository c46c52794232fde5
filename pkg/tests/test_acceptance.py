"""Acceptance suite: each criterion prints one PASS/FAIL line (run with -s).

The expensive reports are computed once per session with two worker
processes; the determinism criterion recomputes them with one worker and
requires byte-identical JSON. Frozen counts are derived independently:
labeled isolated-free graph totals are 41 / 768 / 27449 / 1887284 for
n = 4..7, and the certified equimatchable split totals 5 / 186 / 247 / 4761
follow from counting labeled members of the five families directly
(1 complete graph, n stars, and dedup-counted pendant and near-complete
shapes).
"""

import time

import pytest

from equisplit.bench import ratio_spread, run_bench
from equisplit.matchings import find_witness_matchings
from equisplit.families import mutate_edge
from equisplit.graph import strip_isolated
from equisplit.verify import (
    check_exhaustive,
    check_random,
    family_parameterizations,
    family_soundness,
    lemma_scan,
    mutation_check,
)

SEED = 20260810
WORKERS_MAIN = 2
WORKERS_ALT = 1

ISOLATED_FREE_COUNTS = {4: 41, 5: 768, 6: 27449, 7: 1887284}
CERTIFIED_COUNTS = {4: 5, 5: 186, 6: 247, 7: 4761}


def _emit(num: int, label: str, ok: bool, detail: str) -> None:
    print(f"[criterion {num}] {label}: {'PASS' if ok else 'FAIL'} — {detail}")


@pytest.fixture(scope="module")
def exhaustive_n6():
    return check_exhaustive(6, workers=WORKERS_MAIN)


@pytest.fixture(scope="module")
def random_100k():
    t0 = time.perf_counter()
    report = check_random(100_000, seed=SEED, workers=WORKERS_MAIN)
    return report, time.perf_counter() - t0


@pytest.fixture(scope="module")
def families_n12():
    return family_soundness(12, workers=WORKERS_MAIN)


@pytest.fixture(scope="module")
def lemma_reports():
    return {n: lemma_scan(n, workers=WORKERS_MAIN) for n in range(4, 8)}


@pytest.fixture(scope="module")
def mutants_1000():
    return mutation_check(1000, seed=SEED, max_n=10, workers=WORKERS_MAIN)


def test_criterion_1_oracle_equivalence_exhaustive(exhaustive_n6):
    t0 = time.perf_counter()
    report = exhaustive_n6
    elapsed = time.perf_counter() - t0
    total = report.count + report.skipped_isolated
    ok = report.ok and total == 2**15 and report.count == ISOLATED_FREE_COUNTS[6]
    _emit(
        1,
        "oracle equivalence, exhaustive n=6",
        ok,
        f"{report.count} checked, {report.skipped_isolated} isolated skipped, "
        f"{report.disagreements} disagreements",
    )
    assert report.disagreements == 0, report.first_disagreement
    assert total == 2**15
    assert report.count == ISOLATED_FREE_COUNTS[6]
    assert elapsed < 120


def test_criterion_2_oracle_equivalence_random(random_100k):
    report, elapsed = random_100k
    ok = report.ok and report.count == 100_000 and elapsed < 300
    _emit(
        2,
        "oracle equivalence, 1e5 random graphs n in 7..12",
        ok,
        f"{report.count} checked, {report.skipped_isolated} regenerated, "
        f"{report.disagreements} disagreements, {elapsed:.1f}s",
    )
    assert report.disagreements == 0, report.first_disagreement
    assert report.count == 100_000
    assert elapsed < 300


def test_criterion_3_generator_soundness(families_n12):
    report = families_n12
    expected_instances = len(family_parameterizations(12))
    ok = report.ok and report.instances == expected_instances
    _emit(
        3,
        "generator soundness, all family parameterizations n<=12",
        ok,
        f"{report.instances} instances, {report.failures} failures",
    )
    assert report.failures == 0, report.first_failure
    assert report.instances == expected_instances == 164


def test_criterion_4_structural_invariants(lemma_reports):
    violations = 0
    certified = 0
    for n, report in sorted(lemma_reports.items()):
        assert report.graphs_scanned == ISOLATED_FREE_COUNTS[n], n
        assert report.certified == CERTIFIED_COUNTS[n], n
        certified += report.certified
        violations += (
            report.clique_parity_violations
            + report.crossing_bound_violations
            + report.near_star_violations
            + report.degree_sum_violations
            + report.split_test_mismatches
        )
    ok = violations == 0
    _emit(
        4,
        "structural invariants on all equimatchable split graphs n<=7",
        ok,
        f"{certified} certified graphs, {violations} violations "
        "(clique parity, crossing bound, near-star pair, degree-sum identity, split-test agreement)",
    )
    for n, report in sorted(lemma_reports.items()):
        assert report.ok, (n, report.first_violation)


def test_criterion_5_linear_scaling():
    rows_iii = run_bench("iii", [10**3, 10**4, 10**5, 10**6], repeats=3)
    rows_i = run_bench("i", [500, 1000, 2000], repeats=3)
    spread = ratio_spread(rows_iii + rows_i)
    k2000_recognize = rows_i[-1].recognize_s
    ok = spread < 3.0 and k2000_recognize < 1.0
    _emit(
        5,
        "linear scaling of ingest+decide",
        ok,
        f"per-(n+m) spread {spread:.2f}x across 7 sizes "
        f"(iii {ratio_spread(rows_iii):.2f}x, i {ratio_spread(rows_i):.2f}x); "
        f"K2000 recognized in {k2000_recognize * 1e3:.2f} ms",
    )
    assert spread < 3.0
    assert k2000_recognize < 1.0


def test_criterion_6_mutation_robustness(mutants_1000):
    report = mutants_1000
    ok = report.ok and report.mutants + report.skipped_empty == 1000
    _emit(
        6,
        "mutation robustness, 1000 seeded single-edge mutants n<=10",
        ok,
        f"{report.mutants} mutants checked, {report.skipped_empty} skipped empty, "
        f"{report.disagreements} disagreements",
    )
    assert report.disagreements == 0, report.first_disagreement
    assert report.mutants + report.skipped_empty == 1000


def test_criterion_7_worker_determinism(
    exhaustive_n6, random_100k, families_n12, lemma_reports, mutants_1000
):
    """Re-run every report-producing check with a different worker count and
    require byte-identical JSON. Timing reports (criterion 5) are excluded:
    wall-clock values are inherently non-deterministic; their acceptance
    thresholds are asserted in criterion 5 itself."""
    mismatches = []
    pairs = [
        ("exhaustive-n6", exhaustive_n6.to_json(), check_exhaustive(6, workers=WORKERS_ALT).to_json()),
        (
            "random-100k",
            random_100k[0].to_json(),
            check_random(100_000, seed=SEED, workers=WORKERS_ALT).to_json(),
        ),
        ("families-n12", families_n12.to_json(), family_soundness(12, workers=WORKERS_ALT).to_json()),
        (
            "mutants-1000",
            mutants_1000.to_json(),
            mutation_check(1000, seed=SEED, max_n=10, workers=WORKERS_ALT).to_json(),
        ),
    ]
    for n, report in sorted(lemma_reports.items()):
        pairs.append((f"lemma-n{n}", report.to_json(), lemma_scan(n, workers=WORKERS_ALT).to_json()))
    for name, first, second in pairs:
        if first != second:
            mismatches.append(name)

    # witness extraction twice over a seeded mutant batch must be identical too
    base_specs = family_parameterizations(8)
    witness_runs = []
    for _ in range(2):
        out = []
        for index, spec in enumerate(base_specs):
            mutant, _ = strip_isolated(mutate_edge(spec.build(), SEED + index))
            if mutant.n == 0 or mutant.has_isolated_vertex():
                continue
            pair = find_witness_matchings(mutant)
            if pair is not None:
                out.append((pair[0].canonical(), pair[1].canonical()))
        witness_runs.append(out)
    if witness_runs[0] != witness_runs[1]:
        mismatches.append("witnesses")

    ok = not mismatches
    _emit(
        7,
        "byte-identical reports and witnesses across worker counts",
        ok,
        f"{len(pairs)} reports compared at workers={WORKERS_MAIN} vs {WORKERS_ALT}, "
        f"{len(witness_runs[0])} witness pairs compared twice"
        + (f"; mismatches: {mismatches}" if mismatches else ""),
    )
    assert not mismatches
