"""Acceptance criteria 1-8. Each test records one PASS/FAIL line, shown in the
pytest terminal summary; ``python tests/test_acceptance.py`` prints the same lines.
"""

from __future__ import annotations

import random
import sys
import time
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import (  # noqa: E402
    ACCEPTANCE_LINES,
    exhaustive_matching_number,
    quadratic_undominated,
    random_dominating_set,
    random_graph,
    random_maximal_matching_set,
)
from polydom.fixtures import MIN_DOMINATING, MIN_PAIRED_DOMINATING, example_graph, example_polygon  # noqa: E402
from polydom.geom_model import random_polygon_model  # noqa: E402
from polydom.matching import (  # noqa: E402
    InfeasibleError,
    has_perfect_matching,
    is_matching,
    max_matching,
    min_augmentation,
    perfect_matching,
)
from polydom.oracles import (  # noqa: E402
    Digraph,
    hamiltonian_path,
    is_dominating_set,
    is_paired_dominating_set,
    min_dominating_set_bruteforce,
    min_paired_dominating_set_bruteforce,
    random_digraph,
)
from polydom.polygon_solver import (  # noqa: E402
    inner_boundary_of,
    interval_chords,
    model_pairs,
    outer_boundary_of,
    solve_min_ds_polygon,
    solve_min_pds_polygon,
    undominated_after_boundaries,
    undominated_after_outer,
)
from polydom.reduction import (  # noqa: E402
    TYPES,
    WitnessError,
    build_reduction,
    chord_type,
    ham_path_from_pds,
    pds_from_ham_path,
    validate_reduction,
)


def record(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


# ---------------------------------------------------------------------------
# shared samples

def polygon_family() -> list[tuple[int, int, int]]:
    """(k, m, seed) for 216 models: k in {3,4,5}, m in 1..12, six seeds each."""
    return [(k, m, 1000 * k + 100 * m + s) for k in (3, 4, 5) for m in range(1, 13) for s in range(6)]


def digraph_sample() -> list[Digraph]:
    out = []
    for n in (2, 3):
        arcs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
        for r in range(len(arcs) + 1):
            out.extend(Digraph(n, es) for es in combinations(arcs, r))
    out.extend(random_digraph(4 + s % 2, 0.5, s) for s in range(100))
    return out


# ---------------------------------------------------------------------------
# criteria

def check_figure() -> tuple[bool, str]:
    model = example_polygon()
    g = model.graph
    start = time.perf_counter()
    ds = solve_min_ds_polygon(model)
    pds = solve_min_pds_polygon(model)
    elapsed = time.perf_counter() - start
    caption_ok = (
        is_dominating_set(g, example_graph().ids(MIN_DOMINATING))
        and is_paired_dominating_set(g, example_graph().ids(MIN_PAIRED_DOMINATING))
    )
    ok = len(ds) == 2 and len(pds) == 4 and elapsed < 1.0 and caption_ok
    return ok, f"DS size {len(ds)} (want 2), PDS size {len(pds)} (want 4), {elapsed:.3f}s (< 1s)"


def check_oracle_equivalence() -> tuple[tuple[bool, str], tuple[bool, str]]:
    ds_bad, pds_bad, infeasible, feasible = [], [], 0, 0
    start = time.perf_counter()
    for k, m, seed in polygon_family():
        model = random_polygon_model(k, m, seed)
        g = model.graph
        ds = solve_min_ds_polygon(model)
        if not is_dominating_set(g, ds) or len(ds) != len(min_dominating_set_bruteforce(g)):
            ds_bad.append((k, m, seed))
        pds = solve_min_pds_polygon(model)
        want = min_paired_dominating_set_bruteforce(g)
        if want is None:
            infeasible += 1
            if pds is not None:
                pds_bad.append((k, m, seed))
        else:
            feasible += 1
            if pds is None or len(pds) != len(want) or not is_paired_dominating_set(g, pds):
                pds_bad.append((k, m, seed))
    elapsed = time.perf_counter() - start
    n = len(polygon_family())
    in_time = elapsed < 600
    c2 = (not ds_bad and in_time, f"{n} models, {len(ds_bad)} size mismatches, {elapsed:.1f}s total (< 600s)")
    c3 = (
        not pds_bad and in_time,
        f"{feasible} feasible + {infeasible} infeasible models, {len(pds_bad)} mismatches",
    )
    return c2, c3


def check_undominated_regions() -> tuple[bool, str]:
    outer_samples = inner_samples = 0
    failures = []
    for seed in range(400):
        rng = random.Random(seed)
        model = random_polygon_model(rng.choice([3, 4, 5]), rng.randint(2, 14), 7000 + seed)
        g = model.graph
        d = random_dominating_set(g, rng)
        o = outer_boundary_of(model, d)
        report = undominated_after_outer(model, o)
        outer_samples += 1
        if report.chords() != quadratic_undominated(model, o.outer_chords()):
            failures.append(("outer-set", seed))
        for pg in model_pairs(model):
            region = report[pg.pair]
            if interval_chords(model, region) != region.chords:
                failures.append(("outer-interval", seed))
            others = {c for c in d if c not in pg.chords}
            if any(g.closed_masks[x] & sum(1 << c for c in others) for x in region.chords):
                failures.append(("locality", seed))
        if any(not g.adj[v] for v in range(g.n)):
            continue
        p = random_maximal_matching_set(g, rng)
        o = outer_boundary_of(model, p)
        i = inner_boundary_of(model, p, perfect_matching(g, p), o)
        after_outer = undominated_after_outer(model, o)
        report = undominated_after_boundaries(model, o, i)
        inner_samples += 1
        if report.chords() != quadratic_undominated(model, o.outer_chords() | i.inner_chords()):
            failures.append(("inner-set", seed))
        for pair, region in report.regions.items():
            if interval_chords(model, region) != region.chords:
                failures.append(("inner-interval", seed))
            if region.chords and not after_outer[pair].chords:
                failures.append(("empty-implies-empty", seed))
    ok = not failures and outer_samples + inner_samples >= 500
    return ok, (
        f"{outer_samples} outer + {inner_samples} inner boundary samples, "
        f"{len(failures)} disagreements with the quadratic computation or interval form"
    )


def check_reduction_counts() -> tuple[bool, bool, str]:
    """(structure ok, literal total ok, detail)."""
    structure_ok, literal_ok = True, True
    first_gap = None
    sample = digraph_sample()
    for d in sample:
        art = build_reduction(d)
        counts = art.type_counts()
        n, m = d.n, d.m
        stated = {"l": n * n - 1, "r": n * n - 1, "c": n * n, "e": n * m, "f": n - 1, "f'": n - 1,
                  "b": n * n, "b'": n * n, "a": n, "a'": n}
        built_e = (n - 1) * m
        if counts != {**stated, "e": built_e} or not validate_reduction(art).ok:
            structure_ok = False
        if art.model.m != 5 * n * n + 4 * n - 4 + n * m or counts != stated:
            literal_ok = False
            if first_gap is None and m:
                first_gap = (n, m, art.model.m, 5 * n * n + 4 * n - 4 + n * m)
    detail = f"{len(sample)} digraphs; validate_reduction passes on all: {structure_ok}; "
    if first_gap:
        n, m, got, want = first_gap
        detail += (
            f"stated total 5n^2+4n-4+nm not met (n={n}, m={m}: {got} vs {want}); "
            "edge chords exist only for steps 1..n-1, giving (n-1)m type-e chords"
        )
    else:
        detail += "stated totals met"
    return structure_ok, literal_ok, detail


def check_witness_pipeline() -> tuple[bool, str]:
    with_path = bad = 0
    for d in digraph_sample():
        path = hamiltonian_path(d)
        if path is None:
            continue
        with_path += 1
        art = build_reduction(d)
        s = pds_from_ham_path(art, path)
        ok = len(s) == art.target and is_paired_dominating_set(art.model.graph, s)
        try:
            back = ham_path_from_pds(art, s)
            ok = ok and back == path and d.is_hamiltonian_path(back)
        except WitnessError:
            ok = False
        bad += not ok
    return bad == 0 and with_path > 0, f"{with_path} digraphs with a Hamiltonian path, {bad} failures"


def check_mutations() -> tuple[bool, str]:
    tried = survived = 0
    for d in digraph_sample():
        path = hamiltonian_path(d)
        if path is None:
            continue
        art = build_reduction(d)
        s = pds_from_ham_path(art, path)
        rest = set(range(art.model.m)) - s
        mutants = [s - {x} for x in s] + [s | {y} for y in rest]
        mutants += [(s - {x}) | {y} for x in s for y in rest]
        for mutant in mutants:
            tried += 1
            try:
                ham_path_from_pds(art, mutant)
            except WitnessError:
                continue
            survived += 1
    detail = (
        f"{tried} single-chord removals/additions/swaps, {survived} accepted; "
        "the full iff is not brute-forced (target 22 of 57 chords at n=3)"
    )
    return survived == 0 and tried > 0, detail


def check_matching_engine() -> tuple[bool, str]:
    mm_bad = 0
    for seed in range(500):
        rng = random.Random(seed)
        g = random_graph(rng.randint(1, 12), rng.choice([0.15, 0.25, 0.4, 0.6]), rng)
        m = max_matching(g)
        if not is_matching(g, m) or len(m) != exhaustive_matching_number(g):
            mm_bad += 1
    aug_bad = aug_n = 0
    for seed in range(200):
        rng = random.Random(seed)
        model = random_polygon_model(rng.choice([3, 4, 5]), rng.randint(3, 13), 9000 + seed)
        g = model.graph
        s = set(rng.sample(range(model.m), rng.randint(1, min(10, model.m - 1))))
        others = [v for v in range(g.n) if v not in s]
        want = next(
            (r for r in range(len(others) + 1) for extra in combinations(others, r)
             if has_perfect_matching(g, s.union(extra))),
            None,
        )
        aug_n += 1
        try:
            psi = min_augmentation(model, s)
        except InfeasibleError:
            aug_bad += want is not None
            continue
        aug_bad += want is None or len(psi) != want or bool(psi & s) or not has_perfect_matching(g, s | psi)
    ok = mm_bad == 0 and aug_bad == 0
    return ok, f"max_matching: 500 graphs, {mm_bad} wrong; min_augmentation: {aug_n} sets (|s| <= 10), {aug_bad} wrong"


# ---------------------------------------------------------------------------
# pytest entry points

_equivalence: list = []


def _equivalence_results():
    if not _equivalence:
        _equivalence.extend(check_oracle_equivalence())
    return _equivalence


def test_criterion_1_figure_regression() -> None:
    ok, detail = check_figure()
    record(1, ok, detail)
    assert ok, detail


def test_criterion_2_domination_equivalence() -> None:
    ok, detail = _equivalence_results()[0]
    record(2, ok, detail)
    assert ok, detail


def test_criterion_3_paired_domination_equivalence() -> None:
    ok, detail = _equivalence_results()[1]
    record(3, ok, detail)
    assert ok, detail


def test_criterion_4_undominated_regions() -> None:
    ok, detail = check_undominated_regions()
    record(4, ok, detail)
    assert ok, detail


def test_criterion_5_reduction_counts() -> None:
    structure_ok, literal_ok, detail = check_reduction_counts()
    record(5, structure_ok and literal_ok, detail)
    assert structure_ok, detail
    if not literal_ok:
        pytest.xfail("stated chord total counts nm edge chords; the construction has (n-1)m")


def test_criterion_6_witness_pipeline() -> None:
    ok, detail = check_witness_pipeline()
    record(6, ok, detail)
    assert ok, detail


def test_criterion_7_mutations_rejected() -> None:
    ok, detail = check_mutations()
    record(7, ok, detail)
    assert ok, detail


def test_criterion_8_matching_engine() -> None:
    ok, detail = check_matching_engine()
    record(8, ok, detail)
    assert ok, detail


def test_all_chord_types_known() -> None:
    art = build_reduction(Digraph(3, ((1, 2), (2, 3))))
    assert {chord_type(x) for x in art.names} == set(TYPES)


if __name__ == "__main__":
    record(1, *check_figure())
    for number, result in zip((2, 3), check_oracle_equivalence()):
        record(number, *result)
    record(4, *check_undominated_regions())
    s_ok, l_ok, detail = check_reduction_counts()
    record(5, s_ok and l_ok, detail)
    record(6, *check_witness_pipeline())
    record(7, *check_mutations())
    record(8, *check_matching_engine())
