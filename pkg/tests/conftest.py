from __future__ import annotations

import random
from itertools import combinations

import pytest

from polydom.geom_model import ChordModel, UndirectedGraph, chords_intersect

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter) -> None:
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def quadratic_undominated(model: ChordModel, chords) -> frozenset[int]:
    """J - N[chords] by testing every chord against every chord of the set."""
    chords = set(chords)
    out = set()
    for x in range(model.m):
        if x in chords:
            continue
        if not any(chords_intersect(model.chords[x], model.chords[y]) for y in chords):
            out.add(x)
    return frozenset(out)


def random_graph(n: int, p: float, rng: random.Random) -> UndirectedGraph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return UndirectedGraph.from_edges(n, edges)


def exhaustive_matching_number(g: UndirectedGraph) -> int:
    edges = g.edges()
    best = 0

    def grow(start: int, used: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (g.n - bin(used).count("1")) // 2 <= best:
            return
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            if not (used >> u & 1 or used >> v & 1):
                grow(idx + 1, used | 1 << u | 1 << v, size + 1)

    grow(0, 0, 0)
    return best


def random_maximal_matching_set(g: UndirectedGraph, rng: random.Random) -> frozenset[int]:
    """Vertices of a random maximal matching: paired-dominating when G has no isolated vertex."""
    edges = g.edges()
    rng.shuffle(edges)
    used: set[int] = set()
    for u, v in edges:
        if u not in used and v not in used:
            used.update((u, v))
    return frozenset(used)


def random_dominating_set(g: UndirectedGraph, rng: random.Random, p: float = 0.2) -> frozenset[int]:
    d = {v for v in range(g.n) if rng.random() < p}
    covered = set()
    for v in d:
        covered |= set(g.adj[v]) | {v}
    rest = [v for v in range(g.n) if v not in covered]
    rng.shuffle(rest)
    for v in rest:
        if v not in covered:
            d.add(v)
            covered |= set(g.adj[v]) | {v}
    return frozenset(d)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)
