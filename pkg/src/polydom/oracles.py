"""Brute-force ground truth: domination checkers, exhaustive minimum
(paired-)dominating sets and a Hamiltonian path search on small digraphs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .geom_model import ParseError, UndirectedGraph, _content_lines, _ints
from .matching import has_perfect_matching

DEFAULT_SET_CAP = 24
DEFAULT_PATH_CAP = 12


class CapExceededError(ValueError):
    """Instance is larger than the configured brute-force cap."""


@dataclass(frozen=True)
class Digraph:
    """Directed graph on vertices ``1..n``; the path runs from 1 to n."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 1:
            raise ValueError("digraph needs at least one vertex")
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edge")
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u}, {v}) outside 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def successors(self, v: int) -> list[int]:
        return sorted(w for u, w in self.edges if u == v)

    def is_hamiltonian_path(self, path: Sequence[int]) -> bool:
        if len(path) != self.n or sorted(path) != list(range(1, self.n + 1)):
            return False
        if path[0] != 1 or path[-1] != self.n:
            return False
        edge_set = set(self.edges)
        return all((a, b) in edge_set for a, b in zip(path, path[1:]))


def is_dominating_set(g: UndirectedGraph, d: Iterable[int]) -> bool:
    covered = 0
    for v in d:
        covered |= g.closed_masks[v]
    return covered == (1 << g.n) - 1


def is_paired_dominating_set(g: UndirectedGraph, d: Iterable[int]) -> bool:
    d = set(d)
    return is_dominating_set(g, d) and has_perfect_matching(g, d)


def _check_cap(g: UndirectedGraph, cap: int) -> None:
    if g.n > cap:
        raise CapExceededError(f"graph has {g.n} vertices, brute-force cap is {cap}")


def min_dominating_set_bruteforce(g: UndirectedGraph, cap: int = DEFAULT_SET_CAP) -> frozenset[int]:
    """Minimum dominating set; lexicographically smallest among minima."""
    _check_cap(g, cap)
    full = (1 << g.n) - 1
    masks = g.closed_masks
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            covered = 0
            for v in combo:
                covered |= masks[v]
            if covered == full:
                return frozenset(combo)
    raise AssertionError("unreachable: V dominates itself")  # pragma: no cover


def min_paired_dominating_set_bruteforce(
    g: UndirectedGraph, cap: int = DEFAULT_SET_CAP
) -> frozenset[int] | None:
    """Minimum paired-dominating set, or None when G has an isolated vertex."""
    _check_cap(g, cap)
    if any(not g.adj[v] for v in range(g.n)):
        return None
    full = (1 << g.n) - 1
    masks = g.closed_masks
    for size in range(0, g.n + 1, 2):
        for combo in combinations(range(g.n), size):
            covered = 0
            for v in combo:
                covered |= masks[v]
            if covered == full and has_perfect_matching(g, combo):
                return frozenset(combo)
    # only reachable when n is odd and every even set fails, impossible without isolated vertices
    return None  # pragma: no cover


def hamiltonian_path(d: Digraph, cap: int = DEFAULT_PATH_CAP) -> tuple[int, ...] | None:
    """First v_1 -> v_n Hamiltonian path in lexicographic DFS order, or None."""
    if d.n > cap:
        raise CapExceededError(f"digraph has {d.n} vertices, path-search cap is {cap}")
    succ = {v: d.successors(v) for v in range(1, d.n + 1)}
    if d.n == 1:
        return (1,)
    path = [1]
    visited = {1}

    def extend() -> bool:
        if len(path) == d.n:
            return path[-1] == d.n
        for w in succ[path[-1]]:
            if w in visited or (w == d.n and len(path) != d.n - 1):
                continue
            path.append(w)
            visited.add(w)
            if extend():
                return True
            path.pop()
            visited.discard(w)
        return False

    return tuple(path) if extend() else None


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v and rng.random() < p]
    return Digraph(n, tuple(edges))


def parse_digraph(text: str) -> Digraph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty digraph file")
    lineno, header = lines[0]
    if " ".join(header) != "digraph v1":
        raise ParseError(f"unknown header {' '.join(header)!r}", lineno)
    if len(lines) < 2:
        raise ParseError("missing size line", lineno)
    lineno, toks = lines[1]
    n, m = _ints(toks, lineno, 2)
    if n < 1 or m < 0:
        raise ParseError("need n >= 1 and m >= 0", lineno)
    body = lines[2:]
    if len(body) != m:
        last = body[-1][0] if body else lineno
        raise ParseError(f"expected {m} edge lines, got {len(body)}", last)
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, toks in body:
        u, v = _ints(toks, lineno, 2)
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex outside 1..{n}", lineno)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
        edges.append((u, v))
    return Digraph(n, tuple(edges))


def serialize_digraph(d: Digraph) -> str:
    lines = ["digraph v1", f"{d.n} {d.m}"]
    lines.extend(f"{u} {v}" for u, v in d.edges)
    return "\n".join(lines) + "\n"
