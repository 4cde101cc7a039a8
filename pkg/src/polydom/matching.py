"""Maximum-cardinality matching on general graphs and the minimum chord
augmentation that makes a chord set perfectly matchable.

``max_matching`` is Edmonds' blossom algorithm in its array form: grow an
alternating BFS forest from one exposed vertex at a time, contract odd cycles
by relabelling their base, and augment along the first path found.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable

from .geom_model import ChordModel, UndirectedGraph

Matching = frozenset[tuple[int, int]]


class InfeasibleError(Exception):
    """No augmentation can make the requested set perfectly matchable."""


def is_matching(g: UndirectedGraph, matching: Iterable[tuple[int, int]]) -> bool:
    used: set[int] = set()
    for u, v in matching:
        if v not in g.adj[u] or u in used or v in used:
            return False
        used.update((u, v))
    return True


def _find_augmenting(adj: list[list[int]], mate: list[int], root: int) -> bool:
    n = len(adj)
    base = list(range(n))
    parent = [-1] * n
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if base[v] == base[u] or mate[v] == u:
                continue
            if u == root or (mate[u] != -1 and parent[mate[u]] != -1):
                # odd cycle: contract the blossom onto its base
                cur = lca(v, u)
                blossom = [False] * n
                mark_path(v, cur, u, blossom)
                mark_path(u, cur, v, blossom)
                for w in range(n):
                    if blossom[base[w]]:
                        base[w] = cur
                        if not used[w]:
                            used[w] = True
                            queue.append(w)
            elif parent[u] == -1:
                parent[u] = v
                if mate[u] == -1:
                    # augment along the alternating path ending at u
                    while u != -1:
                        pv = parent[u]
                        nxt = mate[pv]
                        mate[u] = pv
                        mate[pv] = u
                        u = nxt
                    return True
                used[mate[u]] = True
                queue.append(mate[u])
    return False


def max_matching(g: UndirectedGraph) -> Matching:
    """Maximum-cardinality matching; deterministic for a fixed input."""
    adj = [sorted(g.adj[v]) for v in range(g.n)]
    mate = [-1] * g.n
    # greedy warm start keeps the number of BFS phases small
    for v in range(g.n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1:
                    mate[v], mate[u] = u, v
                    break
    for v in range(g.n):
        if mate[v] == -1:
            _find_augmenting(adj, mate, v)
    return frozenset((v, mate[v]) for v in range(g.n) if v < mate[v])


def matching_number(g: UndirectedGraph, subset: Iterable[int] | None = None) -> int:
    if subset is not None:
        g, _ = g.induced(subset)
    return len(max_matching(g))


def perfect_matching(g: UndirectedGraph, subset: Iterable[int]) -> Matching | None:
    """A perfect matching of the subgraph induced on ``subset`` (original ids), or None."""
    sub, keep = g.induced(subset)
    if sub.n % 2:
        return None
    m = max_matching(sub)
    if 2 * len(m) != sub.n:
        return None
    return frozenset(tuple(sorted((keep[u], keep[v]))) for u, v in m)


def has_perfect_matching(g: UndirectedGraph, subset: Iterable[int]) -> bool:
    subset = set(subset)
    if len(subset) % 2:
        return False
    return perfect_matching(g, subset) is not None


def _coverable(g: UndirectedGraph, s: set[int], pool: list[int]) -> bool:
    """Whether some matching of G[s + pool], using no pool-pool edge, covers all of s.

    Gadget: every pool vertex not used by s may pair with a fresh filler vertex;
    the fillers form a clique so leftovers pair among themselves.
    """
    verts = sorted(s) + pool
    index = {v: i for i, v in enumerate(verts)}
    n_fill = len(pool) + (len(s) % 2)
    total = len(verts) + n_fill
    adj: list[set[int]] = [set() for _ in range(total)]

    def link(a: int, b: int) -> None:
        adj[a].add(b)
        adj[b].add(a)

    for v in s:
        for u in g.adj[v]:
            if u in index and index[u] != index[v] and (u in s or v in s):
                link(index[v], index[u])
    fill = range(len(verts), total)
    for f in fill:
        for p in pool:
            link(f, index[p])
        for f2 in fill:
            if f < f2:
                link(f, f2)
    gadget = UndirectedGraph(total, tuple(frozenset(a) for a in adj))
    return 2 * len(max_matching(gadget)) == total


def min_augmentation(
    model: ChordModel | UndirectedGraph,
    s: Iterable[int],
    exclude: Iterable[int] = (),
) -> frozenset[int]:
    """Minimum chord set ``psi`` outside ``s`` such that ``s | psi`` is perfectly matchable.

    Candidates are searched by increasing size starting at the deficiency
    ``|s| - 2 * nu(s)``; among minimum sets the lexicographically smallest sorted
    id sequence is returned. Chords in ``exclude`` are never used.
    Raises ``InfeasibleError`` when no augmentation exists.
    """
    g = model.graph if isinstance(model, ChordModel) else model
    s = set(s)
    banned = s | set(exclude)
    # a chord of a minimum psi is matched to a chord of s, never to another psi chord
    pool = sorted({u for v in s for u in g.adj[v]} - banned)
    if not _coverable(g, s, pool):
        raise InfeasibleError("no augmentation makes the set perfectly matchable")
    deficiency = len(s) - 2 * matching_number(g, s)
    for size in range(deficiency, len(s) + 1, 2):
        for extra in combinations(pool, size):
            if has_perfect_matching(g, s.union(extra)):
                return frozenset(extra)
    raise InfeasibleError("no augmentation makes the set perfectly matchable")  # pragma: no cover
