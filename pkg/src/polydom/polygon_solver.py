"""Exact minimum dominating and paired-dominating sets on k-polygon models.

A solution ``D`` is described per side pair ``{i, j}`` by its *outer boundary*
(the chords of ``D_ij`` holding the extreme endpoints) and, for paired
domination, an *inner boundary* taken over the chords of ``D_ij`` that are not
matched inside the pair. Every chord of ``J_ij`` left undominated by the
boundaries can only be dominated from inside the pair, so once the boundaries
are fixed the pairs decouple into small independent subproblems. The solvers
enumerate boundaries, solve the pair subproblems exactly and keep the best
verified set.

Role tuples
-----------
For an adjacent pair (sides ``first`` and ``second = first + 1 mod k``) the
outer tuple is ``(leftmost on first, rightmost on second)`` -- the chords
farthest from the shared corner -- and the inner tuple is ``(rightmost on
first, leftmost on second)``. For other pairs both tuples are
``(leftmost on i, rightmost on i, leftmost on j, rightmost on j)``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Iterator, Mapping

from .geom_model import ChordModel, PairRestriction, UnsupportedOperationError, pair_restrictions
from .matching import InfeasibleError, Matching, has_perfect_matching, is_matching, min_augmentation
from .oracles import is_dominating_set, is_paired_dominating_set

DEFAULT_PAIR_THRESHOLD = 16

Pair = tuple[int, int]
Roles = tuple[int, ...]


class SubproblemTooLargeError(ValueError):
    """A pair subproblem exceeds the exhaustive-search threshold."""


# ---------------------------------------------------------------------------
# pair geometry

@dataclass(frozen=True)
class PairGeometry:
    """Side-pair data with per-side endpoint positions of every chord in J_ij."""

    i: int
    j: int
    first: int
    second: int
    adjacent: bool
    chords: tuple[int, ...]
    pos: Mapping[int, Mapping[int, int]] = field(compare=False)

    @property
    def pair(self) -> Pair:
        return (self.i, self.j)

    @property
    def mask(self) -> int:
        out = 0
        for c in self.chords:
            out |= 1 << c
        return out

    def at(self, cid: int, side: int) -> int:
        return self.pos[side][cid]


def is_adjacent(k: int, i: int, j: int) -> bool:
    return j == i + 1 or (i == 1 and j == k)


def pair_geometry(model: ChordModel, restriction: PairRestriction) -> PairGeometry:
    i, j = restriction.i, restriction.j
    k = model.k
    assert k is not None
    adjacent = is_adjacent(k, i, j)
    # the (1, k) pair wraps: its corner sits between side k and side 1
    first, second = (k, 1) if adjacent and j != i + 1 else (i, j)
    pos = {
        side: {c: model.endpoint_on(c, side) for c in restriction.chords}
        for side in (i, j)
    }
    return PairGeometry(i, j, first, second, adjacent, restriction.chords, pos)


def model_pairs(model: ChordModel) -> list[PairGeometry]:
    if model.sides is None:
        raise UnsupportedOperationError("polygon solver needs a model with sides")
    return [pair_geometry(model, r) for r in pair_restrictions(model)]


def outer_roles(pg: PairGeometry, chords: Iterable[int]) -> Roles | None:
    """Outer-boundary role tuple of ``chords`` (all inside J_ij), or None if empty."""
    chords = list(chords)
    if not chords:
        return None
    if pg.adjacent:
        return (
            min(chords, key=lambda c: pg.at(c, pg.first)),
            max(chords, key=lambda c: pg.at(c, pg.second)),
        )
    return _four_extremes(pg, chords)


def inner_roles(pg: PairGeometry, chords: Iterable[int]) -> Roles | None:
    chords = list(chords)
    if not chords:
        return None
    if pg.adjacent:
        return (
            max(chords, key=lambda c: pg.at(c, pg.first)),
            min(chords, key=lambda c: pg.at(c, pg.second)),
        )
    return _four_extremes(pg, chords)


def _four_extremes(pg: PairGeometry, chords: list[int]) -> Roles:
    return (
        min(chords, key=lambda c: pg.at(c, pg.i)),
        max(chords, key=lambda c: pg.at(c, pg.i)),
        min(chords, key=lambda c: pg.at(c, pg.j)),
        max(chords, key=lambda c: pg.at(c, pg.j)),
    )


def _role_sides(pg: PairGeometry, inner: bool) -> list[tuple[int, bool]]:
    """(side, wants_max) for each role slot."""
    if pg.adjacent:
        if inner:
            return [(pg.first, True), (pg.second, False)]
        return [(pg.first, False), (pg.second, True)]
    return [(pg.i, False), (pg.i, True), (pg.j, False), (pg.j, True)]


def roles_consistent(pg: PairGeometry, roles: Roles, inner: bool = False, others: Iterable[int] = ()) -> bool:
    """Every designated chord is extreme on its side among the tuple plus ``others``."""
    pool = set(roles) | set(others)
    for cid, (side, wants_max) in zip(roles, _role_sides(pg, inner)):
        here = pg.at(cid, side)
        for other in pool:
            there = pg.at(other, side)
            if (there > here) if wants_max else (there < here):
                return False
    return True


def _enumerate_role_tuples(pg: PairGeometry, inner: bool, candidates: Iterable[int], others: Iterable[int] = ()) -> list[Roles]:
    cands = sorted(candidates)
    others = tuple(others)
    slots = len(_role_sides(pg, inner))
    out = []
    for roles in product(cands, repeat=slots):
        if roles_consistent(pg, roles, inner, others):
            out.append(roles)
    return out


def within_outer(pg: PairGeometry, roles: Roles | None) -> int:
    """Mask of chords of J_ij lying inside the extremes described by outer roles."""
    if roles is None:
        return 0
    slots = _role_sides(pg, False)
    mask = 0
    for c in pg.chords:
        ok = True
        for rc, (side, wants_max) in zip(roles, slots):
            if wants_max and pg.at(c, side) > pg.at(rc, side):
                ok = False
            if not wants_max and pg.at(c, side) < pg.at(rc, side):
                ok = False
        if ok:
            mask |= 1 << c
    return mask


# ---------------------------------------------------------------------------
# boundary selections and region reports

@dataclass(frozen=True)
class BoundarySelection:
    """Outer (and optionally inner) role tuples per side pair; None means empty."""

    outer: Mapping[Pair, Roles | None]
    inner: Mapping[Pair, Roles | None] | None = None

    def outer_chords(self) -> frozenset[int]:
        return frozenset(c for roles in self.outer.values() if roles for c in roles)

    def inner_chords(self) -> frozenset[int]:
        if self.inner is None:
            return frozenset()
        return frozenset(c for roles in self.inner.values() if roles for c in roles)

    def chords(self) -> frozenset[int]:
        return self.outer_chords() | self.inner_chords()

    def key(self) -> tuple:
        inner = None if self.inner is None else tuple(sorted(self.inner.items()))
        return (tuple(sorted(self.outer.items())), inner)


@dataclass(frozen=True)
class PairRegion:
    """Undominated chords of one side pair plus their interval description.

    Adjacent pairs carry one cyclic interval ``(start, end)`` running through
    the shared corner; other pairs carry one interval on each side.
    """

    pair: Pair
    chords: frozenset[int]
    intervals: tuple[tuple[int, int], ...] | None


@dataclass(frozen=True)
class RegionReport:
    regions: Mapping[Pair, PairRegion]

    def chords(self) -> frozenset[int]:
        return frozenset(c for r in self.regions.values() for c in r.chords)

    def __getitem__(self, pair: Pair) -> PairRegion:
        return self.regions[pair]


def undominated(model: ChordModel, chords: Iterable[int]) -> frozenset[int]:
    """Chords of the model not in ``N[chords]``, by one sweep over endpoint positions.

    A chord (p, q) is crossed by a boundary chord iff some boundary endpoint
    strictly inside (p, q) has its partner outside; range minima and maxima of
    partner positions over the sweep answer that for every chord.
    """
    chords = set(chords)
    size = 2 * model.m
    big = size + 1
    lo_val = [big] * (size + 2)
    hi_val = [0] * (size + 2)
    for c in chords:
        p, q = model.chords[c]
        lo_val[p], hi_val[p] = q, q
        lo_val[q], hi_val[q] = p, p
    lo_table = _sparse_table(lo_val, min)
    hi_table = _sparse_table(hi_val, max)
    out = []
    for cid, (p, q) in enumerate(model.chords):
        if cid in chords:
            continue
        if q - p >= 2:
            lo = _query(lo_table, p + 1, q - 1, min)
            hi = _query(hi_table, p + 1, q - 1, max)
            if lo < p or hi > q:
                continue
        out.append(cid)
    return frozenset(out)


def _sparse_table(values: list[int], op) -> list[list[int]]:
    table = [values]
    width = 1
    while 2 * width <= len(values):
        prev = table[-1]
        table.append([op(prev[x], prev[x + width]) for x in range(len(values) - 2 * width + 1)])
        width *= 2
    return table


def _query(table: list[list[int]], lo: int, hi: int, op) -> int:
    level = (hi - lo + 1).bit_length() - 1
    row = table[level]
    return op(row[lo], row[hi - (1 << level) + 1])


def _region_report(model: ChordModel, free: frozenset[int]) -> RegionReport:
    regions = {}
    for pg in model_pairs(model):
        here = frozenset(c for c in pg.chords if c in free)
        intervals = None
        if here:
            if pg.adjacent:
                intervals = (
                    (min(pg.at(c, pg.first) for c in here), max(pg.at(c, pg.second) for c in here)),
                )
            else:
                intervals = (
                    (min(pg.at(c, pg.i) for c in here), max(pg.at(c, pg.i) for c in here)),
                    (min(pg.at(c, pg.j) for c in here), max(pg.at(c, pg.j) for c in here)),
                )
        regions[pg.pair] = PairRegion(pg.pair, here, intervals)
    return RegionReport(regions)


def interval_chords(model: ChordModel, region: PairRegion) -> frozenset[int]:
    """Chords of the pair selected by the region's interval description alone."""
    if region.intervals is None:
        return frozenset()
    pg = next(p for p in model_pairs(model) if p.pair == region.pair)
    size = 2 * model.m
    if pg.adjacent:
        ((start, end),) = region.intervals

        def inside(pos: int) -> bool:
            # cyclic interval walked counterclockwise from start to end
            if start <= end:
                return start <= pos <= end
            return pos >= start or pos <= end

        assert 1 <= start <= size and 1 <= end <= size
        return frozenset(c for c in pg.chords if all(inside(x) for x in model.chords[c]))
    (bi, ci), (bj, cj) = region.intervals
    return frozenset(
        c for c in pg.chords
        if bi <= pg.at(c, pg.i) <= ci and bj <= pg.at(c, pg.j) <= cj
    )


def outer_boundary_of(model: ChordModel, d: Iterable[int]) -> BoundarySelection:
    d = set(d)
    return BoundarySelection({pg.pair: outer_roles(pg, [c for c in pg.chords if c in d]) for pg in model_pairs(model)})


def undominated_after_outer(model: ChordModel, o: BoundarySelection) -> RegionReport:
    return _region_report(model, undominated(model, o.outer_chords()))


def inner_boundary_of(
    model: ChordModel, d: Iterable[int], matching: Matching, o: BoundarySelection
) -> BoundarySelection:
    """Inner boundary of ``d`` under a perfect matching of the chords of ``d``.

    For each pair the inner roles are taken over the chords of ``D_ij`` not
    matched to another chord of ``D_ij``, together with the outer roles.
    """
    d = set(d)
    g = model.graph
    covered = {v for edge in matching for v in edge}
    if not is_matching(g, matching) or covered != d:
        raise ValueError("matching is not a perfect matching of the induced subgraph on d")
    mate = {}
    for u, v in matching:
        mate[u], mate[v] = v, u
    free = undominated(model, o.outer_chords())
    inner = {}
    for pg in model_pairs(model):
        if not any(c in free for c in pg.chords):
            inner[pg.pair] = None
            continue
        members = {c for c in pg.chords if c in d}
        kept = {c for c in members if mate[c] not in members}
        kept |= set(o.outer.get(pg.pair) or ())
        inner[pg.pair] = inner_roles(pg, kept)
    return BoundarySelection(dict(o.outer), inner)


def undominated_after_boundaries(model: ChordModel, o: BoundarySelection, i: BoundarySelection) -> RegionReport:
    return _region_report(model, undominated(model, o.outer_chords() | i.inner_chords()))


def pruning_violations(model: ChordModel, sel: BoundarySelection) -> list[tuple[Pair, Pair]]:
    """Pairs (inner pair, enclosing outer pair) breaking the separation rule.

    When ``I_ij`` is non-empty, no pair ``{i', j'}`` with ``i'`` strictly
    between ``i`` and ``j`` and ``j'`` strictly between ``j`` and ``i`` (going
    around the polygon) may have a non-empty outer boundary: all of its chords
    cross every chord of ``J_ij``.
    """
    k = model.k
    assert k is not None
    bad = []
    if sel.inner is None:
        return bad
    for (i, j), roles in sel.inner.items():
        if not roles:
            continue
        inside = set(range(i + 1, j))
        outside = set(range(1, k + 1)) - inside - {i, j}
        for (a, b), outer in sel.outer.items():
            if outer and ((a in inside and b in outside) or (b in inside and a in outside)):
                bad.append(((i, j), (a, b)))
    return bad


# ---------------------------------------------------------------------------
# enumeration

class _Context:
    """Per-model precomputation shared by enumeration and the solvers."""

    def __init__(self, model: ChordModel, pair_threshold: int = DEFAULT_PAIR_THRESHOLD) -> None:
        self.model = model
        self.g = model.graph
        self.masks = self.g.closed_masks
        self.full = (1 << model.m) - 1
        self.pairs = model_pairs(model)
        self.threshold = pair_threshold
        self.outer_options = [[None] + _enumerate_role_tuples(pg, False, pg.chords) for pg in self.pairs]
        self._inner_cache: dict[tuple[int, Roles], list[Roles]] = {}
        self._pds_cache: dict[tuple[int, int, int], tuple[int, ...] | None] = {}
        self._ds_cache: dict[tuple[int, int, int], tuple[int, ...] | None] = {}
        self._psi_cache: dict[tuple[int, int], frozenset[int] | None] = {}
        self._within_cache: dict[tuple[int, Roles | None], int] = {}

    def within(self, idx: int, roles: Roles | None) -> int:
        key = (idx, roles)
        if key not in self._within_cache:
            self._within_cache[key] = within_outer(self.pairs[idx], roles)
        return self._within_cache[key]

    def closure(self, chords: Iterable[int]) -> int:
        out = 0
        for c in chords:
            out |= self.masks[c]
        return out

    def inner_options(self, idx: int, outer: Roles) -> list[Roles]:
        key = (idx, outer)
        if key not in self._inner_cache:
            pg = self.pairs[idx]
            if not pg.adjacent:
                # the inner extremes of a set containing the outer extremes are the outer extremes
                opts = [outer]
            else:
                allowed = within_outer(pg, outer)
                cands = [c for c in pg.chords if allowed >> c & 1]
                opts = _enumerate_role_tuples(pg, True, cands, others=outer)
            self._inner_cache[key] = opts
        return self._inner_cache[key]

    def outer_stream(self) -> Iterator[tuple[tuple[Roles | None, ...], int]]:
        """Outer tuples with the mask of chords they leave undominated."""
        for combo in product(*self.outer_options):
            chosen = [c for roles in combo if roles for c in roles]
            yield combo, self.full & ~self.closure(chosen)

    def candidates(self) -> Iterator[tuple[tuple[Roles | None, ...], tuple[Roles | None, ...], int]]:
        """(outer, inner, undominated-after-outer mask) triples in deterministic order."""
        for outer, free in self.outer_stream():
            per_pair: list[list[Roles | None]] = []
            for idx, pg in enumerate(self.pairs):
                if not free & pg.mask:
                    per_pair.append([None])
                elif outer[idx] is None:
                    # J'_ij non-empty needs chords of D_ij, which an empty outer boundary rules out
                    per_pair = []
                    break
                else:
                    per_pair.append(self.inner_options(idx, outer[idx]))
            if not per_pair and self.pairs:
                continue
            for inner in product(*per_pair):
                yield outer, inner, free

    def selection(self, outer, inner=None) -> BoundarySelection:
        o = {pg.pair: roles for pg, roles in zip(self.pairs, outer)}
        i = None if inner is None else {pg.pair: roles for pg, roles in zip(self.pairs, inner)}
        return BoundarySelection(o, i)

    # -- pair subproblems ---------------------------------------------------

    def _pool(self, pool_mask: int) -> list[int]:
        pool = [c for c in range(self.model.m) if pool_mask >> c & 1]
        if len(pool) > self.threshold:
            raise SubproblemTooLargeError(
                f"pair subproblem has {len(pool)} candidate chords (threshold {self.threshold})"
            )
        return pool

    def pair_pds(self, target: int, pool_mask: int, pair_mask: int) -> tuple[int, ...] | None:
        key = (target, pool_mask, pair_mask)
        if key not in self._pds_cache:
            self._pds_cache[key] = self._search(target, pool_mask, paired=True)
        return self._pds_cache[key]

    def pair_ds(self, target: int, pool_mask: int, pair_mask: int) -> tuple[int, ...] | None:
        key = (target, pool_mask, pair_mask)
        if key not in self._ds_cache:
            self._ds_cache[key] = self._search(target, pool_mask, paired=False)
        return self._ds_cache[key]

    def _search(self, target: int, pool_mask: int, paired: bool) -> tuple[int, ...] | None:
        if not target:
            return ()
        # only chords dominating a target, or matchable to one that does, can help
        useful = pool_mask & self.closure(c for c in range(self.model.m) if target >> c & 1)
        if paired:
            useful = pool_mask & (useful | self.closure(c for c in range(self.model.m) if useful >> c & 1))
        pool = self._pool(useful)
        step = 2 if paired else 1
        start = 2 if paired else 1
        for size in range(start, len(pool) + 1, step):
            for combo in combinations(pool, size):
                if target & ~self.closure(combo):
                    continue
                if paired and not has_perfect_matching(self.g, combo):
                    continue
                return combo
        return None

    def psi(self, boundary: frozenset[int], exclude: int) -> frozenset[int] | None:
        key = (sum(1 << c for c in boundary), exclude)
        if key not in self._psi_cache:
            banned = [c for c in range(self.model.m) if exclude >> c & 1]
            try:
                self._psi_cache[key] = min_augmentation(self.g, boundary, exclude=banned)
            except InfeasibleError:
                self._psi_cache[key] = None
        return self._psi_cache[key]


def enumerate_boundaries(model: ChordModel) -> Iterator[BoundarySelection]:
    """Every (outer, inner) boundary candidate, in deterministic order.

    Outer tuples range over role-consistent choices from each ``J_ij``. Inner
    tuples are empty exactly where the outer boundary leaves nothing of the
    pair undominated; otherwise they are drawn from chords inside the outer
    extremes. For non-adjacent pairs the inner tuple coincides with the outer
    one, since ``D'_ij`` contains the outer extremes.
    """
    ctx = _Context(model)
    for outer, inner, _ in ctx.candidates():
        yield ctx.selection(outer, inner)


def enumerate_outer_boundaries(model: ChordModel) -> Iterator[BoundarySelection]:
    ctx = _Context(model)
    for outer, _ in ctx.outer_stream():
        yield ctx.selection(outer)


# ---------------------------------------------------------------------------
# pair subsolvers (public wrappers)

def _pair_pool(model: ChordModel, pair: PairRestriction, excluded: Iterable[int], allowed: Iterable[int] | None) -> int:
    mask = 0
    for c in pair.chords if allowed is None else set(allowed) & set(pair.chords):
        mask |= 1 << c
    for c in excluded:
        mask &= ~(1 << c)
    return mask


def min_constrained_paired_dom_on_pair(
    model: ChordModel,
    pair: PairRestriction,
    target: Iterable[int],
    excluded: Iterable[int] = (),
    allowed: Iterable[int] | None = None,
    threshold: int = DEFAULT_PAIR_THRESHOLD,
) -> frozenset[int] | None:
    """Minimum ``D'' subset of J_ij - excluded`` dominating ``target`` with a perfect matching."""
    ctx = _Context(model, threshold)
    tmask = sum(1 << c for c in set(target))
    res = ctx.pair_pds(tmask, _pair_pool(model, pair, excluded, allowed), 0)
    return None if res is None else frozenset(res)


def min_constrained_dom_on_pair(
    model: ChordModel,
    pair: PairRestriction,
    target: Iterable[int],
    excluded: Iterable[int] = (),
    allowed: Iterable[int] | None = None,
    threshold: int = DEFAULT_PAIR_THRESHOLD,
) -> frozenset[int] | None:
    ctx = _Context(model, threshold)
    tmask = sum(1 << c for c in set(target))
    res = ctx.pair_ds(tmask, _pair_pool(model, pair, excluded, allowed), 0)
    return None if res is None else frozenset(res)


# ---------------------------------------------------------------------------
# solvers

@dataclass
class SolverStats:
    candidates: int = 0
    accepted: int = 0


def _better(a: tuple[int, ...], b: tuple[int, ...] | None) -> bool:
    return b is None or (len(a), a) < (len(b), b)


def _evaluate_pds(ctx: _Context, outer, inner, free: int, best: tuple[int, ...] | None) -> tuple[int, ...] | None:
    boundary = frozenset(c for roles in (*outer, *inner) if roles for c in roles)
    bmask = sum(1 << c for c in boundary)
    remaining = ctx.full & ~ctx.closure(boundary)
    chosen: list[int] = []
    for idx, pg in enumerate(ctx.pairs):
        target = remaining & pg.mask
        if not target:
            continue
        pool = ctx.within(idx, outer[idx]) & ~bmask
        local = ctx.pair_pds(target, pool, pg.mask)
        if local is None:
            return None
        chosen.extend(local)
    if best is not None and len(boundary) + len(chosen) > len(best):
        return None
    if ctx.closure(chosen) | ctx.closure(boundary) != ctx.full:
        return None
    chosen_mask = sum(1 << c for c in chosen)
    psi = ctx.psi(boundary, chosen_mask)
    if psi is None:
        return None
    result = tuple(sorted(boundary | set(chosen) | psi))
    if not is_paired_dominating_set(ctx.g, result):
        return None
    return result


def _evaluate_ds(ctx: _Context, outer, free: int) -> tuple[int, ...] | None:
    boundary = {c for roles in outer if roles for c in roles}
    chosen: list[int] = []
    for idx, pg in enumerate(ctx.pairs):
        target = free & pg.mask
        if not target:
            continue
        if outer[idx] is None:
            return None
        bmask = sum(1 << c for c in boundary)
        pool = ctx.within(idx, outer[idx]) & ~bmask
        local = ctx.pair_ds(target, pool, pg.mask)
        if local is None:
            return None
        chosen.extend(local)
    result = tuple(sorted(boundary | set(chosen)))
    if not is_dominating_set(ctx.g, result):
        return None
    return result


def _pds_chunk(model: ChordModel, threshold: int, start: int, stop: int) -> tuple[tuple[int, ...] | None, int, int]:
    ctx = _Context(model, threshold)
    best = None
    count = accepted = 0
    for n, (outer, inner, free) in enumerate(ctx.candidates()):
        if n < start:
            continue
        if n >= stop:
            break
        count += 1
        res = _evaluate_pds(ctx, outer, inner, free, best)
        if res is not None:
            accepted += 1
            if _better(res, best):
                best = res
    return best, count, accepted


def _ds_chunk(model: ChordModel, threshold: int, start: int, stop: int) -> tuple[tuple[int, ...] | None, int, int]:
    ctx = _Context(model, threshold)
    best = None
    count = accepted = 0
    for n, (outer, free) in enumerate(ctx.outer_stream()):
        if n < start:
            continue
        if n >= stop:
            break
        count += 1
        res = _evaluate_ds(ctx, outer, free)
        if res is not None:
            accepted += 1
            if _better(res, best):
                best = res
    return best, count, accepted


def _run(chunk_fn, model: ChordModel, jobs: int, threshold: int, total: int | None, stats: SolverStats | None):
    if model.sides is None:
        raise UnsupportedOperationError("polygon solver needs a model with sides")
    if jobs <= 1 or total is None:
        best, count, accepted = chunk_fn(model, threshold, 0, total if total is not None else 1 << 62)
    else:
        bounds = [(total * w // jobs, total * (w + 1) // jobs) for w in range(jobs)]
        best, count, accepted = None, 0, 0
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(chunk_fn, model, threshold, a, b) for a, b in bounds]
            for fut in futures:
                res, c, acc = fut.result()
                count += c
                accepted += acc
                if res is not None and _better(res, best):
                    best = res
    if stats is not None:
        stats.candidates += count
        stats.accepted += accepted
    return best


def count_pds_candidates(model: ChordModel) -> int:
    return sum(1 for _ in _Context(model).candidates())


def solve_min_pds_polygon(
    model: ChordModel,
    *,
    jobs: int = 1,
    threshold: int = DEFAULT_PAIR_THRESHOLD,
    stats: SolverStats | None = None,
) -> frozenset[int] | None:
    """Minimum paired-dominating set of a polygon model, or None if none exists."""
    total = count_pds_candidates(model) if jobs > 1 else None
    best = _run(_pds_chunk, model, jobs, threshold, total, stats)
    return None if best is None else frozenset(best)


def solve_min_ds_polygon(
    model: ChordModel,
    *,
    jobs: int = 1,
    threshold: int = DEFAULT_PAIR_THRESHOLD,
    stats: SolverStats | None = None,
) -> frozenset[int]:
    """Minimum dominating set of a polygon model."""
    total = sum(1 for _ in _Context(model).outer_stream()) if jobs > 1 else None
    best = _run(_ds_chunk, model, jobs, threshold, total, stats)
    if best is None:  # pragma: no cover - the all-chords outer tuple always succeeds
        raise AssertionError("no dominating set found")
    return frozenset(best)


def default_jobs() -> int:
    return max(1, (os.cpu_count() or 1))
