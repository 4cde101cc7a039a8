"""Chord intersection models on a circle or a k-polygon.

Positions are abstract integers ``1..2m`` in counterclockwise order. A chord
is a pair ``(p, q)`` with ``p < q``; chord ids are dense integers ``0..m-1``
assigned in input order. A polygon model additionally carries the number of
endpoints on each of its ``k`` sides; side ``t`` (1-based) is the contiguous
range of positions following side ``t - 1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class InvalidModelError(ValueError):
    """Raised when a chord model violates its structural invariants."""


class ParseError(ValueError):
    """Raised for malformed model, digraph or witness files."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsupportedOperationError(ValueError):
    """Raised when an operation needs polygon sides but the model has none."""


Chord = tuple[int, int]


def chords_intersect(c1: Chord, c2: Chord) -> bool:
    """Return True iff the two chords cross (their endpoints interleave)."""
    p1, q1 = sorted(c1)
    p2, q2 = sorted(c2)
    if len({p1, q1, p2, q2}) != 4:
        raise InvalidModelError(f"chords {c1} and {c2} share an endpoint")
    return (p1 < p2 < q1) != (p1 < q2 < q1)


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n or v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("label count does not match vertex count")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> UndirectedGraph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj), tuple(labels) if labels else None)

    @classmethod
    def from_labeled_edges(cls, labels: Sequence[str], edges: Iterable[tuple[str, str]]) -> UndirectedGraph:
        index = {name: i for i, name in enumerate(labels)}
        return cls.from_edges(len(labels), ((index[a], index[b]) for a, b in edges), labels)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def ids(self, names: Iterable[str]) -> set[int]:
        """Map vertex labels to ids."""
        if self.labels is None:
            raise ValueError("graph has no labels")
        index = {name: i for i, name in enumerate(self.labels)}
        return {index[name] for name in names}

    def names(self, ids: Iterable[int]) -> list[str]:
        if self.labels is None:
            return [str(v) for v in sorted(ids)]
        return [self.labels[v] for v in sorted(ids)]

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Bitmask of N[v] for every vertex v."""
        masks = []
        for v, nbrs in enumerate(self.adj):
            mask = 1 << v
            for u in nbrs:
                mask |= 1 << u
            masks.append(mask)
        return tuple(masks)

    def induced(self, subset: Iterable[int]) -> tuple[UndirectedGraph, list[int]]:
        """Induced subgraph plus the list mapping new ids back to old ones."""
        keep = sorted(set(subset))
        index = {v: i for i, v in enumerate(keep)}
        adj = tuple(frozenset(index[u] for u in self.adj[v] if u in index) for v in keep)
        return UndirectedGraph(len(keep), adj), keep


@dataclass(frozen=True)
class PairRestriction:
    """Chords with one endpoint on side ``i`` and the other on side ``j``."""

    i: int
    j: int
    chords: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.chords)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.i, self.j)


@dataclass(frozen=True)
class ChordModel:
    """A chord intersection model; ``sides`` holds endpoint counts per side."""

    chords: tuple[Chord, ...]
    sides: tuple[int, ...] | None = None
    _side_of: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        chords = tuple((int(p), int(q)) for p, q in self.chords)
        object.__setattr__(self, "chords", chords)
        size = 2 * len(chords)
        seen: set[int] = set()
        for cid, (p, q) in enumerate(chords):
            if not p < q:
                raise InvalidModelError(f"chord {cid} must satisfy p < q, got ({p}, {q})")
            for pos in (p, q):
                if not 1 <= pos <= size:
                    raise InvalidModelError(f"position {pos} outside 1..{size}")
                if pos in seen:
                    raise InvalidModelError(f"duplicate endpoint {pos}")
                seen.add(pos)
        side_of: list[int] = []
        if self.sides is not None:
            sides = tuple(int(s) for s in self.sides)
            object.__setattr__(self, "sides", sides)
            if len(sides) < 3:
                raise InvalidModelError("a polygon model needs at least 3 sides")
            if any(s < 0 for s in sides) or sum(sides) != size:
                raise InvalidModelError(f"side sizes must be non-negative and sum to {size}")
            for t, count in enumerate(sides, start=1):
                side_of.extend([t] * count)
            for cid, (p, q) in enumerate(chords):
                if side_of[p - 1] == side_of[q - 1]:
                    raise InvalidModelError(f"chord {cid} endpoints on same side {side_of[p - 1]}")
        object.__setattr__(self, "_side_of", tuple(side_of))

    @property
    def m(self) -> int:
        return len(self.chords)

    @property
    def k(self) -> int | None:
        return None if self.sides is None else len(self.sides)

    def side_of(self, pos: int) -> int:
        """Side (1-based) holding position ``pos``."""
        if self.sides is None:
            raise UnsupportedOperationError("model has no polygon sides")
        return self._side_of[pos - 1]

    def side_range(self, t: int) -> tuple[int, int]:
        """Inclusive position range ``(first, last)`` of side ``t``; empty sides give first > last."""
        if self.sides is None:
            raise UnsupportedOperationError("model has no polygon sides")
        start = 1 + sum(self.sides[: t - 1])
        return start, start + self.sides[t - 1] - 1

    def endpoint_on(self, cid: int, t: int) -> int:
        """Position of chord ``cid``'s endpoint lying on side ``t``."""
        p, q = self.chords[cid]
        if self.side_of(p) == t:
            return p
        if self.side_of(q) == t:
            return q
        raise ValueError(f"chord {cid} has no endpoint on side {t}")

    def sides_of_chord(self, cid: int) -> tuple[int, int]:
        p, q = self.chords[cid]
        return self.side_of(p), self.side_of(q)

    @cached_property
    def chord_at(self) -> dict[int, int]:
        """Map from position to the chord owning it."""
        return {pos: cid for cid, chord in enumerate(self.chords) for pos in chord}

    @cached_property
    def graph(self) -> UndirectedGraph:
        return build_adjacency(self)

    def without_sides(self) -> ChordModel:
        return ChordModel(self.chords)


def build_adjacency(model: ChordModel, labels: Sequence[str] | None = None) -> UndirectedGraph:
    """Intersection graph of the model: one vertex per chord id."""
    # sweep: a chord crosses exactly the chords opened inside it and still open at its close
    adj: list[set[int]] = [set() for _ in range(model.m)]
    owner = model.chord_at
    open_order: list[int] = []
    for pos in range(1, 2 * model.m + 1):
        cid = owner[pos]
        if model.chords[cid][0] == pos:
            open_order.append(cid)
            continue
        idx = open_order.index(cid)
        for other in open_order[idx + 1:]:
            adj[cid].add(other)
            adj[other].add(cid)
        del open_order[idx]
    return UndirectedGraph(model.m, tuple(frozenset(s) for s in adj), tuple(labels) if labels else None)


def pair_restrictions(model: ChordModel) -> list[PairRestriction]:
    """Group chords by the unordered pair of sides they connect (empty pairs omitted)."""
    if model.sides is None:
        raise UnsupportedOperationError("pair restrictions need a polygon model")
    groups: dict[tuple[int, int], list[int]] = {}
    for cid in range(model.m):
        si, sj = sorted(model.sides_of_chord(cid))
        groups.setdefault((si, sj), []).append(cid)
    return [PairRestriction(i, j, tuple(ids)) for (i, j), ids in sorted(groups.items())]


def random_polygon_model(k: int, m: int, seed: int) -> ChordModel:
    """Seeded random k-polygon model with m chords.

    Each chord draws two distinct sides; endpoint order inside every side is a
    random shuffle, so the distinct-sides constraint holds by construction.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    if m < 1:
        raise ValueError("m must be at least 1")
    rng = random.Random(seed)
    per_side: list[list[int]] = [[] for _ in range(k)]
    for cid in range(m):
        a, b = rng.sample(range(k), 2)
        per_side[a].append(cid)
        per_side[b].append(cid)
    ends: list[list[int]] = [[] for _ in range(m)]
    pos = 1
    for side in per_side:
        rng.shuffle(side)
        for cid in side:
            ends[cid].append(pos)
            pos += 1
    chords = sorted((min(e), max(e)) for e in ends)
    return ChordModel(tuple(chords), tuple(len(s) for s in per_side))


def random_circle_model(m: int, seed: int) -> ChordModel:
    rng = random.Random(seed)
    positions = list(range(1, 2 * m + 1))
    rng.shuffle(positions)
    chords = sorted((min(a, b), max(a, b)) for a, b in zip(positions[::2], positions[1::2]))
    return ChordModel(tuple(chords))


# ---------------------------------------------------------------------------
# file formats

def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((lineno, stripped.split()))
    return out


def _ints(tokens: list[str], lineno: int, count: int | None = None) -> list[int]:
    if count is not None and len(tokens) != count:
        raise ParseError(f"expected {count} integers, got {len(tokens)}", lineno)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer token in {' '.join(tokens)!r}", lineno) from None


def parse_model(text: str) -> ChordModel:
    """Parse a ``poly v1`` or ``circle v1`` model file."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty model file")
    lineno, header = lines[0]
    kind = " ".join(header)
    if kind not in ("poly v1", "circle v1"):
        raise ParseError(f"unknown header {kind!r}", lineno)
    if len(lines) < 2:
        raise ParseError("missing size line", lineno)
    sides: list[int] | None = None
    if kind == "poly v1":
        lineno, toks = lines[1]
        k, m = _ints(toks, lineno, 2)
        if k < 3:
            raise ParseError("polygon needs k >= 3", lineno)
        if len(lines) < 3:
            raise ParseError("missing side sizes line", lineno)
        lineno, toks = lines[2]
        sides = _ints(toks, lineno, k)
        if sum(sides) != 2 * m or any(s < 0 for s in sides):
            raise ParseError(f"side sizes must be non-negative and sum to {2 * m}", lineno)
        body = lines[3:]
    else:
        lineno, toks = lines[1]
        (m,) = _ints(toks, lineno, 1)
        body = lines[2:]
    if m < 0:
        raise ParseError("negative chord count", lines[1][0])
    if len(body) != m:
        last = body[-1][0] if body else lines[-1][0]
        raise ParseError(f"expected {m} chord lines, got {len(body)}", last)
    side_of: list[int] = []
    if sides is not None:
        for t, count in enumerate(sides, start=1):
            side_of.extend([t] * count)
    seen: set[int] = set()
    chords = []
    for lineno, toks in body:
        p, q = _ints(toks, lineno, 2)
        if not p < q:
            raise ParseError(f"chord must satisfy p < q, got {p} {q}", lineno)
        for pos in (p, q):
            if not 1 <= pos <= 2 * m:
                raise ParseError(f"position {pos} outside 1..{2 * m}", lineno)
            if pos in seen:
                raise ParseError(f"duplicate endpoint {pos}", lineno)
            seen.add(pos)
        if sides is not None and side_of[p - 1] == side_of[q - 1]:
            raise ParseError("chord endpoints on same side", lineno)
        chords.append((p, q))
    return ChordModel(tuple(chords), tuple(sides) if sides is not None else None)


def serialize_model(model: ChordModel) -> str:
    if model.sides is None:
        lines = ["circle v1", str(model.m)]
    else:
        lines = ["poly v1", f"{model.k} {model.m}", " ".join(map(str, model.sides))]
    lines.extend(f"{p} {q}" for p, q in model.chords)
    return "\n".join(lines) + "\n"
