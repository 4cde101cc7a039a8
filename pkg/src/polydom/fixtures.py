"""The running example: an 8-vertex graph with its 4-polygon and circle models.

Chord ids follow the vertex names a..h. The as-drawn polygon picture places
the endpoints of ``f`` and ``g`` in nested order on side 1, which loses the
edge f-g; the corrected model swaps those two positions and reproduces the
graph exactly.
"""

from __future__ import annotations

from .geom_model import ChordModel, UndirectedGraph

NAMES = tuple("abcdefgh")

EDGES = (
    ("a", "b"), ("a", "c"), ("a", "d"), ("a", "e"),
    ("f", "d"), ("f", "e"), ("f", "g"), ("f", "h"),
    ("h", "b"), ("h", "d"), ("g", "e"), ("g", "h"),
)

SIDE_COUNTS = (3, 5, 3, 5)

_CHORDS = ((1, 12), (9, 14), (11, 13), (7, 15), (4, 16), (3, 8), (2, 6), (5, 10))
_CHORDS_AS_DRAWN = ((1, 12), (9, 14), (11, 13), (7, 15), (4, 16), (2, 8), (3, 6), (5, 10))

MIN_DOMINATING = ("a", "g")
MIN_PAIRED_DOMINATING = ("a", "c", "f", "h")


def example_graph() -> UndirectedGraph:
    return UndirectedGraph.from_labeled_edges(NAMES, EDGES)


def example_polygon() -> ChordModel:
    return ChordModel(_CHORDS, SIDE_COUNTS)


def example_polygon_as_drawn() -> ChordModel:
    return ChordModel(_CHORDS_AS_DRAWN, SIDE_COUNTS)


def example_circle() -> ChordModel:
    return ChordModel(_CHORDS)
