"""Circle chord model built from a directed Hamiltonian-path instance.

The construction encodes "vertex ``i`` sits at path position ``j``" in a cell
of three chords ``l_i^j, c_i^j, r_i^j``. Edge chords ``e_{x,y}^j`` link the
right chord of cell ``(x, j)`` to the left chord of cell ``(y, j + 1)``, and
``f^j`` forces one edge chord per step. Every vertex ``i`` owns an ``a_i``
that can only be paired with one of its ``b_i^j`` chords; the chosen ``j`` is
the position of ``i`` on the path. Pendant chords (``f'``, ``a'``, ``b'``)
force ``f``, ``a`` and ``b`` into every paired-dominating set.

Subscripts index vertices and superscripts index path positions throughout.
A digraph has a Hamiltonian path from 1 to n iff the model has a
paired-dominating set of ``2n^2 + 2n - 2`` chords.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .geom_model import ChordModel, ParseError, _content_lines, _ints
from .matching import perfect_matching
from .oracles import Digraph, is_paired_dominating_set

TYPES = ("l", "c", "r", "e", "f", "f'", "a", "a'", "b", "b'")


class ReductionError(ValueError):
    """The digraph cannot be reduced (fewer than two vertices)."""


class WitnessError(ValueError):
    """A witness fails its precondition or cannot be converted."""


def l_(i: int, j: int) -> str:
    return f"l_{i}^{j}"


def c_(i: int, j: int) -> str:
    return f"c_{i}^{j}"


def r_(i: int, j: int) -> str:
    return f"r_{i}^{j}"


def e_(x: int, y: int, j: int) -> str:
    return f"e_{x},{y}^{j}"


def f_(j: int) -> str:
    return f"f^{j}"


def fp_(j: int) -> str:
    return f"f'^{j}"


def a_(i: int) -> str:
    return f"a_{i}"


def ap_(i: int) -> str:
    return f"a'_{i}"


def b_(i: int, j: int) -> str:
    return f"b_{i}^{j}"


def bp_(i: int, j: int) -> str:
    return f"b'_{i}^{j}"


def chord_type(name: str) -> str:
    head = name.split("_", 1)[0].split("^", 1)[0]
    if head not in TYPES:
        raise ValueError(f"unknown chord name {name!r}")
    return head


def expected_counts(n: int, m: int) -> dict[str, int]:
    return {
        "l": n * n - 1, "c": n * n, "r": n * n - 1, "e": (n - 1) * m,
        "f": n - 1, "f'": n - 1, "a": n, "a'": n, "b": n * n, "b'": n * n,
    }


def expected_total(n: int, m: int) -> int:
    # one edge chord per edge and per step 1..n-1
    return 5 * n * n + 4 * n - 4 + (n - 1) * m


def target_size(n: int) -> int:
    return 2 * n * n + 2 * n - 2


@dataclass(frozen=True)
class ReductionArtifact:
    digraph: Digraph
    model: ChordModel
    names: dict[str, int] = field(compare=False)

    @property
    def n(self) -> int:
        return self.digraph.n

    @property
    def target(self) -> int:
        return target_size(self.n)

    def id(self, name: str) -> int:
        return self.names[name]

    def ids(self, names: Iterable[str]) -> frozenset[int]:
        return frozenset(self.names[x] for x in names)

    def name_of(self, cid: int) -> str:
        return self._reverse.get(cid, f"#{cid}")

    @cached_property
    def _reverse(self) -> dict[int, str]:
        return {cid: name for name, cid in self.names.items()}

    def type_counts(self) -> dict[str, int]:
        counts = dict.fromkeys(TYPES, 0)
        for name in self.names:
            counts[chord_type(name)] += 1
        return counts


@dataclass(frozen=True)
class ReductionWitness:
    """A Hamiltonian path as its vertex sequence ``path[position - 1] = vertex``."""

    path: tuple[int, ...]

    @property
    def position(self) -> dict[int, int]:
        return {v: j for j, v in enumerate(self.path, start=1)}


def _name_order(d: Digraph) -> list[str]:
    n = d.n
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    names = [l_(i, j) for i, j in cells if (i, j) != (1, 1)]
    names += [c_(i, j) for i, j in cells]
    names += [r_(i, j) for i, j in cells if (i, j) != (n, n)]
    names += [e_(x, y, j) for x, y in d.edges for j in range(1, n)]
    names += [f_(j) for j in range(1, n)]
    names += [fp_(j) for j in range(1, n)]
    names += [a_(i) for i in range(1, n + 1)]
    names += [ap_(i) for i in range(1, n + 1)]
    names += [b_(i, j) for i, j in cells]
    names += [bp_(i, j) for i, j in cells]
    return names


def _layout(d: Digraph) -> list[str]:
    """Counterclockwise endpoint sequence; each chord name appears twice."""
    n = d.n
    seq: list[str] = []
    for j in range(n - 1, 0, -1):
        # nested f arcs: f^{n-1} opens first and closes last
        seq += [fp_(j), f_(j), fp_(j)]
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            has_l = (i, j) != (1, 1)
            has_r = (i, j) != (n, n)
            if has_l:
                seq.append(l_(i, j))
                if j >= 2:
                    seq += [e_(x, i, j - 1) for x, y in d.edges if y == i]
            seq.append(c_(i, j))
            if has_l:
                seq.append(l_(i, j))
            seq.append(b_(i, j))
            if has_r:
                seq.append(r_(i, j))
            seq.append(c_(i, j))
            if j < n:
                seq += [e_(i, y, j) for x, y in d.edges if x == i]
            if has_r:
                seq.append(r_(i, j))
        if j < n:
            seq.append(f_(j))
    for i in range(1, n + 1):
        seq += [ap_(i), a_(i), ap_(i)]
        for j in range(1, n + 1):
            seq += [bp_(i, j), b_(i, j), bp_(i, j)]
        seq.append(a_(i))
    return seq


def build_reduction(d: Digraph) -> ReductionArtifact:
    if d.n < 2:
        raise ReductionError("reduction needs n >= 2")
    order = _name_order(d)
    names = {name: cid for cid, name in enumerate(order)}
    ends: dict[str, list[int]] = {name: [] for name in order}
    for pos, name in enumerate(_layout(d), start=1):
        ends[name].append(pos)
    chords = []
    for name in order:
        p, q = ends[name]
        chords.append((p, q))
    return ReductionArtifact(d, ChordModel(tuple(chords)), names)


# ---------------------------------------------------------------------------
# validation

@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, check: str, message: str) -> None:
        self.violations.append(f"({check}) {message}")


def validate_reduction(art: ReductionArtifact) -> ValidationReport:
    """Check chord counts and the required / forbidden crossings of the construction."""
    report = ValidationReport()
    n, m = art.digraph.n, art.digraph.m
    g = art.model.graph
    names = art.names
    counts = art.type_counts()
    for t, want in expected_counts(n, m).items():
        if counts[t] != want:
            report.add("count", f"{counts[t]} type-{t} chords, expected {want}")
    if art.model.m != expected_total(n, m):
        report.add("count", f"{art.model.m} chords, expected {expected_total(n, m)}")
    if len(names) != art.model.m or sorted(names.values()) != list(range(art.model.m)):
        report.add("count", "name table does not cover chord ids 0..m-1 exactly once")

    def have(*xs: str) -> bool:
        return all(x in names and names[x] < g.n for x in xs)

    def crosses(x: str, y: str) -> bool:
        return names[y] in g.adj[names[x]]

    def nbr_names(x: str) -> set[str]:
        return {art.name_of(v) for v in g.adj[names[x]]}

    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    lr = [x for x in names if chord_type(x) in ("l", "r")]
    for idx, x in enumerate(sorted(lr)):
        for y in sorted(lr)[idx + 1:]:
            if crosses(x, y):
                report.add("a", f"{x} crosses {y}")
    for i, j in cells:
        for side in (l_(i, j), r_(i, j)):
            if have(c_(i, j), side) and not crosses(c_(i, j), side):
                report.add("b", f"{c_(i, j)} does not cross {side}")
    for x, y in art.digraph.edges:
        for j in range(1, n):
            e = e_(x, y, j)
            if not have(e):
                report.add("count", f"missing {e}")
                continue
            for other in (r_(x, j), l_(y, j + 1), f_(j)):
                if have(other) and not crosses(e, other):
                    report.add("c", f"{e} does not cross {other}")
    fs = [f_(j) for j in range(1, n) if have(f_(j))]
    for idx, x in enumerate(fs):
        for y in fs[idx + 1:]:
            if crosses(x, y):
                report.add("d", f"{x} crosses {y}")
    for j in range(1, n):
        if have(fp_(j)) and nbr_names(fp_(j)) != {f_(j)}:
            report.add("e", f"{fp_(j)} crosses {sorted(nbr_names(fp_(j)))}, expected only {f_(j)}")
    for i, j in cells:
        b = b_(i, j)
        if not have(b):
            continue
        if have(c_(i, j)) and not crosses(b, c_(i, j)):
            report.add("f", f"{b} does not cross {c_(i, j)}")
        for side in (l_(i, j), r_(i, j)):
            if have(side) and crosses(b, side):
                report.add("f", f"{b} crosses {side}")
    for i in range(1, n + 1):
        if have(a_(i)):
            want = {b_(i, j) for j in range(1, n + 1)} | {ap_(i)}
            if nbr_names(a_(i)) != want:
                report.add("g", f"{a_(i)} crosses {sorted(nbr_names(a_(i)))}")
        if have(ap_(i)) and nbr_names(ap_(i)) != {a_(i)}:
            report.add("h", f"{ap_(i)} crosses {sorted(nbr_names(ap_(i)))}, expected only {a_(i)}")
        for j in range(1, n + 1):
            if have(bp_(i, j)) and nbr_names(bp_(i, j)) != {b_(i, j)}:
                report.add("h", f"{bp_(i, j)} crosses {sorted(nbr_names(bp_(i, j)))}, expected only {b_(i, j)}")
    return report


# ---------------------------------------------------------------------------
# witness conversions

def pds_from_ham_path(art: ReductionArtifact, path: Sequence[int] | ReductionWitness) -> frozenset[int]:
    """Paired-dominating set of size ``2n^2 + 2n - 2`` built from a Hamiltonian path."""
    if isinstance(path, ReductionWitness):
        path = path.path
    path = tuple(path)
    if not art.digraph.is_hamiltonian_path(path):
        raise WitnessError(f"{path} is not a Hamiltonian path from 1 to {art.n}")
    n = art.n
    where = ReductionWitness(path).position
    chosen = [b_(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    chosen += [f_(j) for j in range(1, n)]
    chosen += [a_(i) for i in range(1, n + 1)]
    chosen += [e_(path[j - 1], path[j], j) for j in range(1, n)]
    chosen += [c_(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if j != where[i]]
    return art.ids(chosen)


def ham_path_from_pds(art: ReductionArtifact, d: Iterable[int]) -> tuple[int, ...]:
    """Read a Hamiltonian path back from a target-size paired-dominating set."""
    d = frozenset(d)
    g = art.model.graph
    if any(not 0 <= c < g.n for c in d):
        raise WitnessError("chord id outside the model")
    if len(d) != art.target or not is_paired_dominating_set(g, d):
        raise WitnessError("not a target-size PDS")
    matching = perfect_matching(g, d)
    assert matching is not None
    mate = {}
    for u, v in matching:
        mate[u], mate[v] = v, u
    n = art.n
    at_position: dict[int, int] = {}
    for i in range(1, n + 1):
        partner = art.name_of(mate[art.id(a_(i))])
        if chord_type(partner) != "b":
            raise WitnessError(f"extraction failed: {a_(i)} matched with {partner}")
        j = int(partner.split("^")[1])
        if j in at_position:
            raise WitnessError(f"extraction failed: position {j} used twice")
        at_position[j] = i
    path = tuple(at_position[j] for j in range(1, n + 1))
    if not art.digraph.is_hamiltonian_path(path):
        raise WitnessError(f"extraction failed: {path} is not a Hamiltonian path")
    return path


# ---------------------------------------------------------------------------
# name table files

def serialize_name_table(art: ReductionArtifact) -> str:
    rows = sorted(art.names.items(), key=lambda kv: kv[1])
    return "".join(f"{name} {cid}\n" for name, cid in rows)


def parse_name_table(text: str) -> dict[str, int]:
    names: dict[str, int] = {}
    for lineno, toks in _content_lines(text):
        if len(toks) != 2:
            raise ParseError("expected '<name> <id>'", lineno)
        name = toks[0]
        try:
            chord_type(name)
        except ValueError:
            raise ParseError(f"unknown chord name {name!r}", lineno) from None
        (cid,) = _ints(toks[1:], lineno, 1)
        if name in names:
            raise ParseError(f"duplicate name {name}", lineno)
        names[name] = cid
    return names


def load_artifact(digraph: Digraph, model: ChordModel, names: dict[str, int]) -> ReductionArtifact:
    if model.sides is not None:
        raise ValueError("reduction artifacts are circle models")
    return ReductionArtifact(digraph, model, names)
