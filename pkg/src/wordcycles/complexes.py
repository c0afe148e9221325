"""2-complexes over an inverse automaton: discs glued along cycle classes,
free-face collapsing, nonpositive-immersion checks, and staggered
presentations.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graphs import LabeledDigraph, betti, is_connected, require_valid
from .cycles import Step, decompose
from .words import (
    Word,
    format_word,
    is_cyclically_reduced,
    is_simple,
    require_simple_cyclic,
)

Cell = tuple[Step, ...]  # closed combinatorial boundary path


@dataclass(frozen=True)
class TwoComplex:
    skeleton: LabeledDigraph
    cells: tuple[Cell, ...]

    def __post_init__(self):
        for k, cell in enumerate(self.cells):
            if not cell:
                raise ValueError(f"cell {k} has an empty boundary")
            v = self._step_start(cell[0])
            for step in cell:
                if self._step_start(step) != v:
                    raise ValueError(f"cell {k} boundary is not a path")
                v = self._step_end(step)
            if v != self._step_start(cell[0]):
                raise ValueError(f"cell {k} boundary is not closed")

    def _step_start(self, step: Step) -> int:
        s, d, _ = self.skeleton.edges[step[0]]
        return s if step[1] > 0 else d

    def _step_end(self, step: Step) -> int:
        s, d, _ = self.skeleton.edges[step[0]]
        return d if step[1] > 0 else s


def euler_characteristic(x: TwoComplex) -> int:
    return x.skeleton.num_vertices - len(x.skeleton.edges) + len(x.cells)


def build_gamma_w(g: LabeledDigraph, w: Word) -> TwoComplex:
    """One disc per cycle class, glued along the class trace path."""
    dec = decompose(g, w)
    return TwoComplex(g, tuple(c.path for c in dec.classes))


def free_faces(x: TwoComplex) -> list[tuple[int, int]]:
    """(edge index, cell index) pairs where the cell boundary traverses the
    edge exactly once and no other cell touches it."""
    return _free_faces(x.skeleton, x.cells, set(range(len(x.cells))),
                       set(range(len(x.skeleton.edges))))


def _free_faces(
    g: LabeledDigraph,
    cells: tuple[Cell, ...],
    live_cells: set[int],
    live_edges: set[int],
) -> list[tuple[int, int]]:
    count: Counter[int] = Counter()
    owner: dict[int, int] = {}
    for k in live_cells:
        for edge_index, _ in cells[k]:
            count[edge_index] += 1
            owner[edge_index] = k
    return sorted(
        (e, owner[e]) for e in live_edges if count.get(e) == 1
    )


@dataclass(frozen=True)
class CollapseResult:
    collapses: bool
    sequence: tuple[tuple[int, int], ...]  # (edge, cell) pairs, in order
    exhaustive_used: bool


def collapses_to_tree(x: TwoComplex, max_cells_exhaustive: int = 12) -> CollapseResult:
    """Search for a free-face collapse order eliminating every 2-cell and
    leaving a Betti-0 graph.

    Greedy first; on failure, depth-first over collapse orders with
    memoization on the remaining cell/edge set.  The exhaustive phase is
    bounded by max_cells_exhaustive cells.
    """
    g = x.skeleton
    if not is_connected(g):
        raise ValueError("collapses_to_tree: skeleton must be connected")

    def is_tree(edges: set[int]) -> bool:
        b = len(edges) - g.num_vertices + _component_count(g, edges)
        return b == 0

    def greedy(cells_left: set[int], edges_left: set[int]):
        seq = []
        while cells_left:
            faces = _free_faces(g, x.cells, cells_left, edges_left)
            if not faces:
                return None
            e, k = faces[0]
            cells_left.discard(k)
            edges_left.discard(e)
            seq.append((e, k))
        return seq if is_tree(edges_left) else None

    all_cells = set(range(len(x.cells)))
    all_edges = set(range(len(g.edges)))
    seq = greedy(set(all_cells), set(all_edges))
    if seq is not None:
        return CollapseResult(True, tuple(seq), False)
    if not all_cells:
        return CollapseResult(False, (), False)

    if len(all_cells) > max_cells_exhaustive:
        raise ValueError(
            f"exhaustive collapse search needs <= {max_cells_exhaustive} cells, "
            f"got {len(all_cells)}"
        )
    dead: set[tuple[frozenset[int], frozenset[int]]] = set()

    def search(cells_left: frozenset[int], edges_left: frozenset[int]):
        if not cells_left:
            return [] if is_tree(set(edges_left)) else None
        if (cells_left, edges_left) in dead:
            return None
        for e, k in _free_faces(g, x.cells, set(cells_left), set(edges_left)):
            rest = search(cells_left - {k}, edges_left - {e})
            if rest is not None:
                return [(e, k)] + rest
        dead.add((cells_left, edges_left))
        return None

    seq = search(frozenset(all_cells), frozenset(all_edges))
    if seq is None:
        return CollapseResult(False, (), True)
    return CollapseResult(True, tuple(seq), True)


def _component_count(g: LabeledDigraph, edges: set[int]) -> int:
    parent = list(range(g.num_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i in edges:
        s, d, _ = g.edges[i]
        parent[find(s)] = find(d)
    return len({find(v) for v in range(g.num_vertices)})


@dataclass(frozen=True)
class EqualityCollapseReport:
    word: Word
    applicable: bool  # class count == Betti number
    class_count: int
    betti: int
    collapses: bool | None
    passed: bool


def check_equality_collapse(g: LabeledDigraph, w: Word) -> EqualityCollapseReport:
    """Equality of class count and Betti number forces the disc complex to
    collapse to a tree."""
    if not is_connected(g):
        raise ValueError("check_equality_collapse: graph must be connected")
    dec = decompose(g, w)
    b = betti(g).total
    if dec.class_count != b:
        return EqualityCollapseReport(w, False, dec.class_count, b, None, True)
    result = collapses_to_tree(TwoComplex(g, tuple(c.path for c in dec.classes)))
    return EqualityCollapseReport(w, True, dec.class_count, b, result.collapses,
                                  result.collapses)


@dataclass(frozen=True)
class NpiReport:
    word: Word
    euler: int
    branch: str  # "chi", "contractible", "inconclusive", "fail"
    passed: bool


def check_npi(
    g: LabeledDigraph, w: Word, attachments: list[tuple[int, int]]
) -> NpiReport:
    """Nonpositive-immersion check for a complex over the one-relator target.

    Each attachment (v, n) glues a disc along the closed trace of w^n at v.
    The encoding is an immersion exactly when n is the minimal closing
    exponent at v and the attachment vertices lie in pairwise distinct
    sigma_w-orbit cycles; both are enforced.  Verdict: Euler characteristic
    <= 0, or collapsible to a tree (hence contractible).
    """
    if not is_connected(g):
        raise ValueError("check_npi: graph must be connected")
    require_simple_cyclic(w)
    dec = decompose(g, w)
    by_vertex: dict[int, tuple[int, Cell]] = {}
    for c in dec.classes:
        for i, v in enumerate(c.vertices):
            # trace of w^period based at v: rotate the class path
            offset = i * len(w)
            by_vertex[v] = (c.period, c.path[offset:] + c.path[:offset])

    cells: list[Cell] = []
    used_orbits: set[int] = set()
    orbit_of = {v: j for j, c in enumerate(dec.classes) for v in c.vertices}
    for v, n in attachments:
        if v not in by_vertex:
            raise ValueError(f"attachment at vertex {v}: w^n never closes there")
        period, path = by_vertex[v]
        if n != period:
            raise ValueError(
                f"attachment at vertex {v}: exponent {n} is not the minimal "
                f"closing exponent {period}, so this is not an immersion"
            )
        if orbit_of[v] in used_orbits:
            raise ValueError(
                f"attachment at vertex {v}: duplicates another attachment's "
                "cycle class, so this is not an immersion"
            )
        used_orbits.add(orbit_of[v])
        cells.append(path)

    y = TwoComplex(g, tuple(cells))
    chi = euler_characteristic(y)
    if chi <= 0:
        return NpiReport(w, chi, "chi", True)
    try:
        result = collapses_to_tree(y)
    except ValueError:
        return NpiReport(w, chi, "inconclusive", False)
    if result.collapses:
        return NpiReport(w, chi, "contractible", True)
    return NpiReport(w, chi, "fail", False)


# ---------------------------------------------------------------------------
# Staggered presentations


@dataclass(frozen=True)
class StaggeredPresentation:
    """Relators listed in their total order; ordered_letters is the ordered
    subset of generators, listed in increasing order."""

    alphabet: int
    relators: tuple[Word, ...]
    ordered_letters: tuple[int, ...]

    def __post_init__(self):
        for l in self.ordered_letters:
            if not (1 <= l <= self.alphabet):
                raise ValueError(f"ordered letter {l} outside alphabet")
        if len(set(self.ordered_letters)) != len(self.ordered_letters):
            raise ValueError("ordered letters must be distinct")


def is_staggered(p: StaggeredPresentation) -> tuple[bool, list[str]]:
    """Each relator cyclically reduced and using an ordered letter, with
    min/max ordered letters strictly increasing along the relator order."""
    position = {l: i for i, l in enumerate(p.ordered_letters)}
    diagnostics: list[str] = []
    extents: list[tuple[int, int]] = []
    for idx, r in enumerate(p.relators):
        name = format_word(r) or "(empty)"
        if not r or not is_cyclically_reduced(r):
            diagnostics.append(f"relator {idx} ({name}) is not cyclically reduced")
            continue
        positions = [position[abs(x)] for x in r if abs(x) in position]
        if not positions:
            diagnostics.append(f"relator {idx} ({name}) traverses no ordered letter")
            continue
        extents.append((min(positions), max(positions)))
    if len(extents) == len(p.relators):
        for i in range(1, len(extents)):
            lo_prev, hi_prev = extents[i - 1]
            lo, hi = extents[i]
            if lo <= lo_prev:
                diagnostics.append(
                    f"relators {i - 1} and {i}: minimal ordered letters not "
                    "strictly increasing"
                )
            if hi <= hi_prev:
                diagnostics.append(
                    f"relators {i - 1} and {i}: maximal ordered letters not "
                    "strictly increasing"
                )
    return not diagnostics, diagnostics


@dataclass(frozen=True)
class MultiwordReport:
    per_relator: tuple[int, ...]
    total: int
    betti: int
    passed: bool


def check_multiword_inequality(
    g: LabeledDigraph, p: StaggeredPresentation
) -> MultiwordReport:
    """Summed class counts over the relators of a staggered simple
    presentation stay at most the Betti number."""
    ok, diagnostics = is_staggered(p)
    if not ok:
        raise ValueError("presentation is not staggered: " + "; ".join(diagnostics))
    for r in p.relators:
        if not is_simple(r):
            raise ValueError(f"relator {format_word(r)} is a proper power")
    if g.alphabet != p.alphabet:
        raise ValueError("graph and presentation alphabets differ")
    require_valid(g)
    if not is_connected(g):
        raise ValueError("check_multiword_inequality: graph must be connected")
    counts = tuple(decompose(g, r).class_count for r in p.relators)
    b = betti(g).total
    total = sum(counts)
    return MultiwordReport(counts, total, b, total <= b)
