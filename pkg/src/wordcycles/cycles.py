"""Counting cycles labeled by powers of a word in an inverse automaton.

Tracing a reduced word w from every vertex induces a partial injection
sigma_w on the vertex set.  A based w-cycle is a vertex on a sigma_w-orbit
cycle; equivalence classes of w-cycles are exactly the orbit cycles.  The
central facts checked here: the class count is at most the first Betti
number, and strictly less with multiplicity when every edge is traversed
at least twice.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graphs import LabeledDigraph, betti, is_connected, require_valid
from .words import Word, is_reduced, require_simple_cyclic

# A path step is (edge index, direction); direction -1 crosses the edge
# against its orientation.
Step = tuple[int, int]


def trace(g: LabeledDigraph, v: int, w: Word) -> tuple[int, tuple[Step, ...]] | None:
    """Follow w from v; None if some letter has no matching edge.

    Determinism makes the path unique.  Letters with sign -1 traverse an
    edge backwards.
    """
    require_valid(g)
    if not w or not is_reduced(w):
        raise ValueError("trace: word must be reduced and nonempty")
    if not (0 <= v < g.num_vertices):
        raise ValueError(f"trace: vertex {v} not in graph")
    return _trace(g, v, w)


def _trace(g: LabeledDigraph, v: int, w: Word) -> tuple[int, tuple[Step, ...]] | None:
    path: list[Step] = []
    for x in w:
        if x > 0:
            i = g.out_map.get((v, x))
            if i is None:
                return None
            path.append((i, +1))
            v = g.edges[i][1]
        else:
            i = g.in_map.get((v, -x))
            if i is None:
                return None
            path.append((i, -1))
            v = g.edges[i][0]
    return v, tuple(path)


@dataclass(frozen=True)
class WCycleClass:
    """One equivalence class: a cycle of sigma_w.

    vertices are in sigma_w order, so tracing w from vertices[i] ends at
    vertices[(i+1) % period]; path is the closed trace reading w^period
    based at vertices[0].
    """

    vertices: tuple[int, ...]
    path: tuple[Step, ...]

    @property
    def period(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class WCycleDecomposition:
    word: Word
    sigma: dict[int, int]
    witness_paths: dict[int, tuple[Step, ...]]
    classes: tuple[WCycleClass, ...]
    edge_multiplicity: dict[int, int]

    @property
    def count_with_multiplicity(self) -> int:
        return sum(c.period for c in self.classes)

    @property
    def class_count(self) -> int:
        return len(self.classes)


def decompose(g: LabeledDigraph, w: Word) -> WCycleDecomposition:
    """Cycle decomposition of sigma_w, with counts and edge multiplicities.

    Rejects words that are not cyclically reduced or not primitive; the
    caller must normalize first.
    """
    require_valid(g)
    require_simple_cyclic(w)

    sigma: dict[int, int] = {}
    witness: dict[int, tuple[Step, ...]] = {}
    for v in range(g.num_vertices):
        res = _trace(g, v, w)
        if res is not None:
            sigma[v] = res[0]
            witness[v] = res[1]
    assert len(set(sigma.values())) == len(sigma), "sigma_w must be injective"

    # Injectivity means every orbit is a simple path or a simple cycle; a
    # forward walk can only re-enter at its own starting vertex.
    on_cycle: dict[int, bool] = {}
    classes: list[WCycleClass] = []
    for start in sigma:
        if start in on_cycle:
            continue
        walk: list[int] = []
        seen: set[int] = set()
        v: int | None = start
        while v is not None and v not in on_cycle and v not in seen:
            seen.add(v)
            walk.append(v)
            v = sigma.get(v)
        if v is not None and v in seen:
            assert v == start, "walk re-entered off its start; sigma not injective?"
            for u in walk:
                on_cycle[u] = True
            path = tuple(step for u in walk for step in witness[u])
            classes.append(WCycleClass(tuple(walk), path))
        else:
            assert v is None or not on_cycle[v], "path merged into a cycle"
            for u in walk:
                on_cycle[u] = False

    multiplicity: Counter[int] = Counter()
    for c in classes:
        for edge_index, _ in c.path:
            multiplicity[edge_index] += 1
    return WCycleDecomposition(w, sigma, witness, tuple(classes), dict(multiplicity))


def oracle_counts(g: LabeledDigraph, w: Word, max_vertices: int = 8) -> tuple[int, int]:
    """Brute-force (#_w, class count) by literal path enumeration.

    Independent of decompose: walks edge lists directly, finds for each
    vertex the minimal n <= |V| with w^n closing there, and groups base
    vertices into classes by reachability along w-power paths.
    """
    require_valid(g)
    require_simple_cyclic(w)
    if g.num_vertices > max_vertices:
        raise ValueError(
            f"oracle bound exceeded: {g.num_vertices} > {max_vertices} vertices"
        )

    def step(v: int, letter: int) -> int | None:
        for s, d, l in g.edges:
            if letter > 0 and s == v and l == letter:
                return d
            if letter < 0 and d == v and l == -letter:
                return s
        return None

    def walk_word(v: int | None) -> int | None:
        for x in w:
            if v is None:
                return None
            v = step(v, x)
        return v

    base_vertices = []
    successor = {}
    for v in range(g.num_vertices):
        cur: int | None = v
        for n in range(1, g.num_vertices + 1):
            cur = walk_word(cur)
            if cur is None:
                break
            if cur == v:
                base_vertices.append(v)
                break
        nxt = walk_word(v)
        if nxt is not None:
            successor[v] = nxt

    # Union-find over base vertices: joined when a w-power path connects them.
    parent = {v: v for v in base_vertices}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for v in base_vertices:
        u = successor.get(v)
        if u in parent:
            parent[find(v)] = find(u)
    count = len(base_vertices)
    class_count = len({find(v) for v in base_vertices})
    return count, class_count


# ---------------------------------------------------------------------------
# Theorem checks


@dataclass(frozen=True)
class ComponentVerdict:
    vertices: frozenset[int]
    class_count: int
    betti: int
    passed: bool
    equality: bool


@dataclass(frozen=True)
class MainInequalityReport:
    """Class count <= first Betti number, per component and in total."""

    word: Word
    per_component: tuple[ComponentVerdict, ...]
    total_classes: int
    total_betti: int
    passed: bool


def check_main_inequality(g: LabeledDigraph, w: Word) -> MainInequalityReport:
    dec = decompose(g, w)
    report = betti(g)
    verdicts = []
    for comp, b in report.per_component:
        k = sum(1 for c in dec.classes if c.vertices[0] in comp)
        verdicts.append(ComponentVerdict(comp, k, b, k <= b, k == b))
    total_k = dec.class_count
    passed = all(v.passed for v in verdicts) and total_k <= report.total
    return MainInequalityReport(w, tuple(verdicts), total_k, report.total, passed)


def collapsed_hypothesis(g: LabeledDigraph, w: Word) -> tuple[bool, dict[int, int]]:
    """Does every edge carry total traversal multiplicity >= 2?

    Multiplicity sums traversals in either direction over all class trace
    paths; vacuously true on an edgeless graph.
    """
    if not is_connected(g):
        raise ValueError("collapsed_hypothesis: graph must be connected")
    dec = decompose(g, w)
    mult = {i: dec.edge_multiplicity.get(i, 0) for i in range(len(g.edges))}
    return all(m >= 2 for m in mult.values()), mult


@dataclass(frozen=True)
class StrictInequalityReport:
    word: Word
    applicable: bool
    reasons: tuple[str, ...]  # unmet preconditions, if any
    count_with_multiplicity: int
    betti: int
    passed: bool


def check_strict_inequality(g: LabeledDigraph, w: Word) -> StrictInequalityReport:
    """Count with multiplicity < Betti number, under the >= 2 edge hypothesis."""
    reasons = []
    if not is_connected(g):
        reasons.append("graph is not connected")
        hypothesis = False
    else:
        if g.num_vertices == 1 and not g.edges:
            reasons.append("graph is a single vertex")
        hypothesis, _ = collapsed_hypothesis(g, w)
        if not hypothesis:
            reasons.append("some edge has traversal multiplicity < 2")
    dec = decompose(g, w)
    count = dec.count_with_multiplicity
    b = betti(g).total
    applicable = not reasons
    return StrictInequalityReport(
        w, applicable, tuple(reasons), count, b, applicable and count < b
    )
