"""Deterministically labeled digraphs (inverse automata).

Vertices are dense ints 0..n-1 internally; the JSON file format uses opaque
string ids.  Edges are (src, dst, label) triples with labels in 1..alphabet.
Determinism means: at most one outgoing and at most one incoming edge per
label at every vertex.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .words import Word, format_word, is_cyclically_reduced

Edge = tuple[int, int, int]  # (src, dst, label)


@dataclass(frozen=True)
class DeterminismViolation:
    vertex: int
    label: int
    direction: str  # "outgoing" or "incoming"
    edge_indices: tuple[int, ...]

    def __str__(self):
        return (
            f"vertex {self.vertex}: {len(self.edge_indices)} {self.direction} "
            f"edges with label {self.label}"
        )


@dataclass(frozen=True)
class LabeledDigraph:
    alphabet: int
    num_vertices: int
    edges: tuple[Edge, ...]
    basepoint: int | None = None

    def __post_init__(self):
        if self.alphabet < 0:
            raise ValueError("alphabet size must be >= 0")
        if self.num_vertices < 0:
            raise ValueError("vertex count must be >= 0")
        for s, d, l in self.edges:
            if not (0 <= s < self.num_vertices and 0 <= d < self.num_vertices):
                raise ValueError(f"edge ({s},{d},{l}) has endpoint outside vertex range")
            if not (1 <= l <= self.alphabet):
                raise ValueError(f"edge ({s},{d},{l}) has label outside 1..{self.alphabet}")
        if self.basepoint is not None and not (0 <= self.basepoint < self.num_vertices):
            raise ValueError("basepoint is not a vertex")

    # Maps are only meaningful on deterministic graphs; callers that accept
    # nondeterministic input (fold) never touch them.
    @cached_property
    def out_map(self) -> dict[tuple[int, int], int]:
        """(vertex, label) -> edge index, following the edge forwards."""
        return {(s, l): i for i, (s, d, l) in enumerate(self.edges)}

    @cached_property
    def in_map(self) -> dict[tuple[int, int], int]:
        """(vertex, label) -> edge index, crossing the edge backwards."""
        return {(d, l): i for i, (s, d, l) in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Undirected neighbour lists, for connectivity."""
        nbrs: list[set[int]] = [set() for _ in range(self.num_vertices)]
        for s, d, _ in self.edges:
            nbrs[s].add(d)
            nbrs[d].add(s)
        return tuple(tuple(sorted(x)) for x in nbrs)


def validate(g: LabeledDigraph) -> list[DeterminismViolation]:
    """All determinism violations; empty iff g is a valid inverse automaton."""
    by_out: dict[tuple[int, int], list[int]] = {}
    by_in: dict[tuple[int, int], list[int]] = {}
    for i, (s, d, l) in enumerate(g.edges):
        by_out.setdefault((s, l), []).append(i)
        by_in.setdefault((d, l), []).append(i)
    out = [
        DeterminismViolation(v, l, "outgoing", tuple(idxs))
        for (v, l), idxs in sorted(by_out.items())
        if len(idxs) > 1
    ]
    out += [
        DeterminismViolation(v, l, "incoming", tuple(idxs))
        for (v, l), idxs in sorted(by_in.items())
        if len(idxs) > 1
    ]
    return out


def require_valid(g: LabeledDigraph) -> None:
    violations = validate(g)
    if violations:
        raise ValueError(
            "graph is not deterministic: " + "; ".join(str(v) for v in violations)
        )


def components(g: LabeledDigraph) -> list[frozenset[int]]:
    """Connected components (edge direction ignored), sorted by min vertex."""
    seen = [False] * g.num_vertices
    comps = []
    for start in range(g.num_vertices):
        if seen[start]:
            continue
        comp = []
        queue = deque([start])
        seen[start] = True
        while queue:
            v = queue.popleft()
            comp.append(v)
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: LabeledDigraph) -> bool:
    return g.num_vertices > 0 and len(components(g)) == 1


def induced_subgraph(g: LabeledDigraph, vertices: frozenset[int]) -> LabeledDigraph:
    """Subgraph on the given vertices (renumbered densely, order preserved)."""
    order = sorted(vertices)
    vmap = {v: i for i, v in enumerate(order)}
    edges = tuple(
        (vmap[s], vmap[d], l) for (s, d, l) in g.edges if s in vertices and d in vertices
    )
    base = g.basepoint if g.basepoint in vertices else None
    return LabeledDigraph(g.alphabet, len(order), edges,
                          vmap[base] if base is not None else None)


def component_containing(g: LabeledDigraph, v: int) -> LabeledDigraph:
    for comp in components(g):
        if v in comp:
            return induced_subgraph(g, comp)
    raise ValueError(f"vertex {v} not in graph")


@dataclass(frozen=True)
class BettiReport:
    per_component: tuple[tuple[frozenset[int], int], ...]
    total: int


def betti(g: LabeledDigraph) -> BettiReport:
    """First Betti numbers, per component and total (|E| - |V| + #components)."""
    if g.num_vertices == 0:
        raise ValueError("betti: empty vertex set")
    comps = components(g)
    per = []
    for comp in comps:
        e = sum(1 for s, d, _ in g.edges if s in comp)
        per.append((comp, e - len(comp) + 1))
    return BettiReport(tuple(per), sum(b for _, b in per))


# ---------------------------------------------------------------------------
# Stallings folding


def fold(g: LabeledDigraph, rng: random.Random | None = None) -> LabeledDigraph:
    """Fold g until deterministic.

    Repeatedly identifies the two targets (resp. sources) of a same-label edge
    pair sharing a source (resp. target), merging duplicate parallel edges.
    The result is independent of the fold order up to canonical form; passing
    an rng randomizes the order (used to test exactly that).
    """
    parent = list(range(g.num_vertices))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    while True:
        edges = {(find(s), find(d), l) for s, d, l in g.edges}
        merges: list[tuple[int, int]] = []
        by_out: dict[tuple[int, int], int] = {}
        by_in: dict[tuple[int, int], int] = {}
        for s, d, l in sorted(edges):
            if (s, l) in by_out:
                merges.append((d, by_out[s, l]))
            else:
                by_out[s, l] = d
            if (d, l) in by_in:
                merges.append((s, by_in[d, l]))
            else:
                by_in[d, l] = s
        merges = [(a, b) for a, b in merges if a != b]
        if not merges:
            break
        a, b = rng.choice(merges) if rng is not None else merges[0]
        parent[find(a)] = find(b)

    roots = sorted({find(v) for v in range(g.num_vertices)})
    vmap = {r: i for i, r in enumerate(roots)}
    new_edges = tuple(sorted({(vmap[find(s)], vmap[find(d)], l) for s, d, l in g.edges}))
    base = vmap[find(g.basepoint)] if g.basepoint is not None else None
    return LabeledDigraph(g.alphabet, len(roots), new_edges, base)


def core(g: LabeledDigraph) -> LabeledDigraph:
    """Spur removal: delete degree-1 vertices other than the basepoint."""
    if g.basepoint is None:
        raise ValueError("core: graph has no basepoint")
    require_valid(g)
    alive = set(range(g.num_vertices))
    edges = set(range(len(g.edges)))
    while True:
        degree: dict[int, int] = {v: 0 for v in alive}
        for i in edges:
            s, d, _ = g.edges[i]
            degree[s] += 1
            degree[d] += 1
        spurs = {v for v in alive if degree[v] == 1 and v != g.basepoint}
        if not spurs:
            break
        alive -= spurs
        edges = {i for i in edges
                 if g.edges[i][0] in alive and g.edges[i][1] in alive}
    order = sorted(alive)
    vmap = {v: i for i, v in enumerate(order)}
    new_edges = tuple((vmap[s], vmap[d], l) for i in sorted(edges)
                      for s, d, l in [g.edges[i]])
    return LabeledDigraph(g.alphabet, len(order), new_edges, vmap[g.basepoint])


def fiber_product(g1: LabeledDigraph, g2: LabeledDigraph) -> LabeledDigraph:
    """Vertices are vertex pairs, edges are same-label edge pairs."""
    if g1.alphabet != g2.alphabet:
        raise ValueError(
            f"alphabet mismatch: {g1.alphabet} vs {g2.alphabet}"
        )
    require_valid(g1)
    require_valid(g2)
    n2 = g2.num_vertices

    def pair(v1: int, v2: int) -> int:
        return v1 * n2 + v2

    edges = tuple(
        (pair(s1, s2), pair(d1, d2), l1)
        for s1, d1, l1 in g1.edges
        for s2, d2, l2 in g2.edges
        if l1 == l2
    )
    base = None
    if g1.basepoint is not None and g2.basepoint is not None:
        base = pair(g1.basepoint, g2.basepoint)
    return LabeledDigraph(g1.alphabet, g1.num_vertices * n2, edges, base)


# ---------------------------------------------------------------------------
# Canonical form


def _bfs_numbering(g: LabeledDigraph, start: int) -> LabeledDigraph:
    number = {start: 0}
    order = [start]
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for l in range(1, g.alphabet + 1):
            for lookup in (g.out_map, g.in_map):
                i = lookup.get((v, l))
                if i is None:
                    continue
                s, d, _ = g.edges[i]
                u = d if lookup is g.out_map else s
                if u not in number:
                    number[u] = len(order)
                    order.append(u)
                    queue.append(u)
    edges = tuple(sorted((number[s], number[d], l) for s, d, l in g.edges))
    base = number[g.basepoint] if g.basepoint is not None else None
    return LabeledDigraph(g.alphabet, g.num_vertices, edges, base)


def canonical_form(g: LabeledDigraph) -> LabeledDigraph:
    """BFS renumbering from the basepoint (or the best start vertex).

    Two connected deterministic graphs are label-isomorphic, respecting
    basepoints, iff their canonical forms are equal.
    """
    require_valid(g)
    if not is_connected(g):
        raise ValueError("canonical_form: graph must be connected")
    if g.basepoint is not None:
        return _bfs_numbering(g, g.basepoint)
    return min(
        (_bfs_numbering(g, start) for start in range(g.num_vertices)),
        key=lambda h: h.edges,
    )


def isomorphic(g1: LabeledDigraph, g2: LabeledDigraph) -> bool:
    return canonical_form(g1) == canonical_form(g2)


# ---------------------------------------------------------------------------
# Constructions


def rose(alphabet: int) -> LabeledDigraph:
    """One vertex with one loop per generator; the fiber-product identity."""
    return LabeledDigraph(
        alphabet, 1, tuple((0, 0, l) for l in range(1, alphabet + 1)), 0
    )


def circle(w: Word, alphabet: int | None = None) -> LabeledDigraph:
    """The cycle of length |w| reading w once around, based at its start."""
    if not w:
        raise ValueError("circle: word must be nonempty")
    if not is_cyclically_reduced(w):
        raise ValueError("circle: word must be cyclically reduced")
    n = len(w)
    edges = []
    for i, x in enumerate(w):
        j = (i + 1) % n
        edges.append((i, j, x) if x > 0 else ((j, i, -x)))
    return LabeledDigraph(alphabet or max(abs(x) for x in w), n, tuple(edges), 0)


def wedge_of_words(words: list[Word], alphabet: int) -> LabeledDigraph:
    """Subdivided loops, one per word, wedged at a base vertex (unfolded)."""
    edges: list[Edge] = []
    n = 1
    for w in words:
        if not w:
            continue
        prev = 0
        for i, x in enumerate(w):
            nxt = 0 if i == len(w) - 1 else n
            if i != len(w) - 1:
                n += 1
            edges.append((prev, nxt, x) if x > 0 else (nxt, prev, -x))
            prev = nxt
    return LabeledDigraph(alphabet, n, tuple(edges), 0)


# ---------------------------------------------------------------------------
# Serialization

def to_json(g: LabeledDigraph) -> dict:
    obj = {
        "alphabet": g.alphabet,
        "vertices": [f"v{i}" for i in range(g.num_vertices)],
        "edges": [
            {"src": f"v{s}", "dst": f"v{d}", "label": l} for s, d, l in g.edges
        ],
    }
    if g.basepoint is not None:
        obj["basepoint"] = f"v{g.basepoint}"
    return obj


def from_json(obj: dict) -> LabeledDigraph:
    names = list(obj["vertices"])
    if len(set(names)) != len(names):
        raise ValueError("duplicate vertex ids")
    vmap = {name: i for i, name in enumerate(names)}
    try:
        edges = tuple(
            (vmap[e["src"]], vmap[e["dst"]], int(e["label"])) for e in obj["edges"]
        )
    except KeyError as exc:
        raise ValueError(f"unknown vertex id {exc}") from exc
    base = obj.get("basepoint")
    if base is not None:
        if base not in vmap:
            raise ValueError(f"unknown basepoint {base!r}")
        base = vmap[base]
    return LabeledDigraph(int(obj["alphabet"]), len(names), edges, base)


def loads(text: str) -> LabeledDigraph:
    return from_json(json.loads(text))


def dumps(g: LabeledDigraph) -> str:
    return json.dumps(to_json(g), indent=2)


def to_dot(g: LabeledDigraph) -> str:
    """DOT export; labels rendered as letters, inverses implicit."""
    lines = ["digraph G {"]
    for v in range(g.num_vertices):
        shape = ' [shape=doublecircle]' if v == g.basepoint else ""
        lines.append(f'  v{v}{shape};')
    for s, d, l in g.edges:
        lines.append(f'  v{s} -> v{d} [label="{format_word((l,))}"];')
    lines.append("}")
    return "\n".join(lines)
