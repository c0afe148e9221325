"""Finitely generated subgroups of free groups via based core graphs."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .graphs import (
    LabeledDigraph,
    betti,
    canonical_form,
    circle,
    component_containing,
    core,
    fiber_product,
    fold,
    is_connected,
    require_valid,
    wedge_of_words,
)
from .cycles import _trace, decompose
from .words import Word, format_word, free_reduce, invert, require_simple_cyclic


@dataclass(frozen=True)
class SubgroupGraph:
    """Folded, based, core labeled digraph in canonical form, plus the
    generating words it was built from."""

    graph: LabeledDigraph
    generators: tuple[Word, ...]

    def __post_init__(self):
        require_valid(self.graph)
        if self.graph.basepoint is None:
            raise ValueError("subgroup graph needs a basepoint")


def stallings_graph(gens: list[Word], alphabet: int) -> SubgroupGraph:
    """Fold and core the wedge of subdivided generator loops."""
    if alphabet < 1:
        raise ValueError("alphabet must be nonempty")
    reduced = []
    for w in gens:
        r = free_reduce(w)
        if r != tuple(w):
            warnings.warn(
                f"generator {format_word(tuple(w))} was not freely reduced; "
                f"using {format_word(r) or '(empty)'}",
                stacklevel=2,
            )
        if r:
            reduced.append(r)
    g = canonical_form(core(fold(wedge_of_words(reduced, alphabet))))
    return SubgroupGraph(g, tuple(reduced))


def rank(h: SubgroupGraph) -> int:
    return betti(h.graph).total


def is_trivial(h: SubgroupGraph) -> bool:
    return h.graph.num_vertices == 1 and not h.graph.edges


def contains(h: SubgroupGraph, w: Word) -> bool:
    """Membership: the freely reduced word traces closed at the basepoint."""
    r = free_reduce(w)
    if not r:
        return True
    res = _trace(h.graph, h.graph.basepoint, r)
    return res is not None and res[0] == h.graph.basepoint


def conjugate(h: SubgroupGraph, g: Word) -> SubgroupGraph:
    """The subgroup graph of g^-1 H g, by re-folding conjugated generators."""
    g = free_reduce(g)
    conj = [free_reduce(invert(g) + x + g) for x in h.generators]
    return stallings_graph(conj, h.graph.alphabet)


def intersect(h1: SubgroupGraph, h2: SubgroupGraph) -> SubgroupGraph:
    """Based component of the fiber product, cored: the intersection."""
    if h1.graph.alphabet != h2.graph.alphabet:
        raise ValueError("alphabet mismatch")
    fp = fiber_product(h1.graph, h2.graph)
    based = component_containing(fp, fp.basepoint)
    return SubgroupGraph(canonical_form(core(based)), ())


@dataclass(frozen=True)
class ConjugatesReport:
    word: Word
    count: int
    rank: int
    passed: bool


def count_conjugates_meeting(h: SubgroupGraph, w: Word) -> ConjugatesReport:
    """Distinct conjugates of the maximal cyclic subgroup generated by w that
    meet H nontrivially: one per cycle class; at most rank(H)."""
    require_simple_cyclic(w)
    count = decompose(h.graph, w).class_count
    r = rank(h)
    return ConjugatesReport(w, count, r, count <= r)


def reduced_rank(b: int) -> int:
    return max(b - 1, 0)


@dataclass(frozen=True)
class RedRankReport:
    per_component: tuple[tuple[frozenset[int], int], ...]
    lhs: int  # summed reduced ranks of the product components
    rhs: int  # product of the factors' reduced ranks
    passed: bool


def check_shnc(g1: SubgroupGraph, g2: SubgroupGraph) -> RedRankReport:
    """Strengthened Hanna Neumann inequality on the fiber product."""
    for h in (g1, g2):
        if not is_connected(h.graph):
            raise ValueError("check_shnc: factors must be connected")
    fp = fiber_product(g1.graph, g2.graph)
    report = betti(fp)
    per = tuple((comp, reduced_rank(b)) for comp, b in report.per_component)
    lhs = sum(r for _, r in per)
    rhs = reduced_rank(betti(g1.graph).total) * reduced_rank(betti(g2.graph).total)
    return RedRankReport(per, lhs, rhs, lhs <= rhs)


@dataclass(frozen=True)
class RestatedReport:
    word: Word
    component_bettis: tuple[int, ...]
    lhs: int
    rhs: int
    class_count: int  # from the sigma_w decomposition; must equal lhs
    passed: bool


def check_restated_inequality(cycle_w: Word, g2: LabeledDigraph) -> RestatedReport:
    """Betti-number form of the counting inequality via a fiber product with
    the circle reading w; cross-checked against the orbit-cycle count."""
    require_simple_cyclic(cycle_w)
    require_valid(g2)
    if g2.num_vertices == 0:
        raise ValueError("graph is empty")
    alphabet = max(g2.alphabet, max(abs(x) for x in cycle_w))
    g1 = circle(cycle_w, alphabet)
    if g2.alphabet != alphabet:
        g2 = LabeledDigraph(alphabet, g2.num_vertices, g2.edges, g2.basepoint)
    fp = fiber_product(g1, g2)
    bettis = tuple(b for _, b in betti(fp).per_component)
    lhs = sum(bettis)
    rhs = betti(g1).total * betti(g2).total
    k = decompose(g2, cycle_w).class_count
    return RestatedReport(cycle_w, bettis, lhs, rhs, k, lhs <= rhs and lhs == k)


@dataclass(frozen=True)
class ConjugateIntersectionReport:
    applicable: bool
    reasons: tuple[str, ...]
    intersection_trivial: bool
    passed: bool


def check_conjugate_intersection(
    h: SubgroupGraph, cosets: list[Word]
) -> ConjugateIntersectionReport:
    """More distinct cosets than rank forces the conjugate intersection of an
    isolated subgroup to be trivial.

    Isolation is certified only for free factors generated by basis letters
    (graph = rose on a letter subset); anything else is rejected.
    """
    g = h.graph
    is_letter_rose = (
        g.num_vertices == 1
        and all(s == d == 0 for s, d, _ in g.edges)
        and len({l for _, _, l in g.edges}) == len(g.edges)
    )
    if not is_letter_rose:
        raise ValueError(
            "isolation not certified: subgroup is not a free factor generated "
            "by basis letters"
        )
    for i in range(len(cosets)):
        for j in range(i + 1, len(cosets)):
            if contains(h, tuple(cosets[i]) + invert(tuple(cosets[j]))):
                raise ValueError(
                    f"cosets {i} and {j} coincide: "
                    f"H{format_word(free_reduce(tuple(cosets[i])))} = "
                    f"H{format_word(free_reduce(tuple(cosets[j])))}"
                )
    if len(cosets) <= rank(h):
        return ConjugateIntersectionReport(
            False, (f"need more than rank(H) = {rank(h)} cosets",), False, True
        )
    result = conjugate(h, tuple(cosets[0]))
    for g_i in cosets[1:]:
        result = intersect(result, conjugate(h, tuple(g_i)))
        if is_trivial(result):
            break
    trivial = is_trivial(result)
    return ConjugateIntersectionReport(True, (), trivial, trivial)
