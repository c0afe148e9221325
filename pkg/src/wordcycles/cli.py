"""Command-line interface.

All graph/complex/subgroup commands read JSON from a file argument (or '-'
for standard input) and write JSON to standard output.  `verify` runs a
named property suite; exit code 0 means no failures, 1 means failures
(counterexamples are dumped to --out), 2 means invalid input.
"""

from __future__ import annotations

import json
import sys

import click

from . import complexes, cycles, graphs, subgroups, verify
from .generators import TrialConfig
from .words import (
    cyclic_reduce,
    format_word,
    free_reduce,
    invert,
    is_simple,
    parse_word,
    primitive_root,
)


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise click.UsageError(f"cannot read {path}: {exc}")


def _load_graph(path: str) -> graphs.LabeledDigraph:
    try:
        return graphs.from_json(_read_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        raise click.UsageError(f"bad graph file {path}: {exc}")


def _emit(obj) -> None:
    click.echo(json.dumps(obj, indent=2))


def _emit_graph(g: graphs.LabeledDigraph, dot: bool) -> None:
    if dot:
        click.echo(graphs.to_dot(g))
    else:
        _emit(graphs.to_json(g))


def _word(text: str):
    try:
        return parse_word(text)
    except ValueError as exc:
        raise click.UsageError(str(exc))


class _Fail(click.ClickException):
    exit_code = 2


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except (ValueError, KeyError) as exc:
        raise _Fail(str(exc))


@click.group()
def main():
    """Cycle counting in inverse automata, collapsible complexes, and
    subgroup graphs of free groups."""


# -- words -------------------------------------------------------------------


@main.group()
def words():
    """Free-group word algebra."""


@words.command("normalize")
@click.argument("word")
def words_normalize(word):
    """Reduce, cyclically reduce, and factor WORD."""
    w = _word(word)
    reduced = free_reduce(w)
    core_word, conj = cyclic_reduce(w)
    obj = {
        "input": word,
        "reduced": format_word(reduced),
        "inverse": format_word(invert(reduced)),
        "cyclic_core": format_word(core_word),
        "conjugator": format_word(conj),
    }
    if core_word:
        root, exp = primitive_root(core_word)
        obj.update(
            primitive_root=format_word(root), exponent=exp,
            simple=is_simple(core_word),
        )
    _emit(obj)


# -- graph -------------------------------------------------------------------


@main.group()
def graph():
    """Labeled digraph operations."""


_dot_flag = click.option("--dot", is_flag=True, help="emit DOT instead of JSON")


@graph.command("validate")
@click.argument("file")
def graph_validate(file):
    g = _load_graph(file)
    violations = graphs.validate(g)
    _emit({"valid": not violations, "violations": [str(v) for v in violations]})


@graph.command("betti")
@click.argument("file")
def graph_betti(file):
    g = _load_graph(file)
    report = _guard(graphs.betti, g)
    _emit(
        {
            "total": report.total,
            "per_component": [
                {"vertices": sorted(f"v{v}" for v in comp), "betti": b}
                for comp, b in report.per_component
            ],
        }
    )


@graph.command("fold")
@click.argument("file")
@_dot_flag
def graph_fold(file, dot):
    _emit_graph(_guard(graphs.fold, _load_graph(file)), dot)


@graph.command("core")
@click.argument("file")
@_dot_flag
def graph_core(file, dot):
    _emit_graph(_guard(graphs.core, _load_graph(file)), dot)


@graph.command("canon")
@click.argument("file")
@_dot_flag
def graph_canon(file, dot):
    _emit_graph(_guard(graphs.canonical_form, _load_graph(file)), dot)


@graph.command("fiber")
@click.argument("file1")
@click.argument("file2")
@_dot_flag
def graph_fiber(file1, file2, dot):
    g = _guard(graphs.fiber_product, _load_graph(file1), _load_graph(file2))
    _emit_graph(g, dot)


# -- wcycles -----------------------------------------------------------------


@main.group()
def wcycles():
    """Cycle counting for a word traced through an automaton."""


@wcycles.command("count")
@click.option("-w", "--word", "word", required=True)
@click.argument("file")
def wcycles_count(word, file):
    g = _load_graph(file)
    w = _word(word)
    res = _guard(cycles.check_main_inequality, g, w)
    _emit(
        {
            "word": format_word(w),
            "class_count": res.total_classes,
            "count_with_multiplicity": _guard(
                cycles.decompose, g, w
            ).count_with_multiplicity,
            "betti": res.total_betti,
            "inequality_holds": res.passed,
            "per_component": [
                {
                    "vertices": sorted(f"v{v}" for v in c.vertices),
                    "class_count": c.class_count,
                    "betti": c.betti,
                    "equality": c.equality,
                }
                for c in res.per_component
            ],
        }
    )


@wcycles.command("decompose")
@click.option("-w", "--word", "word", required=True)
@click.argument("file")
def wcycles_decompose(word, file):
    g = _load_graph(file)
    dec = _guard(cycles.decompose, g, _word(word))
    _emit(
        {
            "word": word,
            "classes": [
                {
                    "vertices": [f"v{v}" for v in c.vertices],
                    "period": c.period,
                    "path": [{"edge": e, "dir": d} for e, d in c.path],
                }
                for c in dec.classes
            ],
            "count_with_multiplicity": dec.count_with_multiplicity,
            "class_count": dec.class_count,
            "edge_multiplicity": {
                str(e): m for e, m in sorted(dec.edge_multiplicity.items())
            },
        }
    )


# -- complex -----------------------------------------------------------------


def _complex_to_json(x: complexes.TwoComplex) -> dict:
    return {
        "skeleton": graphs.to_json(x.skeleton),
        "cells": [[{"edge": e, "dir": d} for e, d in cell] for cell in x.cells],
    }


def _complex_from_json(obj: dict) -> complexes.TwoComplex:
    skeleton = graphs.from_json(obj["skeleton"])
    cells = tuple(
        tuple((int(s["edge"]), int(s["dir"])) for s in cell)
        for cell in obj["cells"]
    )
    return complexes.TwoComplex(skeleton, cells)


@main.group("complex")
def complex_group():
    """2-complexes: disc attachment, collapsing, immersion checks."""


@complex_group.command("gamma-w")
@click.option("-w", "--word", "word", required=True)
@click.argument("file")
def complex_gamma_w(word, file):
    x = _guard(complexes.build_gamma_w, _load_graph(file), _word(word))
    _emit(_complex_to_json(x))


@complex_group.command("collapse")
@click.argument("file")
def complex_collapse(file):
    x = _guard(_complex_from_json, _read_json(file))
    res = _guard(complexes.collapses_to_tree, x)
    _emit(
        {
            "euler_characteristic": complexes.euler_characteristic(x),
            "collapses_to_tree": res.collapses,
            "sequence": [{"edge": e, "cell": k} for e, k in res.sequence],
            "free_faces": [
                {"edge": e, "cell": k} for e, k in complexes.free_faces(x)
            ],
        }
    )


@complex_group.command("npi")
@click.option("-w", "--word", "word", required=True)
@click.option(
    "--attach", "attach", multiple=True,
    help="attachment as VERTEX:EXPONENT, e.g. 0:2; repeatable",
)
@click.argument("file")
def complex_npi(word, attach, file):
    g = _load_graph(file)
    attachments = []
    for spec in attach:
        try:
            v, n = spec.split(":")
            attachments.append((int(v), int(n)))
        except ValueError:
            raise click.UsageError(f"bad attachment {spec!r}; expected V:N")
    res = _guard(complexes.check_npi, g, _word(word), attachments)
    _emit(
        {
            "euler_characteristic": res.euler,
            "branch": res.branch,
            "passed": res.passed,
        }
    )


@complex_group.command("staggered")
@click.argument("file")
def complex_staggered(file):
    obj = _read_json(file)
    p = _guard(
        complexes.StaggeredPresentation,
        int(obj["alphabet"]),
        tuple(_word(r) for r in obj["relators"]),
        tuple(int(l) for l in obj["ordered_letters"]),
    )
    ok, diagnostics = complexes.is_staggered(p)
    _emit({"staggered": ok, "diagnostics": diagnostics})


# -- subgroup ----------------------------------------------------------------


def _load_subgroup(path: str) -> subgroups.SubgroupGraph:
    obj = _read_json(path)
    return _guard(
        subgroups.stallings_graph,
        [_word(w) for w in obj["generators"]],
        int(obj["alphabet"]),
    )


@main.group()
def subgroup():
    """Finitely generated subgroups of free groups."""


@subgroup.command("build")
@click.argument("file")
@_dot_flag
def subgroup_build(file, dot):
    _emit_graph(_load_subgroup(file).graph, dot)


@subgroup.command("rank")
@click.argument("file")
def subgroup_rank(file):
    h = _load_subgroup(file)
    _emit({"rank": subgroups.rank(h), "trivial": subgroups.is_trivial(h)})


@subgroup.command("conjugates")
@click.option("-w", "--word", "word", required=True)
@click.argument("file")
def subgroup_conjugates(word, file):
    h = _load_subgroup(file)
    res = _guard(subgroups.count_conjugates_meeting, h, _word(word))
    _emit(
        {
            "word": format_word(res.word),
            "conjugates_meeting": res.count,
            "rank": res.rank,
            "bound_holds": res.passed,
        }
    )


@subgroup.command("intersect")
@click.argument("file1")
@click.argument("file2")
@_dot_flag
def subgroup_intersect(file1, file2, dot):
    h = _guard(subgroups.intersect, _load_subgroup(file1), _load_subgroup(file2))
    _emit_graph(h.graph, dot)


@subgroup.command("shnc")
@click.argument("file1")
@click.argument("file2")
def subgroup_shnc(file1, file2):
    res = _guard(subgroups.check_shnc, _load_subgroup(file1), _load_subgroup(file2))
    _emit(
        {
            "lhs": res.lhs,
            "rhs": res.rhs,
            "inequality_holds": res.passed,
            "component_reduced_ranks": [r for _, r in res.per_component],
        }
    )


# -- verify ------------------------------------------------------------------


@main.command("verify")
@click.argument("suite")
@click.option("--seed", default=2024, show_default=True)
@click.option("--trials", default=1000, show_default=True)
@click.option("--max-vertices", default=12, show_default=True)
@click.option("--alphabet", default=2, show_default=True)
@click.option("--max-word-length", default=8, show_default=True)
@click.option("--density", default=0.7, show_default=True)
@click.option("--out", default="counterexample.json", show_default=True,
              help="where failure payloads are dumped")
def verify_cmd(suite, seed, trials, max_vertices, alphabet, max_word_length,
               density, out):
    """Run a named property suite over seeded random instances."""
    try:
        cfg = TrialConfig(
            master_seed=seed,
            trials=trials,
            max_vertices=max_vertices,
            alphabet=alphabet,
            max_word_length=max_word_length,
            edge_density=density,
        )
        report = verify.run_suite(suite, cfg)
    except (KeyError, ValueError) as exc:
        raise _Fail(str(exc).strip('"'))
    _emit(report.to_json())
    if report.failures:
        with open(out, "w") as fh:
            json.dump(report.failures, fh, indent=2)
        click.echo(f"failures dumped to {out}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
