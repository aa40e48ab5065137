"""Demand-driven cores: maximal good subsets, degeneracy tests, minimal good subsets.

A vertex set S is *f-good* when every member v has at least f(v) neighbors
inside S. Iterated deletion of deficient vertices yields the unique maximal
f-good subset (the f-core); the result does not depend on deletion order
because the union of f-good sets is again f-good.

Demand functions are plain per-vertex integer sequences. Values may exceed
the graph order; cores then simply collapse to the empty set.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Graph

DemandFn = Sequence[int]


def f_core(g: Graph, s: Iterable[int], f: DemandFn) -> set[int]:
    """Maximal f-good subset of s (possibly empty)."""
    alive = set(s)
    deg = {v: len(g.adj[v] & alive) for v in alive}
    stack = [v for v in alive if deg[v] < f[v]]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] == f[w] - 1:
                    stack.append(w)
    return alive


def is_degenerate(g: Graph, s: Iterable[int], f: DemandFn) -> bool:
    """True iff s contains no f-good subset (equivalently, its f-core is empty)."""
    return not f_core(g, s, f)


def deficiency_set(g: Graph, s: Iterable[int], f: DemandFn) -> list[tuple[int, int]]:
    """Members of s below demand, as (vertex, slack) pairs in ascending vertex order.

    Slack is f(v) minus the in-set degree, always >= 1 for reported vertices.
    """
    sset = set(s)
    out = []
    for v in sorted(sset):
        d = len(g.adj[v] & sset)
        if d <= f[v] - 1:
            out.append((v, f[v] - d))
    return out


def minimal_good(g: Graph, s: Iterable[int], f: DemandFn) -> set[int] | None:
    """An inclusion-minimal f-good subset of s, or None when none exists.

    Descends from the f-core of s: scan members in ascending order, and while
    removing some vertex x leaves a non-empty core, replace the set by
    f_core(set - {x}) and restart the scan. Output M satisfies
    f_core(M - {x}) == empty for every x in M.

    A vertex whose removal once collapsed the core will collapse every
    smaller core too, so failed candidates are skipped for good; this changes
    nothing about the result, only the cost.
    """
    core = f_core(g, s, f)
    if not core:
        return None

    alive = core
    deg = {v: len(g.adj[v] & alive) for v in alive}
    failed: set[int] = set()

    def try_remove(x: int) -> bool:
        # Peel with a rollback journal; commit only if survivors remain.
        removed: set[int] = {x}
        journal: list[int] = []
        stack = [x]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if w in alive and w not in removed:
                    deg[w] -= 1
                    journal.append(w)
                    if deg[w] == f[w] - 1:
                        removed.add(w)
                        stack.append(w)
        if len(removed) == len(alive):
            for w in journal:
                deg[w] += 1
            return False
        alive.difference_update(removed)
        for v in removed:
            del deg[v]
        return True

    while True:
        for x in sorted(alive):
            if x in failed:
                continue
            if try_remove(x):
                break
            failed.add(x)
        else:
            break

    assert alive and all(deg[v] >= f[v] for v in alive)
    assert any(deg[v] == f[v] for v in alive), "minimal good set lacks an exact-demand vertex"
    return alive
