"""Deliberately broken implementations, used to show the verifier is not vacuous.

Each mutant is patched onto the module attribute that the library and the
verifier call through, so every caller sees it while the patch is active.
"""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from unittest import mock

from . import graph_core as gc
from . import pretopology as pt
from . import solvers
from .graph_core import Graph, VertexSet


def _adherence_drops_self(g: Graph, a: int) -> VertexSet:
    """Open neighbourhood union: forgets that A lies inside adh(A)."""
    mask = 0
    for v in VertexSet.from_mask(int(a)):
        mask |= g.adj[v]
    return VertexSet.from_mask(mask)


def _neighborhood_drops_symmetry(g: Graph, v: int) -> VertexSet:
    """Keeps only the neighbours above v."""
    return VertexSet.from_mask((g.adj[v] >> (v + 1) << (v + 1)) | 1 << v)


_exact_dominating_set = solvers.min_dominating_set


def _solver_off_by_one(g: Graph, bound: int = solvers.DOMINATION_BOUND) -> solvers.DominatingSetResult:
    """Drops the last chosen vertex from the optimum."""
    res = _exact_dominating_set(g, bound)
    members = list(res.set)
    return solvers.DominatingSetResult(VertexSet(members[:-1]), res.optimal, res.method)


MUTANTS = {
    "adherence_drops_self": (pt, "adherence", _adherence_drops_self),
    "neighborhood_drops_symmetry": (gc, "closed_neighborhood", _neighborhood_drops_symmetry),
    "solver_off_by_one": (solvers, "min_dominating_set", _solver_off_by_one),
}


@contextmanager
def applied(name: str) -> Iterator[None]:
    module, attr, impl = MUTANTS[name]
    with mock.patch.object(module, attr, impl):
        yield
