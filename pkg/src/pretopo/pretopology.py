"""Adherence, open and closed sets, and the topological modification of a graph."""

from __future__ import annotations

import enum
from collections.abc import Iterator
from dataclasses import dataclass

from . import graph_core as gc
from .errors import InputError
from .graph_core import Graph, VertexSet


class ConvergenceOrder(enum.Enum):
    EQUAL = "equal"
    STRICTLY_FINER = "strictly_finer"
    STRICTLY_COARSER = "strictly_coarser"
    INCOMPARABLE = "incomparable"

    def swapped(self) -> ConvergenceOrder:
        if self is ConvergenceOrder.STRICTLY_FINER:
            return ConvergenceOrder.STRICTLY_COARSER
        if self is ConvergenceOrder.STRICTLY_COARSER:
            return ConvergenceOrder.STRICTLY_FINER
        return self


@dataclass(frozen=True)
class Topology:
    """Topological modification of a graph, kept as its component partition.

    A set is open (equivalently closed) iff it is a union of ``blocks``.
    """

    n: int
    blocks: tuple[VertexSet, ...]

    def is_open(self, vs: int) -> bool:
        mask = int(vs)
        if mask >> self.n:
            return False
        return all(mask & b in (0, int(b)) for b in self.blocks)

    is_closed = is_open

    @property
    def num_opens(self) -> int:
        return 1 << len(self.blocks)

    def opens(self) -> Iterator[VertexSet]:
        """All open sets, by increasing selection mask over the blocks."""
        for sel in range(1 << len(self.blocks)):
            mask = 0
            for i, b in enumerate(self.blocks):
                if sel >> i & 1:
                    mask |= int(b)
            yield VertexSet.from_mask(mask)

    def complement(self, vs: int) -> VertexSet:
        return VertexSet.from_mask(((1 << self.n) - 1) & ~int(vs))


def adherence(g: Graph, a: int) -> VertexSet:
    """adh(A) = N[A]."""
    return gc.neighborhood_of_set(g, a)


def iterated_adherence(g: Graph, a: int, k: int) -> VertexSet:
    if k < 0:
        raise InputError("iteration count must be nonnegative")
    out = VertexSet.from_mask(int(a))
    for _ in range(k):
        nxt = adherence(g, out)
        if nxt == out:
            break
        out = nxt
    return out


def is_open(g: Graph, u: int) -> bool:
    """Open iff N[v] is inside U for every v in U."""
    mask = int(u)
    if mask >> g.n:
        raise InputError(f"{u!r} is not a subset of the vertex set")
    return all(g.adj[v] & ~mask == 0 for v in VertexSet.from_mask(mask))


def is_closed(g: Graph, f: int) -> bool:
    """Closed iff F is a union of connected components."""
    mask = int(f)
    if mask >> g.n:
        raise InputError(f"{f!r} is not a subset of the vertex set")
    return all(mask & b in (0, int(b)) for b in gc.connected_components(g))


def topological_modification(g: Graph) -> Topology:
    return Topology(g.n, tuple(gc.connected_components(g)))


def interior(g: Graph, a: int) -> VertexSet:
    mask = int(a)
    return VertexSet.from_mask(
        sum(1 << v for v in VertexSet.from_mask(mask) if g.adj[v] & ~mask == 0)
    )


def is_convergence_topological(g: Graph) -> bool:
    return gc.is_transitive(g)


def topological_witness(g: Graph) -> tuple[int, int, int] | None:
    """Failing triple when the convergence is not topological."""
    return gc.transitivity_violation(g)


def is_adherence_idempotent(g: Graph, exhaustive: bool = False) -> bool:
    """Whether adh(adh(A)) = adh(A) for every A.

    Adherence distributes over unions, so checking singletons suffices;
    ``exhaustive=True`` checks all ``2**n`` subsets instead.
    """
    if exhaustive:
        sets = range(1 << g.n)
    else:
        sets = (1 << v for v in range(g.n))
    for a in sets:
        once = adherence(g, a)
        if adherence(g, once) != once:
            return False
    return True


def compare_convergence(h: Graph, g: Graph) -> ConvergenceOrder:
    """How the convergence of ``h`` relates to that of ``g`` on the same vertices.

    ``STRICTLY_FINER`` means every net converging in ``h`` converges in ``g``
    to the same vertex, but not conversely.
    """
    if h.n != g.n:
        raise InputError(f"vertex counts differ: {h.n} vs {g.n}")
    nh = [gc.closed_neighborhood(h, v) for v in range(h.n)]
    ng = [gc.closed_neighborhood(g, v) for v in range(g.n)]
    h_in_g = all(a.issubset(b) for a, b in zip(nh, ng))
    g_in_h = all(b.issubset(a) for a, b in zip(nh, ng))
    if h_in_g and g_in_h:
        return ConvergenceOrder.EQUAL
    if h_in_g:
        return ConvergenceOrder.STRICTLY_FINER
    if g_in_h:
        return ConvergenceOrder.STRICTLY_COARSER
    return ConvergenceOrder.INCOMPARABLE
