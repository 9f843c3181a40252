"""Exact and greedy combinatorial solvers used by the characterizations."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from . import graph_core as gc
from .errors import InputError, SizeError
from .graph_core import Graph, VertexFunction, VertexSet

DOMINATION_BOUND = 32
SPANNING_TREE_BOUND = 20
TWO_COLORING_BOUND = 20


@dataclass(frozen=True)
class DominatingSetResult:
    set: VertexSet
    optimal: bool
    method: str

    @property
    def size(self) -> int:
        return len(self.set)


@dataclass(frozen=True)
class SpanningTreeResult:
    edges: tuple[tuple[int, int], ...]
    internal: VertexSet
    n: int

    @property
    def leaf_count(self) -> int:
        return self.n - len(self.internal)


class TwoColorings(NamedTuple):
    count: int
    witness: tuple[int, ...] | None


def _closed_rows(g: Graph) -> list[int]:
    return [g.adj[v] | 1 << v for v in range(g.n)]


def dominates(g: Graph, d: int) -> bool:
    return gc.neighborhood_of_set(g, d) == (1 << g.n) - 1


def greedy_dominating_set(g: Graph) -> DominatingSetResult:
    """Repeatedly take the vertex covering most undominated vertices (least index on ties)."""
    rows = _closed_rows(g)
    undominated = (1 << g.n) - 1
    chosen = 0
    while undominated:
        best = max(range(g.n), key=lambda v: ((rows[v] & undominated).bit_count(), -v))
        chosen |= 1 << best
        undominated &= ~rows[best]
    return DominatingSetResult(VertexSet.from_mask(chosen), False, "greedy")


def _disjoint_lower_bound(rows: list[int], undominated: int) -> int:
    """Undominated vertices with pairwise disjoint closed neighbourhoods need distinct dominators."""
    used = 0
    count = 0
    m = undominated
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if not rows[v] & used:
            used |= rows[v]
            count += 1
        m ^= low
    return count


def min_dominating_set(g: Graph, bound: int = DOMINATION_BOUND) -> DominatingSetResult:
    """Minimum dominating set by branch and bound.

    Branches on which vertex of N[w] dominates the least undominated vertex w.
    """
    if g.n > bound:
        raise SizeError(f"n={g.n} exceeds the exact domination bound {bound}")
    if g.n == 0:
        return DominatingSetResult(VertexSet(), True, "exact")
    rows = _closed_rows(g)
    incumbent = greedy_dominating_set(g).set
    best = [int(incumbent), len(incumbent)]
    seen: dict[int, int] = {}

    def search(chosen: int, size: int, undominated: int) -> None:
        if not undominated:
            if size < best[1]:
                best[0], best[1] = chosen, size
            return
        if size + _disjoint_lower_bound(rows, undominated) >= best[1]:
            return
        if seen.get(undominated, size + 1) <= size:
            return
        seen[undominated] = size
        w = (undominated & -undominated).bit_length() - 1
        # prefer candidates that cover more
        cands = sorted(VertexSet.from_mask(rows[w]),
                       key=lambda u: (-(rows[u] & undominated).bit_count(), u))
        for u in cands:
            search(chosen | 1 << u, size + 1, undominated & ~rows[u])

    search(0, 0, (1 << g.n) - 1)
    return DominatingSetResult(VertexSet.from_mask(best[0]), True, "exact")


def _tree_from_cds(g: Graph, core: int) -> tuple[tuple[int, int], ...]:
    """Spanning tree: BFS tree inside G[core], every other vertex hung on a core neighbour."""
    root = VertexSet.from_mask(core).min()
    parent = {root: root}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in VertexSet.from_mask(g.adj[x] & core):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    edges = [(min(v, p), max(v, p)) for v, p in parent.items() if v != p]
    for v in range(g.n):
        if not core >> v & 1:
            u = VertexSet.from_mask(g.adj[v] & core).min()
            edges.append((min(u, v), max(u, v)))
    return tuple(sorted(edges))


def _tree_result(n: int, edges: tuple[tuple[int, int], ...]) -> SpanningTreeResult:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return SpanningTreeResult(edges, VertexSet(v for v in range(n) if deg[v] >= 2), n)


def min_connected_dominating_set(g: Graph) -> VertexSet:
    """Smallest vertex set that dominates ``g`` and induces a connected subgraph.

    Enumerates connected sets grown from their least vertex, each exactly
    once, pruning with the incumbent size and a covering lower bound.
    """
    if not gc.is_connected(g):
        raise InputError("connected domination needs a connected graph")
    n = g.n
    full = (1 << n) - 1
    rows = _closed_rows(g)
    best = [_greedy_cds(g)]
    maxcover = max(r.bit_count() for r in rows)

    def grow(s: int, size: int, dominated: int, cand: int, banned: int) -> None:
        if dominated == full:
            if size < best[0].bit_count():
                best[0] = s
            return
        missing = (full & ~dominated).bit_count()
        if size + -(-missing // maxcover) >= best[0].bit_count():
            return
        allowed = full & ~banned & ~s
        m = full & ~dominated
        while m:
            low = m & -m
            if not rows[low.bit_length() - 1] & allowed:
                return
            m ^= low
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            grow(s | low, size + 1, dominated | rows[u], (cand | g.adj[u]) & ~banned & ~s & ~low, banned)
            banned |= low
            allowed &= ~low

    for root in range(n):
        banned = (1 << root) - 1
        grow(1 << root, 1, rows[root], g.adj[root] & ~banned, banned | 1 << root)
    return VertexSet.from_mask(best[0])


def _greedy_cds(g: Graph) -> int:
    """Non-leaf vertices of a BFS tree from vertex 0 (or vertex 0 alone)."""
    if g.n == 1:
        return 1
    parent = {0: 0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in VertexSet.from_mask(g.adj[x]):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    internal = 0
    for v, p in parent.items():
        if v != p:
            internal |= 1 << p
    return internal or 1


def min_internal_spanning_tree(g: Graph, bound: int = SPANNING_TREE_BOUND) -> SpanningTreeResult:
    """Spanning tree with the fewest internal (degree >= 2) vertices."""
    if g.n > bound:
        raise SizeError(f"n={g.n} exceeds the spanning tree bound {bound}")
    if not gc.is_connected(g):
        raise InputError("graph is not connected")
    if g.n <= 2:
        return _tree_result(g.n, tuple(g.edges()))
    core = min_connected_dominating_set(g)
    return _tree_result(g.n, _tree_from_cds(g, int(core)))


def bipartition(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """BFS two-colouring; the least vertex of each component goes to the first part."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in VertexSet.from_mask(g.adj[x]):
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    return (VertexSet(v for v in range(g.n) if side[v] == 0),
            VertexSet(v for v in range(g.n) if side[v] == 1))


def separates_convergence(g: Graph, a: int, b: int) -> bool:
    """For v in A, N[v] lies in B + {v}; for v in B, N[v] lies in A + {v}."""
    for part, other in ((a, b), (b, a)):
        for v in VertexSet.from_mask(int(part)):
            if gc.closed_neighborhood(g, v) & ~(int(other) | 1 << v):
                return False
    return True


def irregularity_violation(g: Graph) -> tuple[int, int] | None:
    """Least edge whose endpoints share a degree."""
    for u, v in g.edges():
        if g.degree(u) == g.degree(v):
            return u, v
    return None


def is_locally_irregular(g: Graph) -> bool:
    return irregularity_violation(g) is None


def continuous_two_colorings(g: Graph, bound: int = TWO_COLORING_BOUND) -> TwoColorings:
    """Count maps to the discrete two-point space that are continuous.

    Such a map is constant along edges, hence on components.
    """
    if g.n > bound:
        raise SizeError(f"n={g.n} exceeds the two-colouring bound {bound}")
    blocks = gc.connected_components(g)
    witness = None
    if len(blocks) >= 2:
        witness = tuple(0 if v in blocks[0] else 1 for v in range(g.n))
    return TwoColorings(1 << len(blocks), witness)


def is_two_connected(g: Graph) -> bool:
    if g.n < 3:
        raise InputError("2-connectedness is defined here for n >= 3")
    if not gc.is_connected(g):
        return False
    for v in range(g.n):
        rest = ((1 << g.n) - 1) & ~(1 << v)
        sub, _ = gc.induced_subgraph(g, rest)
        if not gc.is_connected(sub):
            return False
    return True


def is_continuous_map(f: VertexFunction, g: Graph, h: Graph) -> bool:
    """f(N_G[v]) lies inside N_H[f(v)] for every vertex v."""
    if f.domain_size != g.n or f.codomain_size != h.n:
        raise InputError("function dimensions do not match the graphs")
    return all(
        f.image(gc.closed_neighborhood(g, v)).issubset(gc.closed_neighborhood(h, f(v)))
        for v in range(g.n)
    )
