"""Finite simple graphs on dense vertex indices with bit-set adjacency."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Set
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InputError, SizeError

ENUMERATION_BOUND = 7
MAX_PRODUCT_VERTICES = 1 << 20


class VertexSet(int):
    """A set of vertex indices stored as a bit mask.

    Behaves like an ``int`` for bit arithmetic, but iterates over its
    members, reports its cardinality with ``len`` and compares equal to
    plain Python sets holding the same members.
    """

    __slots__ = ()

    def __new__(cls, members: Iterable[int] = ()) -> VertexSet:
        mask = 0
        for v in members:
            if v < 0:
                raise InputError(f"negative vertex {v}")
            mask |= 1 << v
        return int.__new__(cls, mask)

    @classmethod
    def from_mask(cls, mask: int) -> VertexSet:
        if mask < 0:
            raise InputError("vertex mask must be nonnegative")
        return int.__new__(cls, mask)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return int.__new__(cls, (1 << n) - 1)

    @property
    def mask(self) -> int:
        return int(self)

    def __iter__(self) -> Iterator[int]:
        m = int(self)
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return int(self).bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(int(self) >> v & 1)

    def __or__(self, other: int) -> VertexSet:
        return int.__new__(VertexSet, int(self) | int(other))

    def __and__(self, other: int) -> VertexSet:
        return int.__new__(VertexSet, int(self) & int(other))

    def __sub__(self, other: int) -> VertexSet:
        return int.__new__(VertexSet, int(self) & ~int(other))

    def __xor__(self, other: int) -> VertexSet:
        return int.__new__(VertexSet, int(self) ^ int(other))

    __ror__ = __or__
    __rand__ = __and__

    def issubset(self, other: int) -> bool:
        return int(self) & ~int(other) == 0

    def issuperset(self, other: int) -> bool:
        return int(other) & ~int(self) == 0

    def min(self) -> int:
        m = int(self)
        if not m:
            raise ValueError("min() of empty VertexSet")
        return (m & -m).bit_length() - 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Set):
            return set(self) == set(other)
        if isinstance(other, int):
            return int(self) == int(other)
        return NotImplemented

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = int.__hash__

    def __repr__(self) -> str:
        return "VertexSet({" + ", ".join(map(str, self)) + "})"


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the bit mask of neighbours of ``v``. Construction checks
    that the relation is symmetric, irreflexive and in range.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise InputError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InputError(f"loop at vertex {v}")
            m = row
            while m:
                low = m & -m
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise InputError(f"edge {v}-{u} is not symmetric")
                m ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise InputError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def neighbors(self, v: int) -> VertexSet:
        self._check(v)
        return VertexSet.from_mask(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        out = []
        for u in range(self.n):
            for v in VertexSet.from_mask(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InputError(f"vertex {v} out of range for n={self.n}")


# -- small named graphs -------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


# -- operations ---------------------------------------------------------------

@dataclass(frozen=True)
class VertexFunction:
    """A total map ``V(G) -> V(H)`` given by its value table."""

    domain_size: int
    codomain_size: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.domain_size:
            raise InputError("value table length differs from domain size")
        for x, y in enumerate(self.values):
            if not 0 <= y < self.codomain_size:
                raise InputError(f"f({x}) = {y} outside codomain of size {self.codomain_size}")

    def __call__(self, v: int) -> int:
        return self.values[v]

    def image(self, vs: int) -> VertexSet:
        mask = 0
        for v in VertexSet.from_mask(int(vs)):
            mask |= 1 << self.values[v]
        return VertexSet.from_mask(mask)


@dataclass(frozen=True)
class StepPath:
    """A piecewise-constant path: ``pieces[i]`` is held on the i-th interval.

    The interval boundaries are the rationals in ``breakpoints``.
    """

    pieces: tuple[int, ...]
    breakpoints: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.pieces:
            raise InputError("a step path needs at least one piece")
        if len(self.breakpoints) != len(self.pieces) - 1:
            raise InputError("need exactly one breakpoint between consecutive pieces")
        prev = Fraction(0)
        for t in self.breakpoints:
            if not prev < t < 1:
                raise InputError("breakpoints must increase strictly inside (0, 1)")
            prev = t

    def at(self, t: Fraction | float) -> int:
        """Value at time ``t``; each piece is closed on the right."""
        if not 0 <= t <= 1:
            raise InputError("time outside [0, 1]")
        for piece, bp in zip(self.pieces, self.breakpoints):
            if t <= bp:
                return piece
        return self.pieces[-1]

    def is_valid_in(self, g: Graph) -> bool:
        """Consecutive pieces are equal or adjacent in ``g``."""
        return all(
            a == b or g.has_edge(a, b) for a, b in zip(self.pieces, self.pieces[1:])
        )


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    """N[v]: the neighbours of ``v`` together with ``v`` itself."""
    g._check(v)
    return VertexSet.from_mask(g.adj[v] | 1 << v)


def neighborhood_of_set(g: Graph, vs: int) -> VertexSet:
    """N[U] = U together with every neighbour of a vertex of U."""
    mask = int(vs)
    if mask >> g.n:
        raise InputError(f"vertex set {vs!r} not contained in 0..{g.n - 1}")
    out = mask
    adj = g.adj
    m = mask
    while m:
        low = m & -m
        out |= adj[low.bit_length() - 1]
        m ^= low
    return VertexSet.from_mask(out)


def tensor_product(g: Graph, h: Graph) -> Graph:
    """Categorical product: ``(u,v) ~ (u',v')`` iff ``uu'`` and ``vv'`` are edges.

    The pair ``(u, v)`` gets index ``u * h.n + v``.
    """
    size = g.n * h.n
    if size > MAX_PRODUCT_VERTICES:
        raise SizeError(f"product would have {size} vertices (cap {MAX_PRODUCT_VERTICES})")
    rows = [0] * size
    for u in range(g.n):
        for v in range(h.n):
            row = 0
            for u2 in VertexSet.from_mask(g.adj[u]):
                row |= h.adj[v] << (u2 * h.n)
            rows[u * h.n + v] = row
    return Graph(size, tuple(rows))


def induced_subgraph(g: Graph, w: int) -> tuple[Graph, dict[int, int]]:
    """G[W] re-indexed to ``0..|W|-1`` in increasing order, plus the old->new map."""
    members = list(VertexSet.from_mask(int(w)))
    if members and members[-1] >= g.n:
        raise InputError(f"vertex {members[-1]} out of range for n={g.n}")
    index = {old: new for new, old in enumerate(members)}
    rows = []
    for old in members:
        row = 0
        for u in VertexSet.from_mask(g.adj[old] & int(w)):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(members), tuple(rows)), index


def is_homomorphism(f: VertexFunction, g: Graph, h: Graph) -> bool:
    if f.domain_size != g.n or f.codomain_size != h.n:
        raise InputError("function dimensions do not match the graphs")
    vals = f.values
    return all(h.has_edge(vals[x], vals[y]) for x, y in g.edges())


def connected_components(g: Graph) -> list[VertexSet]:
    """Components as vertex sets, ordered by least vertex."""
    seen = 0
    blocks = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        block = frontier = 1 << s
        while frontier:
            reach = 0
            m = frontier
            while m:
                low = m & -m
                reach |= g.adj[low.bit_length() - 1]
                m ^= low
            frontier = reach & ~block
            block |= frontier
        seen |= block
        blocks.append(VertexSet.from_mask(block))
    return blocks


def is_connected(g: Graph) -> bool:
    """Nonempty with a single component."""
    return g.n >= 1 and len(connected_components(g)) == 1


def is_spanning_subgraph(h: Graph, g: Graph) -> bool:
    return h.n == g.n and all(rh & ~rg == 0 for rh, rg in zip(h.adj, g.adj))


def transitivity_violation(g: Graph) -> tuple[int, int, int] | None:
    """Lexicographically least ``(x, y, z)`` with xy, yz edges, x != z, xz missing."""
    for x in range(g.n):
        for y in VertexSet.from_mask(g.adj[x]):
            bad = g.adj[y] & ~g.adj[x] & ~(1 << x)
            if bad:
                return x, y, VertexSet.from_mask(bad).min()
    return None


def is_transitive(g: Graph) -> bool:
    return transitivity_violation(g) is None


def edge_slots(n: int) -> list[tuple[int, int]]:
    """All vertex pairs ``(u, v)``, ``u < v``, in lexicographic order."""
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int, slots: list[tuple[int, int]] | None = None) -> Graph:
    """Graph whose i-th edge slot (see :func:`edge_slots`) is present iff bit i is set."""
    slots = edge_slots(n) if slots is None else slots
    rows = [0] * n
    i = 0
    while mask:
        if mask & 1:
            u, v = slots[i]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        mask >>= 1
        i += 1
    return Graph(n, tuple(rows))


def enumerate_graphs(n: int, bound: int = ENUMERATION_BOUND) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, in increasing edge-mask order."""
    if n < 0:
        raise InputError("vertex count must be nonnegative")
    if n > bound:
        raise SizeError(f"enumeration of n={n} exceeds bound {bound}")
    slots = edge_slots(n)
    for mask in range(1 << len(slots)):
        yield graph_from_mask(n, mask, slots)


def shortest_path(g: Graph, u: int, v: int) -> list[int] | None:
    """BFS path from ``u`` to ``v`` preferring least-index parents."""
    g._check(u)
    g._check(v)
    parent = {u: u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for y in VertexSet.from_mask(g.adj[x]):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    if v not in parent:
        return None
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]


def find_path(g: Graph, u: int, v: int) -> StepPath | None:
    """A step path from ``u`` to ``v`` over a shortest graph path, or None."""
    path = shortest_path(g, u, v)
    if path is None:
        return None
    k = len(path)
    return StepPath(tuple(path), tuple(Fraction(i, k) for i in range(1, k)))
