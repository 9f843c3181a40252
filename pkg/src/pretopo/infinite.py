"""Countable graphs given by neighbour oracles, and a catalog of named families.

Vertices are natural numbers. Every oracle carries a ``level`` function,
nondecreasing in the vertex label; the window at bound ``r`` is the set of
labels whose level is at most ``r``. Finite windows can refute properties
but never prove them: positive verdicts come from per-family certificates.
"""

from __future__ import annotations

import enum
import re
import threading
from collections import deque
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

import networkx as nx

from . import solvers
from .errors import InputError, SizeError
from .graph_core import Graph, VertexSet, induced_subgraph
from .nets import SequenceNet
from .solvers import SpanningTreeResult

DEFAULT_RADIUS = 64
VERTEX_CAP = 100_000
TAIL_DEPTHS = (8, 16, 32)


@dataclass(frozen=True)
class InfiniteNeighborhood:
    """An infinite neighbour set: a finite exceptional part plus a predicate."""

    exceptional: frozenset[int]
    predicate: Callable[[int], bool]

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and (v in self.exceptional or self.predicate(v))


Neighborhood = tuple[int, ...] | InfiniteNeighborhood


class OracleGraph:
    """A countable simple graph presented by ``neighbors(v)``.

    Queries are cached. Loops, symmetry and the locally-finite flag are
    checked as vertices are touched.
    """

    def __init__(
        self,
        neighbors: Callable[[int], Iterable[int] | InfiniteNeighborhood],
        *,
        level: Callable[[int], int],
        locally_finite: bool,
        root: int = 0,
        name: str = "oracle",
    ) -> None:
        self._neighbors = neighbors
        self.level = level
        self.locally_finite = locally_finite
        self.root = root
        self.name = name
        self.family: Family | None = None
        self._cache: dict[int, Neighborhood] = {}
        self._lock = threading.Lock()

    def neighbors(self, v: int) -> Neighborhood:
        if v < 0:
            raise InputError(f"vertex {v} is not a natural number")
        with self._lock:
            hit = self._cache.get(v)
        if hit is not None:
            return hit
        raw = self._neighbors(v)
        if isinstance(raw, InfiniteNeighborhood):
            if self.locally_finite:
                raise InputError(f"{self.name}: vertex {v} has infinite degree but the graph is declared locally finite")
            nb: Neighborhood = raw
        else:
            nb = tuple(sorted(set(raw)))
        if v in nb:
            raise InputError(f"{self.name}: loop at vertex {v}")
        with self._lock:
            self._cache.setdefault(v, nb)
            return self._cache[v]

    def adjacent(self, u: int, v: int) -> bool:
        """Adjacency, checked from both ends."""
        a = v in self.neighbors(u)
        if a != (u in self.neighbors(v)):
            raise InputError(f"{self.name}: adjacency between {u} and {v} is not symmetric")
        return a

    def degree(self, v: int) -> int | None:
        """Finite degree, or None for an infinite neighbourhood."""
        nb = self.neighbors(v)
        return None if isinstance(nb, InfiniteNeighborhood) else len(nb)

    def window(self, bound: int, cap: int = VERTEX_CAP) -> list[int]:
        """Labels whose level is at most ``bound``."""
        out = []
        label = 0
        prev = None
        while True:
            lv = self.level(label)
            if prev is not None and lv < prev:
                raise InputError(f"{self.name}: level decreases at label {label}")
            if lv > bound:
                return out
            if len(out) >= cap:
                raise SizeError(f"window at bound {bound} exceeds the vertex cap {cap}")
            out.append(label)
            prev = lv
            label += 1

    def neighbors_in(self, v: int, window: Sequence[int], window_set: set[int]) -> list[int]:
        nb = self.neighbors(v)
        if isinstance(nb, InfiniteNeighborhood):
            return [u for u in window if u in nb]
        return [u for u in nb if u in window_set]

    def closed_neighborhood_in(self, d: Iterable[int], window: Sequence[int]) -> set[int]:
        ws = set(window)
        out: set[int] = set()
        for x in d:
            out.add(x)
            out.update(self.neighbors_in(x, window, ws))
        return out


@dataclass(frozen=True)
class Ray:
    """A ray given by a closed-form index function ``n -> vertex``."""

    name: str
    index: Callable[[int], int]

    def vertices(self, count: int) -> list[int]:
        return [self.index(i) for i in range(count)]

    def check(self, graph: OracleGraph, bound: int) -> None:
        vs = self.vertices(bound)
        if len(set(vs)) != len(vs):
            raise InputError(f"ray {self.name} repeats a vertex before index {bound}")
        for a, b in zip(vs, vs[1:]):
            if not graph.adjacent(a, b):
                raise InputError(f"ray {self.name}: {a} and {b} are not adjacent")


class Status(enum.Enum):
    VERIFIED = "verified"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class TriVerdict:
    status: Status
    certificate: Any = None
    witness: Any = None
    bound: int | None = None

    @classmethod
    def verified(cls, certificate: Any) -> TriVerdict:
        return cls(Status.VERIFIED, certificate=certificate)

    @classmethod
    def refuted(cls, witness: Any, certificate: Any = None) -> TriVerdict:
        return cls(Status.REFUTED, certificate=certificate, witness=witness)

    @classmethod
    def unknown(cls, bound: int) -> TriVerdict:
        return cls(Status.UNKNOWN, bound=bound)

    @property
    def is_verified(self) -> bool:
        return self.status is Status.VERIFIED

    @property
    def is_refuted(self) -> bool:
        return self.status is Status.REFUTED


@dataclass(frozen=True)
class PairCertificate:
    """Analytic fact about two catalog rays in one separation mode.

    ``separator`` is a finite vertex (or edge) set that separates every
    pair of tails; ``None`` means the rays are declared equivalent.
    """

    equivalent: bool
    separator: tuple | None = None
    note: str = ""


@dataclass
class Family:
    name: str
    params: dict
    oracle: OracleGraph
    description: str
    dominating_set: tuple[int, ...] | None = None
    domination_note: str = ""
    escape: Callable[[Sequence[int]], int] | None = None
    escape_note: str = ""
    vertex_ends: int | str = 1
    edge_ends: int | str = 1
    rays: dict[str, Ray] = field(default_factory=dict)
    pairs: dict[tuple[str, str, str], PairCertificate] = field(default_factory=dict)
    stand_in: bool = False

    def __post_init__(self) -> None:
        self.oracle.family = self

    @property
    def compact(self) -> bool:
        return self.dominating_set is not None


# -- catalog ------------------------------------------------------------------

def _finite(f: Callable[[int], Iterable[int]]) -> Callable[[int], tuple[int, ...]]:
    return lambda v: tuple(u for u in f(v) if u >= 0)


def ray_family() -> Family:
    o = OracleGraph(_finite(lambda v: (v - 1, v + 1)), level=lambda v: v,
                    locally_finite=True, name="ray")
    return Family(
        "ray", {}, o, "one-way infinite path 0-1-2-...",
        escape=lambda d: max(d) + 2 if d else 0,
        escape_note="a finite D has a largest vertex m; vertex m+2 has no neighbour in D",
        vertex_ends=1, edge_ends=1,
        rays={"r": Ray("r", lambda i: i)},
    )


def double_ray_family() -> Family:
    # label 0 is position 0, label 2k-1 is +k, label 2k is -k
    def pos(v: int) -> int:
        return 0 if v == 0 else ((v + 1) // 2 if v % 2 else -(v // 2))

    def label(p: int) -> int:
        return 0 if p == 0 else (2 * p - 1 if p > 0 else -2 * p)

    o = OracleGraph(lambda v: (label(pos(v) - 1), label(pos(v) + 1)),
                    level=lambda v: abs(pos(v)), locally_finite=True, name="doubleray")
    return Family(
        "doubleray", {}, o, "two-way infinite path",
        escape=lambda d: label(max((abs(pos(x)) for x in d), default=-2) + 2),
        escape_note="a finite D reaches |position| at most M+1; position M+2 is undominated",
        vertex_ends=2, edge_ends=2,
        rays={"right": Ray("right", lambda i: label(i)), "left": Ray("left", lambda i: label(-i))},
        pairs={("left", "right", "vertex"): PairCertificate(False, (0,), "the origin separates the two halves"),
               ("left", "right", "edge"): PairCertificate(False, ((0, 1),), "the edge 0-(+1) separates the two halves")},
    )


def comb_family() -> Family:
    # spine s_i = 2i, tooth t_i = 2i+1
    def nb(v: int) -> tuple[int, ...]:
        i = v // 2
        if v % 2:
            return (2 * i,)
        return tuple(x for x in (2 * i - 2, 2 * i + 2, 2 * i + 1) if x >= 0)

    o = OracleGraph(nb, level=lambda v: v // 2, locally_finite=True, name="comb")
    return Family(
        "comb", {}, o, "spine ray with a pendant tooth at every spine vertex",
        escape=lambda d: 2 * (max((x // 2 for x in d), default=-2) + 2) + 1,
        escape_note="teeth beyond the largest spine index reached by D are undominated",
        vertex_ends=1, edge_ends=1,
        rays={"spine": Ray("spine", lambda i: 2 * i)},
    )


def binary_tree_family() -> Family:
    def depth(v: int) -> int:
        return (v + 1).bit_length() - 1

    def nb(v: int) -> tuple[int, ...]:
        kids = (2 * v + 1, 2 * v + 2)
        return kids if v == 0 else ((v - 1) // 2,) + kids

    o = OracleGraph(nb, level=depth, locally_finite=True, name="binarytree")
    return Family(
        "binarytree", {}, o, "rooted infinite binary tree in heap order",
        escape=lambda d: (1 << (max((depth(x) for x in d), default=-2) + 2)) - 1,
        escape_note="vertices two levels below the deepest vertex of D are undominated",
        vertex_ends="continuum", edge_ends="continuum",
        rays={"left": Ray("left", lambda i: (1 << i) - 1), "right": Ray("right", lambda i: (1 << (i + 1)) - 2)},
        pairs={("left", "right", "vertex"): PairCertificate(False, (0,), "the root separates the subtrees"),
               ("left", "right", "edge"): PairCertificate(False, ((0, 1),), "the edge 0-1 separates the left subtree")},
    )


def ladder_family() -> Family:
    # rail a_i = 2i, rail b_i = 2i+1, rung a_i b_i
    def nb(v: int) -> tuple[int, ...]:
        i, side = divmod(v, 2)
        out = [v ^ 1, 2 * (i + 1) + side]
        if i:
            out.append(2 * (i - 1) + side)
        return tuple(out)

    o = OracleGraph(nb, level=lambda v: v // 2, locally_finite=True, name="ladder")
    return Family(
        "ladder", {}, o, "two rails joined by a rung at every position",
        escape=lambda d: 2 * (max((x // 2 for x in d), default=-2) + 2),
        escape_note="rail vertices two positions beyond D are undominated",
        vertex_ends=1, edge_ends=1,
        rays={"a": Ray("a", lambda i: 2 * i), "b": Ray("b", lambda i: 2 * i + 1)},
        pairs={("a", "b", "vertex"): PairCertificate(True, note="rungs give disjoint paths beyond any finite set"),
               ("a", "b", "edge"): PairCertificate(True, note="vertex-disjoint rungs are edge-disjoint")},
    )


def hub_rays_family() -> Family:
    # hub 0; ray r_i = 2i+1, ray s_i = 2i+2; hub adjacent to every ray vertex
    def nb(v: int) -> Iterable[int] | InfiniteNeighborhood:
        if v == 0:
            return InfiniteNeighborhood(frozenset(), lambda u: u >= 1)
        i = (v - 1) // 2
        out = [0, v + 2]
        if i:
            out.append(v - 2)
        return out

    o = OracleGraph(nb, level=lambda v: 0 if v == 0 else (v - 1) // 2,
                    locally_finite=False, name="hubrays")
    return Family(
        "hubrays", {}, o, "two rays whose vertices are all joined to one hub",
        dominating_set=(0,), domination_note="the hub is adjacent to every ray vertex",
        vertex_ends=2, edge_ends=1,
        rays={"r": Ray("r", lambda i: 2 * i + 1), "s": Ray("s", lambda i: 2 * i + 2)},
        pairs={("r", "s", "vertex"): PairCertificate(False, (0,), "every path between the rays passes the hub"),
               ("r", "s", "edge"): PairCertificate(True, note="paths r_i-hub-s_i are pairwise edge-disjoint")},
    )


def fan_ray_family() -> Family:
    # apex 0; ray vertex i has label i+1
    def nb(v: int) -> Iterable[int] | InfiniteNeighborhood:
        if v == 0:
            return InfiniteNeighborhood(frozenset(), lambda u: u >= 1)
        return [0, v + 1] + ([v - 1] if v > 1 else [])

    o = OracleGraph(nb, level=lambda v: max(v - 1, 0), locally_finite=False, name="fanray")
    return Family(
        "fanray", {}, o, "a ray plus an apex adjacent to every ray vertex",
        dominating_set=(0,), domination_note="the apex is adjacent to every ray vertex",
        vertex_ends=1, edge_ends=1,
        rays={"r": Ray("r", lambda i: i + 1), "r_apex": Ray("r_apex", lambda i: (1, 0)[i] if i < 2 else i + 1)},
    )


def star_of_rays_family(k: int = 3) -> Family:
    """``k`` rays from a common centre; apex j is joined to every vertex of ray j."""
    if k < 1:
        raise InputError("starofrays needs k >= 1")

    # centre 0, apexes 1..k, ray j position i>=1 at label k + (i-1)k + j + 1
    def ray_vertex(j: int, i: int) -> int:
        return 0 if i == 0 else k + (i - 1) * k + j + 1

    def split(v: int) -> tuple[int, int]:
        q, r = divmod(v - k - 1, k)
        return r, q + 1

    def nb(v: int) -> Iterable[int] | InfiniteNeighborhood:
        if v == 0:
            return list(range(1, k + 1)) + [ray_vertex(j, 1) for j in range(k)]
        if v <= k:
            j = v - 1
            return InfiniteNeighborhood(frozenset({0}), lambda u: u > k and split(u)[0] == j)
        j, i = split(v)
        return [j + 1, ray_vertex(j, i - 1), ray_vertex(j, i + 1)]

    def level(v: int) -> int:
        return 0 if v == 0 else (1 if v <= k else split(v)[1])

    o = OracleGraph(nb, level=level, locally_finite=False, name=f"starofrays{k}")
    apexes = tuple(range(1, k + 1))
    rays = {f"r{j}": Ray(f"r{j}", lambda i, j=j: ray_vertex(j, i)) for j in range(k)}
    pairs = {}
    for a in range(k):
        for b in range(a + 1, k):
            pairs[(f"r{a}", f"r{b}", "vertex")] = PairCertificate(False, (0,), "every path between arms passes the centre")
            pairs[(f"r{a}", f"r{b}", "edge")] = PairCertificate(
                False, tuple(sorted((0, x) for x in (a + 1, ray_vertex(a, 1)))),
                "the centre's edges into arm a")
    return Family(
        "starofrays", {"k": k}, o, f"{k} rays from a centre, each dominated by its own apex",
        dominating_set=apexes, domination_note="apex j is adjacent to every vertex of ray j, the centre included",
        vertex_ends=k, edge_ends=k, rays=rays, pairs=pairs,
    )


def dominated_ladder_family() -> Family:
    # apexes 0,1; row j position i at label 2 + 3i + j; apex 0 dominates rows 0,1, apex 1 rows 1,2
    def nb(v: int) -> Iterable[int] | InfiniteNeighborhood:
        if v == 0:
            return InfiniteNeighborhood(frozenset(), lambda u: u >= 2 and (u - 2) % 3 in (0, 1))
        if v == 1:
            return InfiniteNeighborhood(frozenset(), lambda u: u >= 2 and (u - 2) % 3 in (1, 2))
        i, j = divmod(v - 2, 3)
        out = [v + 3] + ([v - 3] if i else [])
        out += {0: [0], 1: [0, 1], 2: [1]}[j]
        return out

    o = OracleGraph(nb, level=lambda v: 0 if v < 2 else (v - 2) // 3,
                    locally_finite=False, name="dominatedladder")
    rows = {f"row{j}": Ray(f"row{j}", lambda i, j=j: 2 + 3 * i + j) for j in range(3)}
    return Family(
        "dominatedladder", {}, o,
        "three rows (rays) and two apexes; apex 0 sees rows 0-1, apex 1 sees rows 1-2",
        dominating_set=(0, 1), domination_note="every row vertex is adjacent to an apex",
        vertex_ends=3, edge_ends=1, rays=rows,
        pairs={("row0", "row2", "vertex"): PairCertificate(False, (0, 1), "removing both apexes splits the rows"),
               ("row0", "row2", "edge"): PairCertificate(True, note="row0-apex0-row1-apex1-row2 paths are edge-disjoint")},
        stand_in=True,
    )


CATALOG: dict[str, Callable[..., Family]] = {
    "ray": ray_family,
    "doubleray": double_ray_family,
    "comb": comb_family,
    "binarytree": binary_tree_family,
    "ladder": ladder_family,
    "hubrays": hub_rays_family,
    "fanray": fan_ray_family,
    "starofrays": star_of_rays_family,
    "dominatedladder": dominated_ladder_family,
}


def get_family(name: str) -> Family:
    """Look up a family by name; ``starofrays5`` or ``starofrays:5`` sets k."""
    m = re.fullmatch(r"([a-z]+):?(\d*)", name.strip().lower())
    if not m or m.group(1) not in CATALOG:
        raise InputError(f"unknown family {name!r}; known: {', '.join(CATALOG)}")
    base, arg = m.groups()
    if arg:
        if base != "starofrays":
            raise InputError(f"family {base!r} takes no parameter")
        return star_of_rays_family(int(arg))
    return CATALOG[base]()


# -- truncation and semi-decisions ---------------------------------------------

@dataclass(frozen=True)
class Truncation:
    graph: Graph
    labels: tuple[int, ...]
    radius: int

    @cached_property
    def index(self) -> dict[int, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def to_indices(self, labels: Iterable[int]) -> VertexSet:
        return VertexSet(self.index[x] for x in labels)

    def to_labels(self, vs: Iterable[int]) -> tuple[int, ...]:
        return tuple(self.labels[i] for i in vs)


def truncate(o: OracleGraph, radius: int, cap: int = VERTEX_CAP) -> Truncation:
    """Ball of ``radius`` around the root inside the window of level <= radius.

    Vertices are re-indexed in label order; only induced edges are kept.
    """
    window = o.window(radius, cap)
    wset = set(window)
    if o.root not in wset:
        raise InputError(f"root {o.root} lies outside the window at radius {radius}")
    dist = {o.root: 0}
    adj: dict[int, list[int]] = {}
    queue = deque([o.root])
    while queue:
        x = queue.popleft()
        adj[x] = o.neighbors_in(x, window, wset)
        if dist[x] == radius:
            continue
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    labels = tuple(sorted(dist))
    index = {lab: i for i, lab in enumerate(labels)}
    rows = [0] * len(labels)
    for x in labels:
        nbrs = adj[x] if x in adj else o.neighbors_in(x, window, wset)
        for y in nbrs:
            if y in index:
                if not o.adjacent(x, y):
                    raise InputError(f"{o.name}: asymmetric adjacency {x}-{y}")
                rows[index[x]] |= 1 << index[y]
    return Truncation(Graph(len(labels), tuple(rows)), labels, radius)


def _certificate_for(o: OracleGraph) -> tuple[int, ...] | None:
    return o.family.dominating_set if o.family is not None else None


def is_dominating_oracle(o: OracleGraph, d: Iterable[int], bound: int,
                         certificate: Sequence[int] | None = None) -> TriVerdict:
    """Semi-decide whether the finite set ``d`` dominates the whole graph.

    Refuted with the largest undominated label in the window at ``bound``.
    Verified only when ``d`` contains a certified dominating set.
    """
    d = tuple(sorted(set(d)))
    window = o.window(bound)
    covered = o.closed_neighborhood_in(d, window)
    missing = [v for v in window if v not in covered]
    if missing:
        return TriVerdict.refuted(missing[-1], certificate=f"vertex {missing[-1]} has no neighbour in D")
    if certificate is None:
        certificate = _certificate_for(o)
    if certificate is not None and set(certificate) <= set(d):
        return TriVerdict.verified({"dominating_set": tuple(certificate), "superset_of": tuple(certificate)})
    return TriVerdict.unknown(bound)


def is_compact(fam: Family, bound: int = DEFAULT_RADIUS) -> TriVerdict:
    """Compactness of a catalog family, i.e. a finite dominating set.

    Verified with the certified set; otherwise refuted by applying the
    family's escape certificate to the best finite attempt on a window.
    """
    o = fam.oracle
    if fam.dominating_set is not None:
        check = is_dominating_oracle(o, fam.dominating_set, bound, fam.dominating_set)
        if not check.is_verified:
            raise AssertionError(f"{fam.name}: certified dominating set fails on the window: {check}")
        return TriVerdict.verified({"dominating_set": fam.dominating_set, "note": fam.domination_note})
    if fam.escape is None:
        return TriVerdict.unknown(bound)
    t = truncate(o, bound)
    attempt = t.to_labels(solvers.greedy_dominating_set(t.graph).set)
    w = fam.escape(attempt)
    if any(w == x or o.adjacent(w, x) for x in attempt):
        raise AssertionError(f"{fam.name}: escape certificate produced a dominated vertex {w}")
    return TriVerdict.refuted(w, certificate={"note": fam.escape_note, "attempt": attempt})


def _tails(t: Truncation, ray: Ray, depth: int) -> list[int]:
    out = []
    i = depth
    while True:
        v = ray.index(i)
        if v not in t.index:
            return out
        out.append(t.index[v])
        i += 1


def disjoint_paths(g: Graph, sources: Iterable[int], sinks: Iterable[int], mode: str) -> int:
    """Maximum number of vertex- (or edge-) disjoint paths between two vertex sets."""
    src, dst = set(sources), set(sinks)
    shared = src & dst
    src -= shared
    dst -= shared
    flow = nx.DiGraph()
    if mode == "vertex":
        for v in range(g.n):
            if v not in shared:
                flow.add_edge(("in", v), ("out", v), capacity=1)
        for u, v in g.edges():
            if u in shared or v in shared:
                continue
            flow.add_edge(("out", u), ("in", v), capacity=1)
            flow.add_edge(("out", v), ("in", u), capacity=1)
        for v in src:
            flow.add_edge("s", ("in", v), capacity=1)
        for v in dst:
            flow.add_edge(("out", v), "t", capacity=1)
    elif mode == "edge":
        for u, v in g.edges():
            flow.add_edge(u, v, capacity=1)
            flow.add_edge(v, u, capacity=1)
        for v in src:
            flow.add_edge("s", v)
        for v in dst:
            flow.add_edge(v, "t")
    else:
        raise InputError(f"mode must be 'vertex' or 'edge', not {mode!r}")
    if not src or not dst:
        return len(shared)
    flow.add_node("s")
    flow.add_node("t")
    return len(shared) + int(nx.maximum_flow_value(flow, "s", "t"))


def _separates(t: Truncation, separator: tuple, tail1: list[int], tail2: list[int], mode: str) -> bool:
    g = t.graph
    if mode == "vertex":
        removed = {t.index[x] for x in separator if x in t.index}
        keep = VertexSet(v for v in range(g.n) if v not in removed)
        sub, idx = induced_subgraph(g, keep)
        a = [idx[v] for v in tail1 if v in idx]
        b = [idx[v] for v in tail2 if v in idx]
        return disjoint_paths(sub, a, b, "vertex") == 0
    cut = {tuple(sorted((t.index[x], t.index[y]))) for x, y in separator if x in t.index and y in t.index}
    rows = list(g.adj)
    for u, v in cut:
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return disjoint_paths(Graph(g.n, tuple(rows)), tail1, tail2, "edge") == 0


def rays_equivalent(fam: Family, r1: str, r2: str, mode: str, k: int,
                    bound: int = DEFAULT_RADIUS, depths: Sequence[int] = TAIL_DEPTHS) -> TriVerdict:
    """Level-``k`` evidence that two catalog rays are (edge-)equivalent.

    Verified when every tail pair in the sweep has ``k`` disjoint paths in
    the truncation; refuted when the family's separator certificate is
    smaller than ``k`` and really separates the tails in the truncation.
    """
    if mode not in ("vertex", "edge"):
        raise InputError(f"mode must be 'vertex' or 'edge', not {mode!r}")
    ray1, ray2 = fam.rays[r1], fam.rays[r2]
    t = truncate(fam.oracle, bound)
    counts = {}
    for depth in depths:
        a, b = _tails(t, ray1, depth), _tails(t, ray2, depth)
        if len(a) < 2 or len(b) < 2:
            raise SizeError(f"ray tails from depth {depth} leave the window at radius {bound}")
        counts[depth] = disjoint_paths(t.graph, a, b, mode)
    if all(c >= k for c in counts.values()):
        return TriVerdict.verified({"level": k, "disjoint_paths": counts})
    cert = fam.pairs.get((r1, r2, mode)) or fam.pairs.get((r2, r1, mode))
    if cert is not None and not cert.equivalent and len(cert.separator) < k:
        for depth in depths:
            a, b = _tails(t, ray1, depth), _tails(t, ray2, depth)
            if not _separates(t, cert.separator, a, b, mode):
                raise AssertionError(f"{fam.name}: separator {cert.separator} does not separate the tails "
                                     f"from depth {depth}")
        return TriVerdict.refuted(cert.separator, certificate={"note": cert.note, "disjoint_paths": counts})
    return TriVerdict.unknown(bound)


@dataclass(frozen=True)
class EdgeEndReport:
    family: str
    edge_ends: int | str
    dominating_set: tuple[int, ...]
    holds: bool

    @property
    def bound(self) -> int:
        return len(self.dominating_set)


def edge_end_bound_check(fam: Family) -> EdgeEndReport:
    """Compare the declared number of edge-ends with the size of the dominating set."""
    if not fam.compact:
        raise InputError(f"{fam.name} is not compact; the edge-end bound does not apply")
    d = fam.dominating_set
    count = fam.edge_ends
    holds = isinstance(count, int) and count <= len(d)
    return EdgeEndReport(fam.name, count, d, holds)


@dataclass(frozen=True)
class RaylessTree:
    radius: int
    tree: SpanningTreeResult
    truncation: Truncation
    internal_labels: tuple[int, ...]
    comparison_radius: int
    radius_stable: bool


def _dominated_tree(t: Truncation, d: Sequence[int]) -> SpanningTreeResult:
    """Join the dominating vertices by shortest paths, then hang every other vertex on one of them."""
    g = t.graph
    core = [t.index[x] for x in sorted(d)]
    in_tree = {core[0]}
    edges: set[tuple[int, int]] = set()
    for target in core[1:]:
        if target in in_tree:
            continue
        parent = {target: target}
        queue = deque([target])
        hit = None
        while queue and hit is None:
            x = queue.popleft()
            for y in VertexSet.from_mask(g.adj[x]):
                if y not in parent:
                    parent[y] = x
                    if y in in_tree:
                        hit = y
                        break
                    queue.append(y)
        if hit is None:
            raise InputError("dominating vertices lie in different components of the truncation")
        x = hit
        while x != target:
            p = parent[x]
            edges.add((min(x, p), max(x, p)))
            in_tree.add(p)
            x = p
    dom = VertexSet(core)
    for v in range(g.n):
        if v in in_tree:
            continue
        hooks = VertexSet.from_mask(g.adj[v]) & dom
        if not hooks:
            raise InputError(f"vertex {t.labels[v]} is not dominated inside the truncation")
        u = hooks.min()
        edges.add((min(u, v), max(u, v)))
    deg = [0] * g.n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return SpanningTreeResult(tuple(sorted(edges)), VertexSet(v for v in range(g.n) if deg[v] >= 2), g.n)


def rayless_spanning_tree(fam: Family, radius: int = DEFAULT_RADIUS) -> RaylessTree:
    """Spanning tree of the truncation whose internal vertices stay put as the radius grows."""
    if not fam.compact:
        raise InputError(f"{fam.name} is not compact; no rayless spanning tree certificate")
    t = truncate(fam.oracle, radius)
    tree = _dominated_tree(t, fam.dominating_set)
    internal = t.to_labels(tree.internal)
    other = max(radius // 2, 1) if radius > 1 else radius + 1
    t2 = truncate(fam.oracle, other)
    internal2 = t2.to_labels(_dominated_tree(t2, fam.dominating_set).internal)
    return RaylessTree(radius, tree, t, internal, other, internal == internal2)


@dataclass(frozen=True)
class EventualFiniteness:
    vertex: int
    finite: bool
    closed_neighborhood: tuple[int, ...] | None = None
    sequence: SequenceNet | None = None

    @property
    def sequence_terms(self) -> tuple[int, ...]:
        return self.sequence.terms() if self.sequence else ()


def eventually_finite_check(o: OracleGraph, v: int, bound: int) -> EventualFiniteness:
    """Finite degree: every net converging to ``v`` ends inside the finite N[v].

    Infinite degree: an injective sequence of neighbours, which converges
    to ``v`` and has no finite tail.
    """
    nb = o.neighbors(v)
    if not isinstance(nb, InfiniteNeighborhood):
        return EventualFiniteness(v, True, tuple(sorted((v, *nb))))
    members: list[int] = []
    label = 0
    while len(members) < bound:
        if label > VERTEX_CAP:
            raise SizeError("could not find enough neighbours below the vertex cap")
        if label in nb:
            members.append(label)
        label += 1
    seq = tuple(members)
    return EventualFiniteness(v, False, None, SequenceNet(lambda i: seq[i], len(seq)))


def catalog_names() -> Iterator[str]:
    return iter(CATALOG)
