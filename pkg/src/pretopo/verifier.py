"""Exhaustive and sampled checks of the graph-convergence theorems.

Each check walks instances in a fixed order (vertex count, then edge
mask) and stops at the first failure, so the reported counterexample is
the least one. Net-quantified statements are checked twice: through the
finite reduction to closed neighbourhoods, and against nets directly.

Library functions are always reached through their modules
(``gc.closed_neighborhood``, ``pt.adherence`` ...) so that mutants
patched onto those modules are seen here.
"""

from __future__ import annotations

import hashlib
import random
import time
from collections.abc import Callable, Iterator
from dataclasses import asdict, dataclass
from itertools import product

from . import graph_core as gc
from . import nets
from . import pretopology as pt
from . import solvers
from .errors import InputError
from .graph_core import Graph, VertexFunction, VertexSet

SAMPLED_TRIPLES = 10_000
NETS_PER_INSTANCE = 200
NET_ROUTE_MAX_N = 4


@dataclass
class TheoremCheck:
    theorem_id: str
    n_max: int
    instances: int
    passed: bool
    counterexample: dict | None
    elapsed: float

    def to_dict(self) -> dict:
        return asdict(self)


class Counterexample(Exception):
    def __init__(self, **data) -> None:
        super().__init__(data.get("reason", "counterexample"))
        self.data = data


def describe(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def graphs_upto(n_max: int) -> Iterator[Graph]:
    for n in range(n_max + 1):
        yield from gc.enumerate_graphs(n)


def _rng(seed: int, *parts: object) -> random.Random:
    key = ":".join(map(str, (seed, *parts))).encode()
    return random.Random(int.from_bytes(hashlib.sha256(key).digest()[:8], "big"))


def _random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    slots = gc.edge_slots(n)
    mask = sum(1 << i for i in range(len(slots)) if rng.random() < p)
    return gc.graph_from_mask(n, mask, slots)


_CANONICAL: dict[int, list[nets.Net]] = {}


def _canonical(n: int) -> list[nets.Net]:
    if n not in _CANONICAL:
        _CANONICAL[n] = list(nets.canonical_nets(n))
    return _CANONICAL[n]


def _net_continuous(f: VertexFunction, g: Graph, h: Graph, samples: list[nets.Net]) -> bool:
    """Raw definition: f o phi -> f(v) whenever phi -> v, over the given nets."""
    for phi in samples:
        image = phi.compose(f)
        for v in range(g.n):
            if nets.net_converges(g, phi, v) and not nets.net_converges(h, image, f(v)):
                return False
    return True


# -- the checks ---------------------------------------------------------------
# Each counts examined instances in ``tally`` and raises Counterexample on failure.

def check_idempotent_iff_transitive(n_max: int, seed: int, tally: list[int]) -> None:
    for g in graphs_upto(n_max):
        tally[0] += 1
        idem = pt.is_adherence_idempotent(g)
        if g.n <= 4 and pt.is_adherence_idempotent(g, exhaustive=True) != idem:
            raise Counterexample(graph=describe(g), reason="singleton shortcut disagrees with all subsets")
        trans = gc.is_transitive(g)
        if idem != trans or pt.is_convergence_topological(g) != trans:
            raise Counterexample(graph=describe(g), idempotent=idem, transitive=trans)
        w = gc.transitivity_violation(g)
        if w is not None:
            x, y, z = w
            once = pt.adherence(g, 1 << x)
            if z in once or z not in pt.adherence(g, once):
                raise Counterexample(graph=describe(g), witness=w, reason="witness does not break idempotence")


def check_clopen_structure(n_max: int, seed: int, tally: list[int]) -> None:
    for g in graphs_upto(n_max):
        topo = pt.topological_modification(g)
        canon = _canonical(g.n) if g.n <= NET_ROUTE_MAX_N else None
        for u in range(1 << g.n):
            tally[0] += 1
            opened = pt.is_open(g, u)
            fixed = pt.adherence(g, u) == u
            union = pt.is_closed(g, u)
            in_topology = topo.is_open(u)
            row = {"open": opened, "adherence_fixed": fixed, "union_of_components": union,
                   "in_modification": in_topology}
            if canon is not None:
                row["net_open"] = all(
                    phi.kernel.issubset(u)
                    for phi in canon for x in VertexSet.from_mask(u)
                    if nets.net_converges(g, phi, x)
                )
            if len(set(row.values())) != 1:
                raise Counterexample(graph=describe(g), subset=list(VertexSet.from_mask(u)), **row)


def check_connected_iff_convergence_connected(n_max: int, seed: int, tally: list[int]) -> None:
    discrete = gc.empty_graph(2)
    for g in graphs_upto(n_max):
        tally[0] += 1
        connected = gc.is_connected(g)
        nonconstant = None
        for bits in range(1 << g.n):
            f = VertexFunction(g.n, 2, tuple(bits >> v & 1 for v in range(g.n)))
            if 0 < bits < (1 << g.n) - 1 and solvers.is_continuous_map(f, g, discrete):
                nonconstant = f.values
                break
        conv_connected = g.n >= 1 and nonconstant is None
        colorings = solvers.continuous_two_colorings(g)
        if connected != conv_connected or (g.n >= 1 and (colorings.count == 2) != connected):
            raise Counterexample(graph=describe(g), connected=connected,
                                 nonconstant_continuous=nonconstant, colorings=colorings.count)


def _hom_instance(g: Graph, h: Graph, f: VertexFunction) -> dict | None:
    hom = gc.is_homomorphism(f, g, h)
    cont = solvers.is_continuous_map(f, g, h)
    by_nets = _net_continuous(f, g, h, _canonical(g.n))
    if hom == cont == by_nets:
        return None
    # continuity alone only forces f(x), f(y) to be adjacent or equal
    weak = all(f(x) == f(y) or h.has_edge(f(x), f(y)) for x, y in g.edges())
    return {"G": describe(g), "H": describe(h), "f": list(f.values),
            "homomorphism": hom, "continuous": cont, "continuous_by_nets": by_nets,
            "adjacent_or_equal": weak}


def check_hom_iff_continuous(n_max: int, seed: int, tally: list[int]) -> None:
    small = list(graphs_upto(min(n_max, 3)))
    for g in small:
        for h in small:
            if g.n and not h.n:
                continue
            for vals in product(range(h.n), repeat=g.n):
                tally[0] += 1
                bad = _hom_instance(g, h, VertexFunction(g.n, h.n, vals))
                if bad:
                    raise Counterexample(**bad)
    if n_max >= 4:
        rng = _rng(seed, "hom")
        for _ in range(SAMPLED_TRIPLES):
            g, h = _random_graph(rng, 4), _random_graph(rng, 4)
            f = VertexFunction(4, 4, tuple(rng.randrange(4) for _ in range(4)))
            tally[0] += 1
            bad = _hom_instance(g, h, f)
            if bad:
                raise Counterexample(sampled=True, **bad)


def check_product_convergence(n_max: int, seed: int, tally: list[int]) -> None:
    graphs = list(graphs_upto(n_max))
    for g in graphs:
        for h in graphs:
            p = gc.tensor_product(g, h)
            for u in range(g.n):
                for v in range(h.n):
                    tally[0] += 1
                    graph_nb = gc.closed_neighborhood(p, u * h.n + v)
                    prod_nb = VertexSet(
                        a * h.n + b
                        for a in gc.closed_neighborhood(g, u)
                        for b in gc.closed_neighborhood(h, v)
                    )
                    if graph_nb != prod_nb:
                        raise Counterexample(
                            G=describe(g), H=describe(h), vertex=[u, v],
                            graph_neighborhood=[divmod(x, h.n) for x in graph_nb],
                            product_neighborhood=[divmod(x, h.n) for x in prod_nb],
                        )
            if p.n <= NET_ROUTE_MAX_N:
                for phi in _canonical(p.n):
                    left = phi.compose(lambda x: x // h.n)
                    right = phi.compose(lambda x: x % h.n)
                    for u in range(g.n):
                        for v in range(h.n):
                            a = nets.net_converges(p, phi, u * h.n + v)
                            b = nets.net_converges(g, left, u) and nets.net_converges(h, right, v)
                            if a != b:
                                raise Counterexample(G=describe(g), H=describe(h), vertex=[u, v],
                                                     net_kernel=[divmod(x, h.n) for x in phi.kernel],
                                                     graph_converges=a, product_converges=b)


def check_subspace_convergence(n_max: int, seed: int, tally: list[int]) -> None:
    for g in graphs_upto(n_max):
        for w in range(1 << g.n):
            tally[0] += 1
            sub, index = gc.induced_subgraph(g, w)
            back = {new: old for old, new in index.items()}
            for old, new in index.items():
                lifted = VertexSet(back[x] for x in gc.closed_neighborhood(sub, new))
                if lifted != gc.closed_neighborhood(g, old) & w:
                    raise Counterexample(graph=describe(g), subset=list(VertexSet.from_mask(w)), vertex=old)
            if sub.n <= 3:
                for phi in _canonical(sub.n):
                    lifted_net = phi.compose(back.__getitem__)
                    for new, old in back.items():
                        if nets.net_converges(sub, phi, new) != nets.net_converges(g, lifted_net, old):
                            raise Counterexample(graph=describe(g), subset=list(VertexSet.from_mask(w)),
                                                 vertex=old, net_kernel=list(lifted_net.kernel))


def check_order_iff_spanning(n_max: int, seed: int, tally: list[int]) -> None:
    for n in range(n_max + 1):
        graphs = list(gc.enumerate_graphs(n))
        for h in graphs:
            for g in graphs:
                tally[0] += 1
                order = pt.compare_convergence(h, g)
                finer = order in (pt.ConvergenceOrder.EQUAL, pt.ConvergenceOrder.STRICTLY_FINER)
                spanning = gc.is_spanning_subgraph(h, g)
                row = {"finer": finer, "spanning": spanning}
                if pt.compare_convergence(g, h) != order.swapped():
                    raise Counterexample(H=describe(h), G=describe(g), reason="order not antisymmetric")
                if n <= 3:
                    row["finer_by_nets"] = all(
                        nets.net_converges(g, phi, v)
                        for phi in _canonical(n) for v in range(n) if nets.net_converges(h, phi, v)
                    )
                if len(set(row.values())) != 1:
                    raise Counterexample(H=describe(h), G=describe(g), **row)


def check_complete_iff_all_limits(n_max: int, seed: int, tally: list[int]) -> None:
    for g in graphs_upto(n_max):
        tally[0] += 1
        complete = g.num_edges == g.n * (g.n - 1) // 2
        if g.n <= NET_ROUTE_MAX_N:
            probes = _canonical(g.n)
        else:
            # the net with the largest kernel converges least
            probes = [nets.Net(nets.DirectedSet.clique(g.n), tuple(range(g.n)))] if g.n else []
        all_limits = all(nets.limits(g, phi) == g.vertices for phi in probes)
        if complete != all_limits:
            raise Counterexample(graph=describe(g), complete=complete, all_limits=all_limits)


def check_bipartite_characterization(n_max: int, seed: int, tally: list[int]) -> None:
    for g in graphs_upto(n_max):
        tally[0] += 1
        parts = solvers.bipartition(g)
        full = (1 << g.n) - 1
        brute = None
        for a in range(1 << g.n):
            if solvers.separates_convergence(g, a, full & ~a):
                brute = a
                break
        if (parts is None) != (brute is None):
            raise Counterexample(graph=describe(g), bipartite=parts is not None,
                                 convergence_partition=brute)
        if parts is not None:
            a, b = parts
            if not solvers.separates_convergence(g, a, b):
                raise Counterexample(graph=describe(g), parts=[list(a), list(b)],
                                     reason="returned parts violate the convergence condition")
            if g.n <= 3:
                for phi in _canonical(g.n):
                    for x in range(g.n):
                        if nets.net_converges(g, phi, x):
                            target = (int(b) if x in a else int(a)) | 1 << x
                            if not phi.kernel.issubset(target):
                                raise Counterexample(graph=describe(g), parts=[list(a), list(b)],
                                                     vertex=x, net_kernel=list(phi.kernel))


def check_locally_irregular_characterization(n_max: int, seed: int, tally: list[int]) -> None:
    for g in graphs_upto(n_max):
        tally[0] += 1
        irregular = solvers.is_locally_irregular(g)
        if g.n <= NET_ROUTE_MAX_N:
            probes = _canonical(g.n)
        else:
            probes = [nets.Net.constant(x) for x in range(g.n)]
            probes += [nets.Net(nets.DirectedSet.clique(len(nb)), tuple(nb))
                       for nb in (gc.closed_neighborhood(g, v) for v in range(g.n))]
        by_nets = all(
            g.degree(x) != g.degree(v)
            for phi in probes for v in range(g.n) if nets.net_converges(g, phi, v)
            for x in phi.kernel if x != v
        )
        if irregular != by_nets:
            raise Counterexample(graph=describe(g), locally_irregular=irregular, by_nets=by_nets,
                                 witness=solvers.irregularity_violation(g))


def check_limit_space_axioms(n_max: int, seed: int, tally: list[int]) -> None:
    for g in graphs_upto(n_max):
        tally[0] += 1
        report = nets.axiom_suite(g, _rng(seed, "axioms", g.n, g.adj).randrange(1 << 32), NETS_PER_INSTANCE)
        if not report.holds:
            raise Counterexample(graph=describe(g), **{k: repr(v) for k, v in report.counterexample.items()})


def _system_by_nets(g: Graph, family: list[int]) -> bool:
    return all(
        any(phi.kernel.issubset(c) for c in family)
        for phi in _canonical(g.n) for v in range(g.n) if nets.net_converges(g, phi, v)
    )


def check_convergence_system_reduction(n_max: int, seed: int, tally: list[int]) -> None:
    for g in graphs_upto(min(n_max, 3)):
        subsets = 1 << g.n
        for fam_mask in range(1 << subsets):
            tally[0] += 1
            family = [c for c in range(subsets) if fam_mask >> c & 1]
            _system_instance(g, family)
    if n_max >= 4:
        for g in gc.enumerate_graphs(4):
            rng = _rng(seed, "systems", g.adj)
            for _ in range(NETS_PER_INSTANCE):
                tally[0] += 1
                family = [c for c in range(16) if rng.random() < 0.3]
                _system_instance(g, family)


def _system_instance(g: Graph, family: list[int]) -> None:
    res = nets.is_convergence_system(g, family)
    direct = _system_by_nets(g, family)
    if res.holds != direct:
        raise Counterexample(graph=describe(g), family=[list(VertexSet.from_mask(c)) for c in family],
                             reduction=res.holds, by_nets=direct)
    if not res.holds:
        nv = gc.closed_neighborhood(g, res.failing_vertex)
        if any(nv.issubset(c) for c in family):
            raise Counterexample(graph=describe(g), failing_vertex=res.failing_vertex,
                                 reason="reported vertex is covered")


def check_finite_compactness(n_max: int, seed: int, tally: list[int]) -> None:
    for g in graphs_upto(n_max):
        tally[0] += 1
        for x in range(g.n):
            uf = nets.principal_ultrafilter(g.n, x)
            if not nets.is_ultrafilter(uf) or not any(nets.filter_converges(g, uf, v) for v in range(g.n)):
                raise Counterexample(graph=describe(g), ultrafilter_at=x)
            if g.n <= 4 and not nets.is_ultrafilter_by_dichotomy(uf):
                raise Counterexample(graph=describe(g), ultrafilter_at=x, reason="dichotomy fails")
        if g.n == 0:
            continue
        rows = [gc.closed_neighborhood(g, v) for v in range(g.n)]
        if not nets.is_convergence_system(g, rows).holds:
            raise Counterexample(graph=describe(g), reason="closed neighbourhoods are not a convergence system")
        full = (1 << g.n) - 1
        cover = [0] * (1 << g.n)
        smallest = g.n
        for s in range(1, 1 << g.n):
            low = s & -s
            cover[s] = cover[s ^ low] | rows[low.bit_length() - 1]
            if cover[s] == full:
                smallest = min(smallest, s.bit_count())
        result = solvers.min_dominating_set(g)
        if result.size != smallest or not solvers.dominates(g, result.set):
            raise Counterexample(graph=describe(g), smallest_subcover=smallest,
                                 solver_set=list(result.set), solver_size=result.size)
        if g.n <= 3:
            for phi in _canonical(g.n):
                t = phi.kernel.min()
                sub = nets.Net.constant(t)
                if not nets.is_subnet(sub, phi) or not nets.net_converges(g, sub, t):
                    raise Counterexample(graph=describe(g), net_kernel=list(phi.kernel),
                                         reason="no convergent subnet")


def check_path_connected(n_max: int, seed: int, tally: list[int]) -> None:
    for g in graphs_upto(n_max):
        blocks = gc.connected_components(g)
        block_of = {v: i for i, b in enumerate(blocks) for v in b}
        for u in range(g.n):
            for v in range(g.n):
                tally[0] += 1
                path = gc.find_path(g, u, v)
                same = block_of[u] == block_of[v]
                if (path is not None) != same:
                    raise Counterexample(graph=describe(g), pair=[u, v], found=path is not None, same=same)
                if path is None:
                    continue
                ps = path.pieces
                if (ps[0], ps[-1]) != (u, v) or len(set(ps)) != len(ps) or not path.is_valid_in(g) \
                        or path.at(0) != u or path.at(1) != v:
                    raise Counterexample(graph=describe(g), pair=[u, v], pieces=list(ps))


CATALOG: dict[str, tuple[Callable[[int, int, list[int]], None], int]] = {
    "idempotent_iff_transitive": (check_idempotent_iff_transitive, 6),
    "clopen_structure": (check_clopen_structure, 5),
    "connected_iff_convergence_connected": (check_connected_iff_convergence_connected, 5),
    "hom_iff_continuous": (check_hom_iff_continuous, 4),
    "product_convergence": (check_product_convergence, 4),
    "subspace_convergence": (check_subspace_convergence, 5),
    "order_iff_spanning": (check_order_iff_spanning, 4),
    "complete_iff_all_limits": (check_complete_iff_all_limits, 6),
    "bipartite_characterization": (check_bipartite_characterization, 5),
    "locally_irregular_characterization": (check_locally_irregular_characterization, 6),
    "limit_space_axioms": (check_limit_space_axioms, 4),
    "convergence_system_reduction": (check_convergence_system_reduction, 4),
    "finite_compactness": (check_finite_compactness, 6),
    "path_connected": (check_path_connected, 5),
}

THEOREM_IDS = tuple(CATALOG)


def verify(theorem_id: str, n_max: int = 6, seed: int = 0) -> TheoremCheck:
    """Run one catalog check up to ``n_max`` vertices (clipped to the check's cap)."""
    if theorem_id not in CATALOG:
        raise InputError(f"unknown theorem id {theorem_id!r}")
    if n_max < 0:
        raise InputError("n_max must be nonnegative")
    fn, cap = CATALOG[theorem_id]
    n = min(n_max, cap)
    start = time.perf_counter()
    tally = [0]
    try:
        fn(n, seed, tally)
        cex = None
    except Counterexample as exc:
        cex = exc.data
    elapsed = time.perf_counter() - start
    return TheoremCheck(theorem_id, n, tally[0], cex is None, cex, elapsed)


def verify_all(n_max: int = 6, seed: int = 0, ids: list[str] | None = None) -> list[TheoremCheck]:
    return [verify(tid, n_max, seed) for tid in (ids or THEOREM_IDS)]
