"""Finite directed sets, nets, filter bases and graph convergence of nets.

Everything here is finite. A finite directed preorder has a terminal
class (the elements above everything), so the tail filter of a net is
generated by a single tail, its *kernel*: the values taken on that class.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from . import graph_core as gc
from .errors import InputError
from .graph_core import Graph, VertexSet

LEFT, RIGHT = 0, 1


@dataclass(frozen=True)
class DirectedSet:
    """A preorder on ``0..m-1``; ``up[a]`` is the mask of all ``b >= a``."""

    up: tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.up)
        if m == 0:
            raise InputError("a directed set is nonempty")
        for a, ua in enumerate(self.up):
            if ua >> m:
                raise InputError(f"element {a} is related to something outside 0..{m - 1}")
            if not ua >> a & 1:
                raise InputError(f"not reflexive at {a}")
            for b in VertexSet.from_mask(ua):
                if self.up[b] & ~ua:
                    raise InputError(f"not transitive: {a} <= {b}")
        for a in range(m):
            for b in range(a + 1, m):
                if not self.up[a] & self.up[b]:
                    raise InputError(f"{a} and {b} have no common upper bound")

    @property
    def size(self) -> int:
        return len(self.up)

    def le(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    @cached_property
    def terminal(self) -> VertexSet:
        """Elements lying above every element."""
        mask = (1 << self.size) - 1
        for ua in self.up:
            mask &= ua
        return VertexSet.from_mask(mask)

    @classmethod
    def chain(cls, m: int) -> DirectedSet:
        full = (1 << m) - 1
        return cls(tuple(full >> a << a for a in range(m)))

    @classmethod
    def clique(cls, m: int) -> DirectedSet:
        """All ``m`` elements mutually related."""
        return cls(((1 << m) - 1,) * m)

    @classmethod
    def from_relation(cls, m: int, pairs: Iterable[tuple[int, int]]) -> DirectedSet:
        """Reflexive-transitive closure of ``pairs`` (``a <= b``)."""
        up = [1 << a for a in range(m)]
        for a, b in pairs:
            up[a] |= 1 << b
        changed = True
        while changed:
            changed = False
            for a in range(m):
                acc = up[a]
                for b in VertexSet.from_mask(up[a]):
                    acc |= up[b]
                if acc != up[a]:
                    up[a] = acc
                    changed = True
        return cls(tuple(up))


@dataclass(frozen=True)
class Net:
    domain: DirectedSet
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.domain.size:
            raise InputError("net must assign a value to every element of its domain")
        if any(v < 0 for v in self.values):
            raise InputError("net values must be vertex indices")

    def tail(self, a: int) -> VertexSet:
        """The tail set {phi_b : b >= a}."""
        mask = 0
        for b in VertexSet.from_mask(self.domain.up[a]):
            mask |= 1 << self.values[b]
        return VertexSet.from_mask(mask)

    @cached_property
    def tails(self) -> tuple[VertexSet, ...]:
        return tuple(self.tail(a) for a in range(self.domain.size))

    @cached_property
    def kernel(self) -> VertexSet:
        """The least tail set; it generates the tail filter."""
        mask = 0
        for b in self.domain.terminal:
            mask |= 1 << self.values[b]
        return VertexSet.from_mask(mask)

    def compose(self, f: Callable[[int], int]) -> Net:
        return Net(self.domain, tuple(f(v) for v in self.values))

    @classmethod
    def constant(cls, x: int, domain: DirectedSet | None = None) -> Net:
        domain = domain or DirectedSet.chain(1)
        return cls(domain, (x,) * domain.size)

    @classmethod
    def sequence(cls, values: Sequence[int]) -> Net:
        """A finite sequence, indexed by a chain."""
        return cls(DirectedSet.chain(len(values)), tuple(values))


@dataclass(frozen=True)
class SequenceNet:
    """A sequence over the naturals, evaluated only below ``bound``."""

    term: Callable[[int], int]
    bound: int

    def terms(self) -> tuple[int, ...]:
        return tuple(self.term(i) for i in range(self.bound))

    def to_net(self) -> Net:
        return Net.sequence(self.terms())


@dataclass(frozen=True)
class FilterBase:
    """A base of a proper filter on ``0..n-1``, stored as masks."""

    n: int
    base: frozenset[int]

    def __post_init__(self) -> None:
        if not self.base:
            raise InputError("a filter base is nonempty")
        for b in self.base:
            if b == 0:
                raise InputError("a proper filter base cannot contain the empty set")
            if b >> self.n or b < 0:
                raise InputError("base set outside the ambient set")
        for a in self.base:
            for b in self.base:
                meet = a & b
                if not any(c & ~meet == 0 for c in self.base):
                    raise InputError("base is not closed under intersections up to refinement")

    @classmethod
    def of(cls, n: int, sets: Iterable[Iterable[int] | int]) -> FilterBase:
        masks = frozenset(
            int(s) if isinstance(s, int) else int(VertexSet(s)) for s in sets
        )
        return cls(n, masks)

    def contains(self, a: int) -> bool:
        """Whether ``a`` belongs to the generated filter."""
        mask = int(a)
        return any(b & ~mask == 0 for b in self.base)

    def is_finer_than(self, other: FilterBase) -> bool:
        """``other``'s filter is contained in this one's."""
        return all(self.contains(b) for b in other.base)

    @property
    def kernel(self) -> VertexSet:
        mask = (1 << self.n) - 1
        for b in self.base:
            mask &= b
        return VertexSet.from_mask(mask)

    def sets(self) -> list[VertexSet]:
        return sorted((VertexSet.from_mask(b) for b in self.base), key=lambda s: (len(s), int(s)))


@dataclass(frozen=True)
class ConvergenceSystemCheck:
    family: tuple[VertexSet, ...]
    holds: bool
    failing_vertex: int | None = None


def tail_filter(net: Net, n: int | None = None) -> FilterBase:
    if n is None:
        n = max(net.values) + 1
    return FilterBase(n, frozenset(int(t) for t in net.tails))


def net_converges(g: Graph, net: Net, v: int) -> bool:
    """phi -> v iff some tail set lies inside N[v]."""
    _check_values(g, net)
    nv = gc.closed_neighborhood(g, v)
    return any(t.issubset(nv) for t in net.tails)


def limits(g: Graph, net: Net) -> VertexSet:
    return VertexSet(v for v in range(g.n) if net_converges(g, net, v))


def filter_converges(g: Graph, fb: FilterBase, v: int) -> bool:
    if fb.n != g.n:
        raise InputError("filter ambient set differs from the vertex set")
    nv = gc.closed_neighborhood(g, v)
    return any(b & ~nv == 0 for b in fb.base)


def is_ultrafilter(fb: FilterBase) -> bool:
    """On a finite set, ultrafilters are exactly the principal ones at a point."""
    k = fb.kernel
    if not k:
        raise InputError("base does not generate a proper filter")
    return len(k) == 1 and fb.contains(k)


def is_ultrafilter_by_dichotomy(fb: FilterBase) -> bool:
    """Direct test: every subset or its complement is in the filter."""
    full = (1 << fb.n) - 1
    return all(fb.contains(a) or fb.contains(full & ~a) for a in range(1 << fb.n))


def principal_ultrafilter(n: int, x: int) -> FilterBase:
    if not 0 <= x < n:
        raise InputError(f"point {x} outside 0..{n - 1}")
    return FilterBase(n, frozenset({1 << x}))


def is_convergence_system(g: Graph, family: Iterable[int]) -> ConvergenceSystemCheck:
    """Every vertex v has a member C with N[v] inside C.

    N[v] is the coarsest filter converging to v, so this is equivalent to
    the net formulation: each net converging to v eventually lies in some C.
    """
    fam = tuple(VertexSet.from_mask(int(c)) for c in family)
    for v in range(g.n):
        nv = gc.closed_neighborhood(g, v)
        if not any(nv.issubset(c) for c in fam):
            return ConvergenceSystemCheck(fam, False, v)
    return ConvergenceSystemCheck(fam, True)


def is_subnet(psi: Net, phi: Net) -> bool:
    """psi is a subnet of phi: every tail of phi contains a tail of psi."""
    return all(any(s.issubset(t) for s in psi.tails) for t in phi.tails)


def mix(phi: Net, psi: Net, selector: Sequence[int], start: int | None = None) -> Net:
    """Mixing of two nets over a shared domain.

    At ``d >= start`` the value comes from ``phi`` when ``selector[d]`` is
    ``LEFT`` and from ``psi`` when it is ``RIGHT``; elsewhere it comes from
    ``phi``. With ``start=None`` the selector applies everywhere.
    """
    if phi.domain != psi.domain:
        raise InputError("mixing requires nets on the same directed set")
    m = phi.domain.size
    if len(selector) != m:
        raise InputError("selector length differs from the domain size")
    active = (1 << m) - 1 if start is None else phi.domain.up[start]
    vals = []
    for d in range(m):
        pick = selector[d] if active >> d & 1 else LEFT
        if pick not in (LEFT, RIGHT):
            raise InputError(f"selector entry {pick!r} is neither LEFT nor RIGHT")
        vals.append(psi.values[d] if pick == RIGHT else phi.values[d])
    return Net(phi.domain, tuple(vals))


def canonical_nets(n: int) -> Iterator[Net]:
    """One net per nonempty kernel ``T``: a clique domain mapped onto ``T``.

    Every net on ``0..n-1`` has the same tail filter as exactly one of these.
    """
    for mask in range(1, 1 << n):
        members = tuple(VertexSet.from_mask(mask))
        yield Net(DirectedSet.clique(len(members)), members)


# -- random generation ---------------------------------------------------------

def random_directed_set(rng: random.Random, max_size: int = 6, density: float = 0.3) -> DirectedSet:
    """A random preorder completed to a directed set by a top class of 1-3 elements."""
    body = rng.randint(0, max(0, max_size - 1))
    top = rng.randint(1, 3)
    pairs = [(a, b) for a in range(body) for b in range(body) if a != b and rng.random() < density]
    m = body + top
    pairs += [(a, t) for a in range(m) for t in range(body, m)]
    return DirectedSet.from_relation(m, pairs)


def random_net(rng: random.Random, n: int, max_size: int = 6, pool: int | None = None) -> Net:
    """Uniform values on a random directed set; terminal values drawn from ``pool`` if given."""
    d = random_directed_set(rng, max_size)
    everything = list(range(n))
    pool_list = list(VertexSet.from_mask(pool)) if pool else everything
    term = d.terminal
    vals = tuple(rng.choice(pool_list if a in term else everything) for a in range(d.size))
    return Net(d, vals)


@dataclass
class AxiomReport:
    """Outcome of the limit-space axiom checks on one graph."""

    counts: dict[str, int] = field(default_factory=dict)
    counterexample: dict | None = None

    @property
    def holds(self) -> bool:
        return self.counterexample is None


def axiom_suite(g: Graph, seed: int, samples: int = 200) -> AxiomReport:
    """Sample nets on ``g`` and check centered, isotone, stable and pretopological."""
    rng = random.Random(seed)
    report = AxiomReport({"centered": 0, "isotone": 0, "stable": 0, "pretopological": 0})
    if g.n == 0:
        return report

    def fail(axiom: str, **data) -> AxiomReport:
        report.counterexample = {"axiom": axiom, **data}
        return report

    for x in range(g.n):
        report.counts["centered"] += 1
        if not net_converges(g, Net.constant(x), x):
            return fail("centered", vertex=x)
    for _ in range(samples):
        phi = random_net(rng, g.n)
        psi = random_net(rng, g.n, pool=phi.kernel)
        if not is_subnet(psi, phi):
            return fail("isotone", reason="generated net is not a subnet", phi=phi, psi=psi)
        for v in limits(g, phi):
            report.counts["isotone"] += 1
            if not net_converges(g, psi, v):
                return fail("isotone", phi=phi, psi=psi, vertex=v)
            report.counts["pretopological"] += 1
            nv = gc.closed_neighborhood(g, v)
            if not (tail_filter(phi, g.n).contains(nv)
                    and filter_converges(g, FilterBase(g.n, frozenset({int(nv)})), v)):
                return fail("pretopological", phi=phi, vertex=v)

        v = rng.randrange(g.n)
        nv = gc.closed_neighborhood(g, v)
        d = random_directed_set(rng)
        choose = lambda a: rng.choice(list(nv)) if a in d.terminal else rng.randrange(g.n)  # noqa: E731
        a = Net(d, tuple(choose(i) for i in range(d.size)))
        b = Net(d, tuple(choose(i) for i in range(d.size)))
        selector = [rng.choice((LEFT, RIGHT)) for _ in range(d.size)]
        rho = mix(a, b, selector, start=rng.randrange(d.size))
        report.counts["stable"] += 1
        if net_converges(g, a, v) and net_converges(g, b, v) and not net_converges(g, rho, v):
            return fail("stable", phi=a, psi=b, rho=rho, vertex=v)
    return report


def _check_values(g: Graph, net: Net) -> None:
    if net.values and max(net.values) >= g.n:
        raise InputError("net takes a value outside the vertex set")
