import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pretopo import graph_core as gc
from pretopo import infinite as inf
from pretopo.errors import InputError, SizeError
from pretopo.infinite import Status

RAY = inf.get_family("ray")
FAN = inf.get_family("fanray")
COMB = inf.get_family("comb")
LADDER = inf.get_family("ladder")
HUB = inf.get_family("hubrays")
DLADDER = inf.get_family("dominatedladder")
TREE = inf.get_family("binarytree")

# binary tree windows grow exponentially, so it gets a small radius
SETTINGS = {name: ((12, (2, 4, 6)) if name == "binarytree" else (inf.DEFAULT_RADIUS, inf.TAIL_DEPTHS))
            for name in inf.catalog_names()}


class TestCatalog:
    def test_names(self):
        assert set(inf.catalog_names()) >= {"ray", "fanray", "comb", "binarytree", "dominatedladder",
                                            "starofrays", "doubleray", "ladder", "hubrays"}

    def test_parametrized_star(self):
        assert inf.get_family("starofrays5").params == {"k": 5}
        assert inf.get_family("starofrays:2").params == {"k": 2}

    def test_unknown(self):
        with pytest.raises(InputError):
            inf.get_family("nosuch")

    @pytest.mark.parametrize("name", list(inf.catalog_names()))
    def test_rays_are_rays(self, name):
        fam = inf.get_family(name)
        for ray in fam.rays.values():
            ray.check(fam.oracle, 6 if name == "binarytree" else 40)

    @pytest.mark.parametrize("name", list(inf.catalog_names()))
    def test_oracle_symmetric(self, name):
        fam = inf.get_family(name)
        radius = SETTINGS[name][0] // 2
        t = inf.truncate(fam.oracle, radius)
        for u, v in t.graph.edges():
            assert fam.oracle.adjacent(t.labels[u], t.labels[v])


class TestTruncate:
    def test_ray_is_path(self):
        t = inf.truncate(RAY.oracle, 3)
        assert t.graph == gc.path_graph(4) and t.labels == (0, 1, 2, 3)

    def test_binary_tree(self):
        t = inf.truncate(TREE.oracle, 2)
        assert t.graph.n == 7 and t.graph.num_edges == 6 and gc.is_connected(t.graph)

    def test_fanray_radius_one(self):
        t = inf.truncate(FAN.oracle, 1)
        assert t.labels == (0, 1, 2) and t.graph.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_cap(self):
        with pytest.raises(SizeError):
            inf.truncate(TREE.oracle, 20, cap=1000)

    @pytest.mark.parametrize("name", ["ray", "fanray", "comb", "ladder", "dominatedladder", "starofrays"])
    def test_monotone_in_radius(self, name):
        o = inf.get_family(name).oracle
        prev = set()
        for r in (2, 4, 8, 16):
            labels = set(inf.truncate(o, r).labels)
            assert prev <= labels
            prev = labels

    @pytest.mark.parametrize("name", ["ray", "fanray", "comb", "ladder", "hubrays", "dominatedladder"])
    def test_interior_neighborhoods(self, name):
        o = inf.get_family(name).oracle
        t = inf.truncate(o, 12)
        window = set(o.window(12))
        for i, x in enumerate(t.labels):
            nb = o.neighbors(x)
            expect = {x} | ({u for u in window if u in nb} if isinstance(nb, inf.InfiniteNeighborhood)
                            else set(nb) & window)
            if expect <= set(t.labels):
                assert set(t.to_labels(gc.closed_neighborhood(t.graph, i))) == expect


class TestDomination:
    def test_fanray_apex(self):
        v = inf.is_dominating_oracle(FAN.oracle, {0}, 32)
        assert v.status is Status.VERIFIED

    def test_ray_refuted_at_five(self):
        v = inf.is_dominating_oracle(RAY.oracle, {0, 1, 2}, 5)
        assert v.is_refuted and v.witness == 5

    def test_comb_refuted_beyond_reach(self):
        d = {0, 2, 4}
        v = inf.is_dominating_oracle(COMB.oracle, d, 30)
        assert v.is_refuted and v.witness > max(d) + 2

    def test_window_alone_never_verifies(self):
        v = inf.is_dominating_oracle(FAN.oracle, {0}, 32, certificate=None)
        assert v.status in (Status.VERIFIED, Status.UNKNOWN)
        w = inf.is_dominating_oracle(RAY.oracle, set(range(40)), 10)
        assert w.status is Status.UNKNOWN

    @settings(max_examples=30)
    @given(st.sets(st.integers(0, 20), min_size=1, max_size=5), st.integers(25, 60))
    def test_larger_bound_larger_witness(self, d, bound):
        a = inf.is_dominating_oracle(RAY.oracle, d, bound)
        b = inf.is_dominating_oracle(RAY.oracle, d, bound + 7)
        assert a.is_refuted and b.is_refuted and b.witness > a.witness


class TestCompact:
    def test_fanray(self):
        v = inf.is_compact(FAN)
        assert v.is_verified and v.certificate["dominating_set"] == (0,)

    def test_dominated_ladder(self):
        v = inf.is_compact(DLADDER)
        assert v.is_verified and len(v.certificate["dominating_set"]) == 2

    @pytest.mark.parametrize("name", ["ray", "comb", "doubleray", "ladder"])
    def test_refuted(self, name):
        v = inf.is_compact(inf.get_family(name))
        assert v.is_refuted and v.witness is not None

    def test_ray_witness_grows(self):
        assert inf.is_compact(RAY, 40).witness < inf.is_compact(RAY, 80).witness

    @pytest.mark.parametrize("name", ["fanray", "hubrays", "starofrays", "dominatedladder"])
    def test_certificate_dominates_every_truncation(self, name):
        fam = inf.get_family(name)
        for r in (4, 16, 40):
            t = inf.truncate(fam.oracle, r)
            core = gc.neighborhood_of_set(t.graph, t.to_indices(fam.dominating_set))
            interior = [i for i, x in enumerate(t.labels) if fam.oracle.level(x) < r]
            assert all(i in core for i in interior)


class TestRays:
    def test_ladder_rails(self):
        for k in (2, 4, 8):
            for mode in ("vertex", "edge"):
                assert inf.rays_equivalent(LADDER, "a", "b", mode, k).is_verified

    def test_hub_pair_vertex_refuted(self):
        v = inf.rays_equivalent(HUB, "r", "s", "vertex", 2)
        assert v.is_refuted and v.witness == (0,)

    def test_hub_pair_edge_verified(self):
        for k in (2, 4):
            assert inf.rays_equivalent(HUB, "r", "s", "edge", k).is_verified

    def test_bad_mode(self):
        with pytest.raises(InputError):
            inf.rays_equivalent(LADDER, "a", "b", "face", 2)

    def test_window_too_small(self):
        with pytest.raises(SizeError):
            inf.rays_equivalent(LADDER, "a", "b", "vertex", 2, bound=4)

    @pytest.mark.parametrize("name", list(inf.catalog_names()))
    def test_vertex_level_implies_edge_level(self, name):
        fam = inf.get_family(name)
        bound, depths = SETTINGS[name]
        names = list(fam.rays)
        for i, r1 in enumerate(names):
            for r2 in names[i + 1:]:
                for k in (1, 2, 4):
                    if inf.rays_equivalent(fam, r1, r2, "vertex", k, bound, depths).is_verified:
                        assert inf.rays_equivalent(fam, r1, r2, "edge", k, bound, depths).is_verified

    def test_disjoint_paths_on_cycle(self):
        c = gc.cycle_graph(6)
        # endpoints count as used, so set-to-set paths need two sources
        assert inf.disjoint_paths(c, [0], [3], "vertex") == 1
        assert inf.disjoint_paths(c, [0, 1], [3, 4], "vertex") == 2
        assert inf.disjoint_paths(c, [0], [3], "edge") == 2
        assert inf.disjoint_paths(gc.path_graph(4), [0], [3], "vertex") == 1


class TestEdgeEnds:
    def test_fanray(self):
        r = inf.edge_end_bound_check(FAN)
        assert r.holds and r.edge_ends == 1 and r.bound == 1

    def test_dominated_ladder(self):
        r = inf.edge_end_bound_check(DLADDER)
        assert r.holds and r.edge_ends <= 2

    def test_star_of_rays(self):
        r = inf.edge_end_bound_check(inf.get_family("starofrays4"))
        assert r.holds and r.edge_ends == 4 == r.bound

    def test_not_compact(self):
        with pytest.raises(InputError):
            inf.edge_end_bound_check(RAY)

    @pytest.mark.parametrize("name", list(inf.catalog_names()))
    def test_bound_holds_on_compact_families(self, name):
        fam = inf.get_family(name)
        if fam.compact:
            assert inf.edge_end_bound_check(fam).holds


class TestRaylessTree:
    def test_fanray_star(self):
        for r in (4, 16, 64):
            rt = inf.rayless_spanning_tree(FAN, r)
            assert rt.internal_labels == (0,) and rt.radius_stable

    def test_dominated_ladder_stable(self):
        a = inf.rayless_spanning_tree(DLADDER, 16)
        b = inf.rayless_spanning_tree(DLADDER, 32)
        assert a.internal_labels == b.internal_labels and b.radius_stable and b.comparison_radius == 16
        assert len(b.internal_labels) <= 2 + 2

    def test_tree_spans_truncation(self):
        rt = inf.rayless_spanning_tree(DLADDER, 20)
        g = rt.truncation.graph
        tree = gc.Graph.from_edges(g.n, rt.tree.edges)
        assert len(rt.tree.edges) == g.n - 1 and gc.is_connected(tree)

    def test_ray_not_compact(self):
        with pytest.raises(InputError):
            inf.rayless_spanning_tree(RAY)


class TestEventualFiniteness:
    def test_ray(self):
        r = inf.eventually_finite_check(RAY.oracle, 3, 10)
        assert r.finite and r.closed_neighborhood == (2, 3, 4)

    def test_fanray_apex(self):
        r = inf.eventually_finite_check(FAN.oracle, 0, 6)
        assert not r.finite
        terms = r.sequence_terms
        assert len(set(terms)) == 6 and all(FAN.oracle.adjacent(0, x) for x in terms)

    def test_binary_tree(self):
        assert inf.eventually_finite_check(TREE.oracle, 5, 4).finite
