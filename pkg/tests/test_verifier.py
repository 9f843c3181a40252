import pytest

from pretopo import mutants, verifier
from pretopo.errors import InputError

# ids that hold on every instance; the other two have small counterexamples
SOUND = [t for t in verifier.THEOREM_IDS if t not in ("hom_iff_continuous", "product_convergence")]


def test_catalog_has_fourteen_distinct_ids():
    assert len(verifier.THEOREM_IDS) == len(set(verifier.THEOREM_IDS)) == 14


def test_unknown_id():
    with pytest.raises(InputError):
        verifier.verify("nosuch")


def test_negative_bound():
    with pytest.raises(InputError):
        verifier.verify("clopen_structure", -1)


@pytest.mark.parametrize("n", [0, 1])
def test_tiny_bounds_pass(n):
    assert all(c.passed for c in verifier.verify_all(n, 0))


def test_clopen_singleton():
    c = verifier.verify("clopen_structure", 1, 5)
    assert c.passed and c.instances == 1 + 2


@pytest.mark.parametrize("tid", SOUND)
def test_sound_checks_pass_at_small_bound(tid):
    c = verifier.verify(tid, 4, 3)
    assert c.passed, c.counterexample
    assert c.instances > 0


def test_idempotent_full_bound():
    c = verifier.verify("idempotent_iff_transitive", 6, 0)
    assert c.passed and c.instances == sum(2 ** (n * (n - 1) // 2) for n in range(7))


def test_caps_are_applied():
    assert verifier.verify("order_iff_spanning", 9, 0).n_max == 4


def test_homomorphism_counterexample_is_least():
    c = verifier.verify("hom_iff_continuous", 3, 0)
    assert not c.passed
    cex = c.counterexample
    assert cex["G"] == {"n": 2, "edges": [[0, 1]]} and cex["H"] == {"n": 1, "edges": []}
    assert cex["f"] == [0, 0] and cex["continuous"] and not cex["homomorphism"]
    assert cex["adjacent_or_equal"]


def test_product_counterexample_is_least():
    c = verifier.verify("product_convergence", 4, 0)
    assert not c.passed
    cex = c.counterexample
    assert cex["G"] == {"n": 1, "edges": []} and cex["H"] == {"n": 2, "edges": [[0, 1]]}
    assert cex["graph_neighborhood"] == [(0, 0)]
    assert cex["product_neighborhood"] == [(0, 0), (0, 1)]


def test_deterministic():
    a = verifier.verify("limit_space_axioms", 3, 42)
    b = verifier.verify("limit_space_axioms", 3, 42)
    assert (a.passed, a.instances, a.counterexample) == (b.passed, b.instances, b.counterexample)
    c = verifier.verify("hom_iff_continuous", 4, 9)
    d = verifier.verify("hom_iff_continuous", 4, 9)
    assert c.counterexample == d.counterexample


def test_counterexample_reproduces():
    from pretopo import graph_core as gc
    from pretopo import solvers
    from pretopo.graph_core import Graph, VertexFunction

    cex = verifier.verify("hom_iff_continuous", 3, 0).counterexample
    g = Graph.from_edges(cex["G"]["n"], cex["G"]["edges"])
    h = Graph.from_edges(cex["H"]["n"], cex["H"]["edges"])
    f = VertexFunction(g.n, h.n, tuple(cex["f"]))
    assert gc.is_homomorphism(f, g, h) == cex["homomorphism"]
    assert solvers.is_continuous_map(f, g, h) == cex["continuous"]


@pytest.mark.parametrize("name", list(mutants.MUTANTS))
def test_each_mutant_is_caught(name):
    ids = {"adherence_drops_self": "clopen_structure",
           "neighborhood_drops_symmetry": "clopen_structure",
           "solver_off_by_one": "finite_compactness"}
    assert verifier.verify(ids[name], 4, 0).passed
    with mutants.applied(name):
        c = verifier.verify(ids[name], 4, 0)
    assert not c.passed and c.counterexample
    assert verifier.verify(ids[name], 4, 0).passed
