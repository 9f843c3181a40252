from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from pretopo import graph_core as gc
from pretopo.graph_core import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    slots = gc.edge_slots(n)
    mask = draw(st.integers(0, (1 << len(slots)) - 1))
    return gc.graph_from_mask(n, mask, slots)


@st.composite
def graphs_with_subset(draw, max_n: int = 7):
    g = draw(graphs(max_n=max_n))
    return g, draw(st.integers(0, (1 << g.n) - 1))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if gc.is_connected(g):
            return g


# Acceptance criteria record their outcome here; the summary hook prints one line each.
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def acceptance():
    return ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}")
