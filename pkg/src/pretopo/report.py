"""Versioned, JSON-serializable analysis reports."""

from __future__ import annotations

import dataclasses
import enum
import json
from dataclasses import dataclass, field
from typing import Any

from . import graph_core as gc
from . import infinite as inf
from . import pretopology as pt
from . import solvers
from .errors import InputError
from .graph_core import Graph, VertexSet
from .verifier import TheoremCheck

FORMAT_VERSION = 1


def jsonable(x: Any) -> Any:
    """Convert library values to plain JSON types (vertex sets become sorted lists)."""
    if isinstance(x, VertexSet):
        return list(x)
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, bool) or x is None or isinstance(x, (int, float, str)):
        return x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [jsonable(v) for v in items]
    if dataclasses.is_dataclass(x):
        return jsonable({f.name: getattr(x, f.name) for f in dataclasses.fields(x)})
    return repr(x)


@dataclass
class Report:
    kind: str
    input: str
    properties: dict = field(default_factory=dict)
    errors: dict = field(default_factory=dict)
    format_version: int = FORMAT_VERSION

    def __post_init__(self) -> None:
        self.properties = jsonable(self.properties)
        self.errors = jsonable(self.errors)

    def to_dict(self) -> dict:
        return {
            "format_version": self.format_version,
            "kind": self.kind,
            "input": self.input,
            "properties": self.properties,
            "errors": self.errors,
        }

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        version = d.get("format_version")
        if version != FORMAT_VERSION:
            raise InputError(f"unsupported report format_version {version!r}")
        missing = {"kind", "input", "properties", "errors"} - d.keys()
        if missing:
            raise InputError(f"report is missing {sorted(missing)}")
        return cls(d["kind"], d["input"], d["properties"], d["errors"], version)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))


def analyze_graph(g: Graph, source: str, skip_exact: bool = False) -> Report:
    props: dict[str, Any] = {"n": g.n, "num_edges": g.num_edges}
    errors: dict[str, str] = {}
    blocks = gc.connected_components(g)
    props["components"] = blocks
    props["connected"] = gc.is_connected(g)
    parts = solvers.bipartition(g)
    props["bipartite"] = parts is not None
    props["bipartition"] = parts
    props["transitive"] = gc.is_transitive(g)
    props["topological"] = pt.is_convergence_topological(g)
    props["transitivity_witness"] = gc.transitivity_violation(g)
    props["locally_irregular"] = solvers.is_locally_irregular(g)
    props["irregularity_witness"] = solvers.irregularity_violation(g)
    props["clopen"] = {"num_blocks": len(blocks), "num_clopen_sets": 1 << len(blocks)}
    props["complete"] = g.num_edges == g.n * (g.n - 1) // 2

    if skip_exact:
        res = solvers.greedy_dominating_set(g)
        props["dominating_set"] = {"set": res.set, "size": res.size, "optimal": False, "method": res.method}
        errors["min_internal_spanning_tree"] = "skipped (--skip-exact)"
    else:
        try:
            res = solvers.min_dominating_set(g)
            props["domination_number"] = res.size
            props["dominating_set"] = {"set": res.set, "size": res.size, "optimal": True, "method": res.method}
        except InputError as exc:
            errors["domination_number"] = str(exc)
            res = solvers.greedy_dominating_set(g)
            props["dominating_set"] = {"set": res.set, "size": res.size, "optimal": False, "method": res.method}
        try:
            tree = solvers.min_internal_spanning_tree(g)
            props["min_internal_spanning_tree"] = {
                "edges": tree.edges, "internal": tree.internal,
                "internal_count": len(tree.internal), "leaf_count": tree.leaf_count,
            }
        except InputError as exc:
            errors["min_internal_spanning_tree"] = str(exc)
    return Report("graph", source, props, errors)


def revalidate_graph_report(report: Report, g: Graph) -> list[str]:
    """Re-check every witness in a graph report against the library; returns the problems."""
    p = report.properties
    problems = []
    w = p.get("transitivity_witness")
    if w is not None:
        x, y, z = w
        if not (g.has_edge(x, y) and g.has_edge(y, z) and x != z and not g.has_edge(x, z)):
            problems.append("transitivity witness")
    elif not gc.is_transitive(g):
        problems.append("missing transitivity witness")
    if p.get("bipartition") is not None:
        a, b = p["bipartition"]
        if not solvers.separates_convergence(g, VertexSet(a), VertexSet(b)):
            problems.append("bipartition")
    e = p.get("irregularity_witness")
    if e is not None and not (g.has_edge(*e) and g.degree(e[0]) == g.degree(e[1])):
        problems.append("irregularity witness")
    ds = p.get("dominating_set")
    if ds is not None and not solvers.dominates(g, VertexSet(ds["set"])):
        problems.append("dominating set")
    tree = p.get("min_internal_spanning_tree")
    if tree is not None:
        t = Graph.from_edges(g.n, [tuple(e) for e in tree["edges"]])
        if len(tree["edges"]) != max(g.n - 1, 0) or not gc.is_connected(t) \
                or not all(g.has_edge(*e) for e in tree["edges"]):
            problems.append("spanning tree")
    if [list(b) for b in gc.connected_components(g)] != p.get("components"):
        problems.append("components")
    return problems


def _verdict(v: inf.TriVerdict) -> dict:
    return {"status": v.status, "certificate": v.certificate, "witness": v.witness, "bound": v.bound}


def analyze_family(fam: inf.Family, radius: int = inf.DEFAULT_RADIUS) -> Report:
    if radius < 1:
        raise InputError("radius must be positive")
    t = inf.truncate(fam.oracle, radius)
    props: dict[str, Any] = {
        "name": fam.name,
        "description": fam.description,
        "params": fam.params,
        "radius": radius,
        "truncation": {"vertices": t.graph.n, "edges": t.graph.num_edges},
        "vertex_ends": fam.vertex_ends,
        "edge_ends": fam.edge_ends,
        "stand_in": fam.stand_in,
    }
    errors: dict[str, str] = {}
    verdict = inf.is_compact(fam, radius)
    props["compact"] = _verdict(verdict)
    if verdict.is_verified:
        props["dominating_set_size"] = len(fam.dominating_set)
        ee = inf.edge_end_bound_check(fam)
        props["edge_end_bound"] = {"edge_ends": ee.edge_ends, "bound": ee.bound, "holds": ee.holds}
        rt = inf.rayless_spanning_tree(fam, radius)
        props["rayless_tree"] = {
            "internal_count": len(rt.internal_labels),
            "internal_labels": rt.internal_labels,
            "comparison_radius": rt.comparison_radius,
            "radius_stable": rt.radius_stable,
        }
    else:
        errors["edge_end_bound"] = "not applicable: compactness not verified"
        errors["rayless_tree"] = "not applicable: compactness not verified"
    return Report("family", fam.name, props, errors)


def family_ok(report: Report) -> bool:
    """False when a compact family's edge-end bound or tree stability fails."""
    p = report.properties
    if "edge_end_bound" in p and not p["edge_end_bound"]["holds"]:
        return False
    if "rayless_tree" in p and not p["rayless_tree"]["radius_stable"]:
        return False
    return True


def verify_report(checks: list[TheoremCheck], n_max: int, seed: int) -> Report:
    props = {
        "n_max": n_max,
        "seed": seed,
        "passed": all(c.passed for c in checks),
        "checks": [c.to_dict() for c in checks],
    }
    return Report("verify", f"verify(n_max={n_max}, seed={seed})", props)
