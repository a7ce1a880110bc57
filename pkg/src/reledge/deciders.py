"""Exact deciders with witnesses: relating edges, shedding vertices, the W2
class test, and the shedding/relating consistency cross-check.

Witness searches enumerate candidate sets by increasing size, then
lexicographically, so the first (hence returned) witness is canonical.
Search effort is bounded by a cap on visited candidate sets; exceeding it
raises ResourceLimitExceeded rather than guessing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from . import kernels
from .errors import ContractViolation, ResourceLimitExceeded
from .graphs import (
    Graph,
    contains_cycle_of_length,
    dominates,
    is_independent,
    is_maximal_independent,
    is_well_covered,
    neighborhood_layer,
)

DEFAULT_SET_CAP = 1 << 20


@dataclass(frozen=True)
class RelatingWitness:
    """Independent S with S+x and S+y both maximal independent."""

    set_s: frozenset


@dataclass(frozen=True)
class ShedComplementWitness:
    """Independent S inside N_2(v) dominating N(v): proof v is not shedding."""

    set_s: frozenset


def validate_relating_witness(g: Graph, x: int, y: int, w: RelatingWitness) -> bool:
    s = w.set_s
    return (
        is_independent(g, s)
        and x not in s and y not in s
        and is_maximal_independent(g, s | {x})
        and is_maximal_independent(g, s | {y})
    )


def validate_shed_witness(g: Graph, v: int, w: ShedComplementWitness) -> bool:
    s = w.set_s
    n2 = neighborhood_layer(g, {v}, 2)
    return s <= n2 and is_independent(g, s) and dominates(g, s, g.adjacency[v])


def is_relating(g: Graph, x: int, y: int, cap: int = DEFAULT_SET_CAP):
    """Decide whether edge xy is relating; returns (bool, witness | None).

    Exhaustive over independent sets disjoint from N[x] ∪ N[y] (any witness
    must avoid both closed neighborhoods, or S+x / S+y stops being
    independent).
    """
    if not g.has_edge(x, y):
        raise ContractViolation(f"({x},{y}) is not an edge")
    status, witness, _ = kernels.search_relating_set(g, x, y, cap)
    if status == kernels.CAP_EXCEEDED:
        raise ResourceLimitExceeded(f"relating search for edge ({x},{y}) exceeded cap {cap}")
    if witness is None:
        return False, None
    return True, RelatingWitness(witness)


def is_shedding(g: Graph, v: int, cap: int = DEFAULT_SET_CAP):
    """Decide whether v is shedding; returns (bool, complement witness | None).

    The witness, present exactly when v is NOT shedding, is an independent
    subset of N_2(v) dominating N(v).  An isolated vertex is not shedding:
    the empty set dominates its empty neighborhood.
    """
    g._check_vertex(v)
    nv = g.adjacency[v]
    if not nv:
        return False, ShedComplementWitness(frozenset())
    n2 = neighborhood_layer(g, {v}, 2)
    status, witness, _ = kernels.search_dominating_independent(g, n2, nv, cap)
    if status == kernels.CAP_EXCEEDED:
        raise ResourceLimitExceeded(f"shedding search for vertex {v} exceeded cap {cap}")
    if witness is None:
        return True, None
    return False, ShedComplementWitness(witness)


def is_w2(g: Graph, mis_cap: int = 1_000_000, set_cap: int = DEFAULT_SET_CAP) -> bool:
    """Membership in W2 for graphs without isolated vertices: well-covered
    and every vertex shedding."""
    for v in g.vertices():
        if not g.adjacency[v]:
            raise ContractViolation(f"vertex {v} is isolated")
    if not is_well_covered(g, mis_cap):
        return False
    return all(is_shedding(g, v, set_cap)[0] for v in g.vertices())


@dataclass(frozen=True)
class CrosscheckReport:
    """Outcome of the shedding/relating consistency check on one edge."""

    hypotheses_met: bool
    failures: tuple  # human-readable reasons when hypotheses fail
    x_shedding: Optional[bool]
    y_shedding: Optional[bool]
    relating: Optional[bool]
    consistent: Optional[bool]  # None when no assertion was made


def crosscheck_shedding_relating(g: Graph, x: int, y: int,
                                 cap: int = DEFAULT_SET_CAP) -> CrosscheckReport:
    """For C4-, C5- and C6-free graphs and an edge xy with disjoint
    neighborhoods and both degrees >= 2, 'neither endpoint sheds' must
    coincide with 'xy is relating'.  Decides both sides independently and
    compares; reports hypotheses-not-met without asserting otherwise.
    """
    if not g.has_edge(x, y):
        raise ContractViolation(f"({x},{y}) is not an edge")
    failures = []
    for k in (4, 5, 6):
        if contains_cycle_of_length(g, k) is not None:
            failures.append(f"graph contains a C{k}")
    common = g.adjacency[x] & g.adjacency[y]
    if common:
        failures.append(f"N(x) and N(y) share {sorted(common)}")
    if g.degree(x) < 2:
        failures.append(f"degree of {x} is {g.degree(x)} < 2")
    if g.degree(y) < 2:
        failures.append(f"degree of {y} is {g.degree(y)} < 2")
    if failures:
        return CrosscheckReport(False, tuple(failures), None, None, None, None)
    shed_x, _ = is_shedding(g, x, cap)
    shed_y, _ = is_shedding(g, y, cap)
    relating, _ = is_relating(g, x, y, cap)
    consistent = relating == (not shed_x and not shed_y)
    return CrosscheckReport(True, (), shed_x, shed_y, relating, consistent)


def witness_to_json(kind: str, witness_set, *, graph_ref: str = "",
                    edge=None, vertex=None) -> str:
    """Serialize a witness in the shared interchange format."""
    if kind not in ("relating", "not-shedding"):
        raise ContractViolation(f"unknown witness kind {kind!r}")
    doc = {"kind": kind, "graph": graph_ref}
    if kind == "relating":
        if edge is None:
            raise ContractViolation("relating witness requires an edge")
        doc["edge"] = [int(edge[0]), int(edge[1])]
    else:
        if vertex is None:
            raise ContractViolation("not-shedding witness requires a vertex")
        doc["vertex"] = int(vertex)
    doc["set"] = sorted(int(v) for v in witness_set)
    return json.dumps(doc, indent=None, separators=(", ", ": ")) + "\n"


def witness_from_json(text: str) -> dict:
    doc = json.loads(text)
    if doc.get("kind") not in ("relating", "not-shedding"):
        raise ContractViolation("witness JSON must carry kind 'relating' or 'not-shedding'")
    doc["set"] = frozenset(doc.get("set", []))
    return doc
