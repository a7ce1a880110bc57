"""Constructive transformations with replayable traces and bidirectional
witness translation:

* SAT -> clause-chain split (every clause of size k becomes k clauses of
  size 2/3 over k-1 fresh variables; output has at most one major literal
  per clause),
* bad-pair elimination (repeatedly removes a clause pair {l1,l2} / {~l1,~l2}
  while preserving satisfiability),
* the hub/clause/variable-pair gadget graph whose hub sheds exactly when the
  formula is unsatisfiable,
* the pendant extension turning a non-shedding vertex question into a
  relating-edge question.

Assignments and witnesses translate across every stage in both directions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import kernels
from .cnf import (
    CnfFormula,
    classify_literals,
    clause_key,
    evaluate,
    find_bad_pairs,
    is_23sat_instance,
    lit_value,
)
from .deciders import (
    RelatingWitness,
    ShedComplementWitness,
    validate_relating_witness,
    validate_shed_witness,
)
from .errors import ContractViolation, ReledgeError
from .graphs import Graph, dominates, is_independent, neighborhood_layer


# --- trace machinery -------------------------------------------------------

@dataclass(frozen=True)
class UnitPropStep:
    literal: int
    deleted: tuple  # clause indices (at the time of the step) that held the literal


@dataclass(frozen=True)
class UnsatSentinelStep:
    """Propagation emptied a clause; output replaced by a fixed UNSAT instance."""

    conflict_literal: int


@dataclass(frozen=True)
class ChainSplitStep:
    clause_index: int
    literals: tuple  # clause literals in canonical order at split time
    aux_vars: tuple  # the k-1 fresh variables, ascending


@dataclass(frozen=True)
class BadPairCase1Step:
    """l1 forced false, l2 forced true; every clause with ~l1 or l2 deleted."""

    clause_a: int
    clause_b: int
    lit1: int
    lit2: int
    l1: int
    l2: int
    deleted: tuple


@dataclass(frozen=True)
class BadPairCase2Step:
    """Variable of l1 substituted to the opposite of l2; both clauses deleted."""

    clause_a: int
    clause_b: int
    lit1: int
    lit2: int
    l1: int
    l2: int
    deleted: tuple


@dataclass(frozen=True)
class PendantStep:
    vertex: int
    new_vertex: int


@dataclass(frozen=True)
class ReductionTrace:
    """Ordered, replayable log of one transformation.

    source_size / target_size are variable counts for formula stages and
    vertex counts for graph stages.
    """

    source_size: int
    target_size: int
    steps: tuple = field(default_factory=tuple)


_STEP_KINDS = {
    UnitPropStep: "unit-prop",
    UnsatSentinelStep: "unsat-sentinel",
    ChainSplitStep: "chain-split",
    BadPairCase1Step: "badpair-case1",
    BadPairCase2Step: "badpair-case2",
    PendantStep: "pendant",
}


def _step_to_dict(step):
    kind = _STEP_KINDS[type(step)]
    if isinstance(step, UnitPropStep):
        return {"kind": kind, "literal": step.literal, "deleted": list(step.deleted)}
    if isinstance(step, UnsatSentinelStep):
        return {"kind": kind, "conflict_literal": step.conflict_literal}
    if isinstance(step, ChainSplitStep):
        return {"kind": kind, "clause": step.clause_index,
                "literals": list(step.literals), "aux_vars": list(step.aux_vars)}
    if isinstance(step, (BadPairCase1Step, BadPairCase2Step)):
        return {"kind": kind, "clause_a": step.clause_a, "clause_b": step.clause_b,
                "lit1": step.lit1, "lit2": step.lit2, "l1": step.l1, "l2": step.l2,
                "deleted": list(step.deleted)}
    if isinstance(step, PendantStep):
        return {"kind": kind, "vertex": step.vertex, "new_vertex": step.new_vertex}
    raise ReledgeError(f"unknown step type {type(step)!r}")


def _step_from_dict(d):
    kind = d["kind"]
    if kind == "unit-prop":
        return UnitPropStep(d["literal"], tuple(d["deleted"]))
    if kind == "unsat-sentinel":
        return UnsatSentinelStep(d["conflict_literal"])
    if kind == "chain-split":
        return ChainSplitStep(d["clause"], tuple(d["literals"]), tuple(d["aux_vars"]))
    if kind == "badpair-case1":
        return BadPairCase1Step(d["clause_a"], d["clause_b"], d["lit1"], d["lit2"],
                                d["l1"], d["l2"], tuple(d["deleted"]))
    if kind == "badpair-case2":
        return BadPairCase2Step(d["clause_a"], d["clause_b"], d["lit1"], d["lit2"],
                                d["l1"], d["l2"], tuple(d["deleted"]))
    if kind == "pendant":
        return PendantStep(d["vertex"], d["new_vertex"])
    raise ContractViolation(f"unknown trace step kind {kind!r}")


def trace_to_json(trace: ReductionTrace) -> str:
    doc = {"source_size": trace.source_size, "target_size": trace.target_size,
           "steps": [_step_to_dict(s) for s in trace.steps]}
    return json.dumps(doc, indent=2) + "\n"


def trace_from_json(text: str) -> ReductionTrace:
    doc = json.loads(text)
    return ReductionTrace(doc["source_size"], doc["target_size"],
                          tuple(_step_from_dict(s) for s in doc["steps"]))


# --- SAT -> 23SAT ----------------------------------------------------------

def _canonical_unsat_instance() -> CnfFormula:
    """Chain-split image of {{a,b},{~a,b},{a,~b},{~a,~b}}: a fixed instance
    with clause sizes 2, one major literal per clause, no bad pairs, and no
    satisfying assignment."""
    clauses = [[1, 3], [-3, 2], [-1, 4], [-4, 2], [1, 5], [-5, -2], [-1, 6], [-6, -2]]
    return CnfFormula.from_lists(6, clauses)


def _chain_clauses(lits, aux):
    """The split of one clause: {l1,y1}, {~y1,l2,y2}, ..., {~y_{k-1},lk}."""
    k = len(lits)
    out = [frozenset({lits[0], aux[0]})]
    for r in range(2, k):
        out.append(frozenset({-aux[r - 2], lits[r - 1], aux[r - 1]}))
    out.append(frozenset({-aux[k - 2], lits[k - 1]}))
    return out


def sat_to_23sat(f: CnfFormula):
    """Split every clause into an equisatisfiable chain of 2/3-clauses.

    Unit clauses are removed first by unit propagation (recorded in the
    trace); if propagation hits a contradiction the output is a fixed
    unsatisfiable instance flagged by an unsat-sentinel step.  The result
    always satisfies the 2/3-size and one-major-literal-per-clause shape.
    """
    steps = []
    work = [set(c) for c in f.clauses]
    while True:
        unit_literal = None
        for c in work:
            if len(c) == 1:
                unit_literal = next(iter(c))
                break
        if unit_literal is None:
            break
        l = unit_literal
        deleted = tuple(i for i, c in enumerate(work) if l in c)
        steps.append(UnitPropStep(l, deleted))
        new_work = []
        conflict = False
        for c in work:
            if l in c:
                continue
            if -l in c:
                c = c - {-l}
                if not c:
                    conflict = True
                    break
                new_work.append(c)
            else:
                new_work.append(c)
        if conflict:
            steps.append(UnsatSentinelStep(l))
            out = _canonical_unsat_instance()
            return out, ReductionTrace(f.num_vars, out.num_vars, tuple(steps))
        work = new_work

    next_aux = f.num_vars + 1
    out_clauses = []
    for j, c in enumerate(work):
        lits = clause_key(frozenset(c))
        k = len(lits)
        assert k >= 2, "unit clause survived propagation"
        aux = tuple(range(next_aux, next_aux + k - 1))
        next_aux += k - 1
        steps.append(ChainSplitStep(j, lits, aux))
        out_clauses.extend(_chain_clauses(lits, aux))
    out = CnfFormula(next_aux - 1, tuple(out_clauses))
    ok, why = is_23sat_instance(out)
    assert ok, why
    return out, ReductionTrace(f.num_vars, out.num_vars, tuple(steps))


def _set_literal(t: dict, lit: int, value: bool):
    t[abs(lit)] = value if lit > 0 else (not value)


def _lit_value_total(t, lit):
    try:
        return lit_value(t, lit)
    except KeyError:
        raise ContractViolation(
            f"assignment is not total: variable {abs(lit)} missing") from None


def lift_assignment(trace: ReductionTrace, t1: dict) -> dict:
    """Extend a satisfying assignment of the source formula across the split.

    For each chain, auxiliaries before the first true source literal are set
    true and the rest false.
    """
    for step in trace.steps:
        if isinstance(step, UnsatSentinelStep):
            raise ContractViolation("source formula is unsatisfiable; nothing to lift")
        if isinstance(step, UnitPropStep) and not _lit_value_total(t1, step.literal):
            raise ContractViolation(
                f"assignment falsifies forced unit literal {step.literal}")
        if isinstance(step, ChainSplitStep) and not any(_lit_value_total(t1, l) for l in step.literals):
            raise ContractViolation(
                f"assignment does not satisfy source clause {step.clause_index}")
    t2 = dict(t1)
    for step in trace.steps:
        if not isinstance(step, ChainSplitStep):
            continue
        r = next(idx for idx, l in enumerate(step.literals, start=1) if lit_value(t1, l))
        for idx, a in enumerate(step.aux_vars, start=1):
            t2[a] = idx < r
    return t2


def project_assignment(trace: ReductionTrace, t2: dict) -> dict:
    """Restrict a satisfying assignment of the split instance to the source
    variables, re-imposing unit-propagated values."""
    for step in trace.steps:
        if isinstance(step, UnsatSentinelStep):
            raise ContractViolation("split instance is unsatisfiable; nothing satisfies it")
        if isinstance(step, ChainSplitStep):
            for clause in _chain_clauses(list(step.literals), list(step.aux_vars)):
                if not any(_lit_value_total(t2, l) for l in clause):
                    raise ContractViolation(
                        f"assignment does not satisfy the chain of clause {step.clause_index}")
    for v in range(1, trace.source_size + 1):
        if v not in t2:
            raise ContractViolation(f"assignment is not total: variable {v} missing")
    t1 = {v: bool(t2[v]) for v in range(1, trace.source_size + 1)}
    for step in trace.steps:
        if isinstance(step, UnitPropStep):
            _set_literal(t1, step.literal, True)
    return t1


# --- bad-pair elimination ---------------------------------------------------

def eliminate_bad_pairs(f: CnfFormula):
    """Iteratively remove the lexicographically first bad pair until none
    remain.  The output is an equisatisfiable instance of the same shape
    with zero bad pairs; forced values / substitutions are recorded so
    assignments can be backfilled.
    """
    ok, why = is_23sat_instance(f)
    if not ok:
        raise ContractViolation(f"not a valid 2/3-clause instance: {why}")
    work = list(f.clauses)
    steps = []
    pair_count = len(find_bad_pairs(CnfFormula(f.num_vars, tuple(work))))
    while True:
        current = CnfFormula(f.num_vars, tuple(work))
        pairs = find_bad_pairs(current)
        if not pairs:
            break
        bp = pairs[0]
        cls = classify_literals(current)
        if not cls.is_major(bp.lit1):
            l1, l2 = bp.lit1, bp.lit2
        else:
            l1, l2 = bp.lit2, bp.lit1
        assert not cls.is_major(l1), "both pair literals major in one clause"
        if not cls.is_major(-l2):
            deleted = tuple(sorted(i for i, c in enumerate(work) if -l1 in c or l2 in c))
            steps.append(BadPairCase1Step(bp.clause_a, bp.clause_b, bp.lit1, bp.lit2,
                                          l1, l2, deleted))
            gone_vars = {abs(l1), abs(l2)}
        else:
            assert not cls.is_major(-l1), "both negations major in the partner clause"
            deleted = tuple(sorted((bp.clause_a, bp.clause_b)))
            steps.append(BadPairCase2Step(bp.clause_a, bp.clause_b, bp.lit1, bp.lit2,
                                          l1, l2, deleted))
            gone_vars = {abs(l1)}
        doomed = set(deleted)
        work = [c for i, c in enumerate(work) if i not in doomed]
        for c in work:
            leftover = gone_vars & {abs(l) for l in c}
            if leftover:
                raise ReledgeError(
                    f"eliminated variables {sorted(leftover)} survive in the formula")
        new_count = len(find_bad_pairs(CnfFormula(f.num_vars, tuple(work))))
        if new_count >= pair_count:
            raise ReledgeError("bad-pair count failed to decrease")
        pair_count = new_count
    out = CnfFormula(f.num_vars, tuple(work))
    ok, why = is_23sat_instance(out)
    assert ok, why
    return out, ReductionTrace(f.num_vars, f.num_vars, tuple(steps))


def backfill_assignment(f_in: CnfFormula, trace: ReductionTrace, t_out: dict) -> dict:
    """Turn a satisfying assignment of the eliminated instance into one for
    the pre-elimination instance by replaying the trace newest-first.

    Variables missing from t_out default to false before the replay.
    """
    reduced = replay_formula_trace(f_in, trace)
    t = {v: bool(t_out.get(v, False)) for v in range(1, f_in.num_vars + 1)}
    if not evaluate(reduced, t):
        raise ContractViolation("assignment does not satisfy the reduced instance")
    for step in reversed(trace.steps):
        if isinstance(step, BadPairCase1Step):
            _set_literal(t, step.l1, False)
            _set_literal(t, step.l2, True)
        elif isinstance(step, BadPairCase2Step):
            _set_literal(t, step.l1, not lit_value(t, step.l2))
        else:
            raise ContractViolation("trace contains non-elimination steps")
    if not evaluate(f_in, t):
        raise ReledgeError("backfilled assignment fails the source instance")
    return t


# --- trace replay -----------------------------------------------------------

def replay_formula_trace(f: CnfFormula, trace: ReductionTrace) -> CnfFormula:
    """Re-apply a formula-stage trace to its source, reproducing the target."""
    work = [set(c) for c in f.clauses]
    num_vars = f.num_vars
    idx = 0
    steps = trace.steps
    while idx < len(steps):
        step = steps[idx]
        if isinstance(step, UnitPropStep):
            l = step.literal
            expected = tuple(i for i, c in enumerate(work) if l in c)
            if expected != step.deleted:
                raise ContractViolation("unit-prop step does not match the formula")
            new_work = []
            for c in work:
                if l in c:
                    continue
                c = c - {-l}
                new_work.append(c)
            work = new_work
            idx += 1
        elif isinstance(step, UnsatSentinelStep):
            if idx != len(steps) - 1:
                raise ContractViolation("unsat-sentinel must be the final step")
            return _canonical_unsat_instance()
        elif isinstance(step, ChainSplitStep):
            # a run of chain-split steps rewrites the whole current formula
            run = []
            while idx < len(steps) and isinstance(steps[idx], ChainSplitStep):
                run.append(steps[idx])
                idx += 1
            if len(run) != len(work):
                raise ContractViolation("chain-split run does not cover every clause")
            out_clauses = []
            for j, step_j in enumerate(run):
                if step_j.clause_index != j or set(step_j.literals) != work[j]:
                    raise ContractViolation(f"chain-split step {j} does not match clause {j}")
                out_clauses.extend(_chain_clauses(list(step_j.literals), list(step_j.aux_vars)))
                num_vars = max(num_vars, max(step_j.aux_vars))
            work = [set(c) for c in out_clauses]
        elif isinstance(step, (BadPairCase1Step, BadPairCase2Step)):
            doomed = set(step.deleted)
            if any(i >= len(work) for i in doomed):
                raise ContractViolation("elimination step indexes past the formula")
            work = [c for i, c in enumerate(work) if i not in doomed]
            idx += 1
        else:
            raise ContractViolation(f"step {type(step).__name__} does not apply to formulas")
    if num_vars != trace.target_size:
        raise ContractViolation("replayed variable count disagrees with the trace")
    return CnfFormula(num_vars, tuple(frozenset(c) for c in work))


def replay_graph_trace(g: Graph, trace: ReductionTrace) -> Graph:
    """Re-apply a graph-stage (pendant) trace to its source graph."""
    out = g
    for step in trace.steps:
        if not isinstance(step, PendantStep):
            raise ContractViolation(f"step {type(step).__name__} does not apply to graphs")
        if step.new_vertex != out.num_vertices + 1:
            raise ContractViolation("pendant step does not match the graph size")
        out = Graph.from_edges(out.num_vertices + 1,
                               out.edges() + [(step.vertex, step.new_vertex)])
    return out


# --- formula -> graph gadget -------------------------------------------------

@dataclass(frozen=True)
class SatGraphMap:
    """Vertex dictionary of the gadget graph: hub, one vertex per clause,
    and an adjacent vertex pair per variable (positive/negative literal)."""

    hub: int
    clause_vertex: dict  # 1-based clause index -> vertex
    pos_vertex: dict  # variable -> vertex of the positive literal
    neg_vertex: dict  # variable -> vertex of the negative literal

    def num_formula_vars(self) -> int:
        return len(self.pos_vertex)


def map_to_json(m: SatGraphMap) -> str:
    doc = {
        "hub": m.hub,
        "clauses": {str(j): v for j, v in sorted(m.clause_vertex.items())},
        "pos": {str(i): v for i, v in sorted(m.pos_vertex.items())},
        "neg": {str(i): v for i, v in sorted(m.neg_vertex.items())},
    }
    return json.dumps(doc, indent=2) + "\n"


def map_from_json(text: str) -> SatGraphMap:
    doc = json.loads(text)
    return SatGraphMap(
        doc["hub"],
        {int(j): v for j, v in doc["clauses"].items()},
        {int(i): v for i, v in doc["pos"].items()},
        {int(i): v for i, v in doc["neg"].items()},
    )


def build_sat_graph(f: CnfFormula):
    """The gadget graph: hub adjacent to every clause vertex, each variable
    an adjacent pair (u_i, u_i'), clause vertices wired to the literal
    vertices they contain.

    The hub fails to shed exactly when the formula is satisfiable.  With no
    clauses the hub is isolated, and the empty set witnesses non-shedding,
    matching the trivial satisfiability of an empty formula.
    """
    n, m = f.num_vars, len(f.clauses)
    hub = 1
    clause_vertex = {j: 1 + j for j in range(1, m + 1)}
    pos_vertex = {i: 1 + m + 2 * i - 1 for i in range(1, n + 1)}
    neg_vertex = {i: 1 + m + 2 * i for i in range(1, n + 1)}
    edges = [(hub, w) for w in clause_vertex.values()]
    edges += [(pos_vertex[i], neg_vertex[i]) for i in range(1, n + 1)]
    for j, c in enumerate(f.clauses, start=1):
        for l in c:
            lit_vertex = pos_vertex[l] if l > 0 else neg_vertex[-l]
            edges.append((min(clause_vertex[j], lit_vertex), max(clause_vertex[j], lit_vertex)))
    g = Graph.from_edges(1 + m + 2 * n, edges)
    return g, SatGraphMap(hub, clause_vertex, pos_vertex, neg_vertex)


def validate_sat_graph(g: Graph, f: CnfFormula, m: SatGraphMap) -> bool:
    """Structural invariants of the gadget, including that the second
    neighborhood of the hub induces only the variable-pair matching edges."""
    n_vars, n_clauses = f.num_vars, len(f.clauses)
    vertices = [m.hub] + list(m.clause_vertex.values()) \
        + list(m.pos_vertex.values()) + list(m.neg_vertex.values())
    if len(set(vertices)) != len(vertices) or len(vertices) != g.num_vertices:
        return False
    if g.adjacency[m.hub] != frozenset(m.clause_vertex.values()):
        return False
    expected = set()
    for j in range(1, n_clauses + 1):
        expected.add((min(m.hub, m.clause_vertex[j]), max(m.hub, m.clause_vertex[j])))
    for i in range(1, n_vars + 1):
        u, un = m.pos_vertex[i], m.neg_vertex[i]
        expected.add((min(u, un), max(u, un)))
    for j, c in enumerate(f.clauses, start=1):
        w = m.clause_vertex[j]
        for l in c:
            lv = m.pos_vertex[l] if l > 0 else m.neg_vertex[-l]
            expected.add((min(w, lv), max(w, lv)))
    if set(g.edges()) != expected:
        return False
    pair_edges = {(min(m.pos_vertex[i], m.neg_vertex[i]), max(m.pos_vertex[i], m.neg_vertex[i]))
                  for i in range(1, n_vars + 1)}
    if n_clauses:
        n2 = neighborhood_layer(g, {m.hub}, 2)
        for u in n2:
            for v in g.adjacency[u]:
                if v in n2 and (min(u, v), max(u, v)) not in pair_edges:
                    return False
    return True


def assignment_to_witness(g: Graph, m: SatGraphMap, t: dict) -> ShedComplementWitness:
    """Select the literal vertex matching each variable's value, keeping the
    vertices at distance two from the hub.  Domination of the hub's
    neighborhood is equivalent to t satisfying the formula, so an
    unsatisfying assignment is rejected here.
    """
    n2 = neighborhood_layer(g, {m.hub}, 2)
    s = set()
    for i in range(1, m.num_formula_vars() + 1):
        if i not in t:
            raise ContractViolation(f"assignment is not total: variable {i} missing")
        v = m.pos_vertex[i] if t[i] else m.neg_vertex[i]
        if v in n2:
            s.add(v)
    witness = ShedComplementWitness(frozenset(s))
    if not is_independent(g, witness.set_s) or not dominates(g, witness.set_s, g.adjacency[m.hub]):
        raise ContractViolation("assignment does not satisfy the formula behind this graph")
    return witness


def witness_to_assignment(g: Graph, m: SatGraphMap, s: ShedComplementWitness) -> dict:
    """Variable i is true exactly when its positive-literal vertex is in S."""
    if not validate_shed_witness(g, m.hub, s):
        raise ContractViolation("invalid non-shedding witness for the hub")
    return {i: (m.pos_vertex[i] in s.set_s) for i in range(1, m.num_formula_vars() + 1)}


# --- pendant extension -------------------------------------------------------

def add_pendant(g: Graph, x: int):
    """Attach a fresh degree-one vertex y to x; the edge xy is relating in
    the extension exactly when x fails to shed in g.  A pendant lies on no
    cycle, so every cycle-freeness property of g carries over."""
    g._check_vertex(x)
    y = g.num_vertices + 1
    g2 = Graph.from_edges(y, g.edges() + [(x, y)])
    trace = ReductionTrace(g.num_vertices, y, (PendantStep(x, y),))
    return g2, (x, y), trace


def _drop_last_vertex(g: Graph) -> Graph:
    n = g.num_vertices
    return Graph.from_edges(n - 1, [(u, v) for u, v in g.edges() if v != n and u != n])


def shed_witness_to_relating_witness(g: Graph, x: int, s: ShedComplementWitness) -> RelatingWitness:
    """Grow the non-shedding witness into a maximal independent set of
    g minus x (greedy, ascending, never entering N[x]); in the pendant
    extension that set pairs with both x and the new vertex."""
    if not validate_shed_witness(g, x, s):
        raise ContractViolation(f"invalid non-shedding witness for vertex {x}")
    chosen = set(s.set_s)
    blocked = {x} | set(g.adjacency[x])
    for v in chosen:
        blocked.add(v)
        blocked.update(g.adjacency[v])
    for v in g.vertices():
        if v not in blocked:
            chosen.add(v)
            blocked.add(v)
            blocked.update(g.adjacency[v])
    return RelatingWitness(frozenset(chosen))


def relating_witness_to_shed_witness(g_prime: Graph, x: int, w: RelatingWitness) -> ShedComplementWitness:
    """Intersect a relating witness for the pendant edge with the second
    neighborhood of x, computed in the graph without the pendant."""
    y = g_prime.num_vertices
    if g_prime.adjacency[y] != frozenset({x}):
        raise ContractViolation(f"vertex {y} is not a pendant attached to {x}")
    if not validate_relating_witness(g_prime, x, y, w):
        raise ContractViolation("invalid relating witness for the pendant edge")
    g = _drop_last_vertex(g_prime)
    n2 = neighborhood_layer(g, {x}, 2) if g.num_vertices else frozenset()
    witness = ShedComplementWitness(frozenset(w.set_s & n2))
    if not validate_shed_witness(g, x, witness):
        raise ReledgeError("translated witness fails validation")
    return witness


# --- end-to-end pipeline ------------------------------------------------------

@dataclass(frozen=True)
class PipelineArtifact:
    """Everything the full reduction produces, stage by stage."""

    source: CnfFormula
    split: CnfFormula
    split_trace: ReductionTrace
    nobad: CnfFormula
    nobad_trace: ReductionTrace
    sat_graph: Graph
    graph_map: SatGraphMap
    re_graph: Graph
    re_edge: tuple
    pendant_trace: ReductionTrace


def full_pipeline(f: CnfFormula) -> PipelineArtifact:
    """source -> chain split -> bad-pair elimination -> gadget graph ->
    pendant extension.  The final graph never contains a 6-cycle, and its
    marked edge is relating exactly when the source formula is satisfiable.
    """
    split, split_trace = sat_to_23sat(f)
    nobad, nobad_trace = eliminate_bad_pairs(split)
    g, gmap = build_sat_graph(nobad)
    g2, edge, pendant_trace = add_pendant(g, gmap.hub)
    if kernels.has_cycle(g2, 6):
        raise ReledgeError("pipeline produced a graph with a 6-cycle")
    return PipelineArtifact(f, split, split_trace, nobad, nobad_trace,
                            g, gmap, g2, edge, pendant_trace)


def composite_trace_json(artifact: PipelineArtifact) -> str:
    doc = {"stages": [
        {"name": "to23sat", "trace": json.loads(trace_to_json(artifact.split_trace))},
        {"name": "debadpair", "trace": json.loads(trace_to_json(artifact.nobad_trace))},
        {"name": "build-graph", "map": json.loads(map_to_json(artifact.graph_map))},
        {"name": "pendant", "trace": json.loads(trace_to_json(artifact.pendant_trace))},
    ]}
    return json.dumps(doc, indent=2) + "\n"
