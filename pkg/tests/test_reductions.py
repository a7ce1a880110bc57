import pytest

from helpers import path_graph
from reledge.cnf import (
    CnfFormula,
    evaluate,
    find_bad_pairs,
    is_23sat_instance,
)
from reledge.deciders import (
    is_relating,
    is_shedding,
    validate_relating_witness,
    validate_shed_witness,
)
from reledge.errors import ContractViolation
from reledge.generate import random_23sat, random_formula, split_seed
from reledge.graphs import Graph, contains_cycle_of_length, neighborhood_layer
from reledge.reductions import (
    BadPairCase1Step,
    BadPairCase2Step,
    ChainSplitStep,
    PendantStep,
    UnitPropStep,
    UnsatSentinelStep,
    add_pendant,
    assignment_to_witness,
    backfill_assignment,
    build_sat_graph,
    composite_trace_json,
    eliminate_bad_pairs,
    full_pipeline,
    lift_assignment,
    map_from_json,
    map_to_json,
    project_assignment,
    relating_witness_to_shed_witness,
    replay_formula_trace,
    replay_graph_trace,
    sat_to_23sat,
    shed_witness_to_relating_witness,
    trace_from_json,
    trace_to_json,
    validate_sat_graph,
    witness_to_assignment,
)
from reledge.solver import solve


def F(n, clauses):
    return CnfFormula.from_lists(n, clauses)


class TestChainSplit:
    def test_three_literal_clause(self):
        out, trace = sat_to_23sat(F(3, [[1, 2, 3]]))
        assert out.num_vars == 5
        assert out.clauses == (frozenset({1, 4}), frozenset({-4, 2, 5}), frozenset({-5, 3}))
        step = trace.steps[0]
        assert isinstance(step, ChainSplitStep)
        assert step.literals == (1, 2, 3) and step.aux_vars == (4, 5)

    def test_two_literal_clause(self):
        out, _ = sat_to_23sat(F(2, [[1, 2]]))
        assert out.clauses == (frozenset({1, 3}), frozenset({-3, 2}))

    def test_clause_count_and_fresh_vars(self):
        f = random_formula(6, 5, 99, 2, 5)
        out, trace = sat_to_23sat(f)
        assert len(out.clauses) == sum(len(c) for c in f.clauses)
        assert out.num_vars == f.num_vars + sum(len(c) - 1 for c in f.clauses)
        assert is_23sat_instance(out)[0]

    def test_output_always_valid_23sat(self):
        for i in range(80):
            f = random_formula(7, 7, split_seed(101, i), 2, 5)
            out, _ = sat_to_23sat(f)
            ok, why = is_23sat_instance(out)
            assert ok, why

    def test_equisatisfiable(self):
        for i in range(80):
            f = random_formula(8, 8, split_seed(103, i), 2, 5)
            out, _ = sat_to_23sat(f)
            assert solve(f).satisfiable == solve(out).satisfiable

    def test_replay_reproduces_target(self):
        for i in range(40):
            f = random_formula(6, 6, split_seed(107, i), 1, 5)
            out, trace = sat_to_23sat(f)
            assert replay_formula_trace(f, trace) == out


class TestUnitPropagation:
    def test_units_removed_and_recorded(self):
        out, trace = sat_to_23sat(F(2, [[1], [1, 2]]))
        assert out.clauses == ()
        assert [type(s) for s in trace.steps] == [UnitPropStep]
        assert trace.steps[0].literal == 1

    def test_cascade(self):
        out, trace = sat_to_23sat(F(3, [[-1], [1, 2], [2, 3]]))
        assert out.clauses == ()
        assert [s.literal for s in trace.steps] == [-1, 2]

    def test_conflict_produces_fixed_unsat_instance(self):
        out, trace = sat_to_23sat(F(1, [[1], [-1]]))
        assert isinstance(trace.steps[-1], UnsatSentinelStep)
        assert is_23sat_instance(out)[0]
        assert find_bad_pairs(out) == []
        assert not solve(out).satisfiable

    def test_lift_rejects_unsat_source(self):
        _, trace = sat_to_23sat(F(1, [[1], [-1]]))
        with pytest.raises(ContractViolation):
            lift_assignment(trace, {1: True})

    def test_project_restores_forced_values(self):
        f = F(2, [[1], [1, 2]])
        out, trace = sat_to_23sat(f)
        t1 = project_assignment(trace, {1: False, 2: False})
        assert t1[1] is True
        assert evaluate(f, t1)


class TestLiftProject:
    def test_lift_middle_literal(self):
        f = F(3, [[1, 2, 3]])
        out, trace = sat_to_23sat(f)
        t2 = lift_assignment(trace, {1: False, 2: True, 3: False})
        assert t2[4] is True and t2[5] is False
        assert evaluate(out, t2)

    def test_lift_first_and_second_literal(self):
        _, trace = sat_to_23sat(F(2, [[1, 2]]))
        assert lift_assignment(trace, {1: True, 2: False})[3] is False
        assert lift_assignment(trace, {1: False, 2: True})[3] is True

    def test_lift_rejects_unsatisfying_assignment(self):
        _, trace = sat_to_23sat(F(2, [[1, 2]]))
        with pytest.raises(ContractViolation):
            lift_assignment(trace, {1: False, 2: False})

    def test_project_example(self):
        out, trace = sat_to_23sat(F(2, [[1, 2]]))
        t1 = project_assignment(trace, {1: False, 2: True, 3: True})
        assert t1 == {1: False, 2: True}
        assert evaluate(F(2, [[1, 2]]), t1)

    def test_project_rejects_unsatisfying_assignment(self):
        out, trace = sat_to_23sat(F(2, [[1, 2]]))
        with pytest.raises(ContractViolation):
            project_assignment(trace, {1: False, 2: False, 3: False})

    def test_round_trip(self):
        for i in range(60):
            f = random_formula(7, 7, split_seed(109, i), 1, 5)
            out, trace = sat_to_23sat(f)
            r = solve(f)
            if not r.satisfiable:
                continue
            t2 = lift_assignment(trace, r.model)
            assert evaluate(out, t2)
            assert project_assignment(trace, t2) == r.model


class TestEliminateBadPairs:
    def test_case1_empties_the_formula(self):
        f = F(2, [[1, 2], [-1, -2]])
        out, trace = eliminate_bad_pairs(f)
        assert out.clauses == ()
        step = trace.steps[0]
        assert isinstance(step, BadPairCase1Step)
        assert step.l1 == 1 and step.l2 == 2 and step.deleted == (0, 1)

    def test_case2_keeps_untouched_clause(self):
        f = F(3, [[1, 2], [-1, -2], [-2, 3]])
        out, trace = eliminate_bad_pairs(f)
        assert out.clauses == (frozenset({-2, 3}),)
        step = trace.steps[0]
        assert isinstance(step, BadPairCase2Step)
        assert step.l1 == 1 and step.l2 == 2 and step.deleted == (0, 1)

    def test_backfill_case1(self):
        f = F(2, [[1, 2], [-1, -2]])
        _, trace = eliminate_bad_pairs(f)
        t = backfill_assignment(f, trace, {})
        assert t == {1: False, 2: True}
        assert evaluate(f, t)

    def test_backfill_case2(self):
        f = F(3, [[1, 2], [-1, -2], [-2, 3]])
        _, trace = eliminate_bad_pairs(f)
        t = backfill_assignment(f, trace, {2: False, 3: True})
        assert t == {1: True, 2: False, 3: True}
        assert evaluate(f, t)

    def test_backfill_rejects_unsatisfying_model(self):
        f = F(3, [[1, 2], [-1, -2], [-2, 3]])
        _, trace = eliminate_bad_pairs(f)
        with pytest.raises(ContractViolation):
            backfill_assignment(f, trace, {2: True, 3: False})

    def test_invalid_input_rejected(self):
        with pytest.raises(ContractViolation):
            eliminate_bad_pairs(F(4, [[1, 2, 3, 4]]))

    def test_campaign_output_clean_and_equisatisfiable(self):
        for i in range(60):
            f = random_23sat(7, split_seed(113, i), inject_bad_pair=(i % 2 == 0))
            out, trace = eliminate_bad_pairs(f)
            assert find_bad_pairs(out) == []
            assert is_23sat_instance(out)[0]
            assert solve(f).satisfiable == solve(out).satisfiable
            assert replay_formula_trace(f, trace) == out

    def test_monotone_progress(self):
        for i in range(40):
            f = random_23sat(8, split_seed(127, i), inject_bad_pair=True)
            out, trace = eliminate_bad_pairs(f)
            work = f
            count = len(find_bad_pairs(work))
            for step in trace.steps:
                partial = replay_formula_trace(
                    work, type(trace)(work.num_vars, work.num_vars, (step,)))
                new_count = len(find_bad_pairs(partial))
                assert new_count < count
                count = new_count
                work = partial
            assert work == out

    def test_backfill_campaign(self):
        for i in range(60):
            f = random_23sat(7, split_seed(131, i), inject_bad_pair=True)
            out, trace = eliminate_bad_pairs(f)
            r = solve(out)
            if not r.satisfiable:
                continue
            t = backfill_assignment(f, trace, r.model)
            assert evaluate(f, t)


def _all_clauses(num_vars, sizes):
    from itertools import combinations, product
    out = []
    for k in sizes:
        for vs in combinations(range(1, num_vars + 1), k):
            for signs in product((1, -1), repeat=k):
                out.append(frozenset(s * v for v, s in zip(vs, signs)))
    return out


class TestExhaustiveMiniSpaces:
    """Every instance in a small closed universe, not just random samples."""

    def test_split_on_every_one_and_two_clause_formula(self):
        from itertools import product

        from reledge.solver import solve_brute

        clauses = _all_clauses(3, (1, 2, 3))
        singles = [(c,) for c in clauses]
        pairs = list(product(clauses, repeat=2))
        for clause_tuple in singles + pairs:
            f = CnfFormula(3, clause_tuple)
            out, trace = sat_to_23sat(f)
            assert is_23sat_instance(out)[0]
            r_in = solve_brute(f)
            assert r_in.satisfiable == solve_brute(out).satisfiable
            assert replay_formula_trace(f, trace) == out
            if r_in.satisfiable and not any(
                    isinstance(s, UnsatSentinelStep) for s in trace.steps):
                t2 = lift_assignment(trace, r_in.model)
                assert evaluate(out, t2)
                assert project_assignment(trace, t2) == r_in.model

    def test_elimination_on_every_small_two_literal_instance(self):
        from itertools import product

        from reledge.solver import solve_brute

        clauses = _all_clauses(3, (2,))
        spaces = [list(product(clauses, repeat=2)), list(product(clauses, repeat=3))]
        checked = 0
        for space in spaces:
            for clause_tuple in space:
                f = CnfFormula(3, clause_tuple)
                if not is_23sat_instance(f)[0]:
                    continue
                checked += 1
                out, trace = eliminate_bad_pairs(f)
                assert find_bad_pairs(out) == []
                assert is_23sat_instance(out)[0]
                r_out = solve_brute(out)
                assert solve_brute(f).satisfiable == r_out.satisfiable
                if r_out.satisfiable and trace.steps:
                    t = backfill_assignment(f, trace, r_out.model)
                    assert evaluate(f, t)
        assert checked == 900  # the valid fraction of 144 pairs + 1728 triples


class TestBuildSatGraph:
    def test_seven_vertex_example(self):
        f = F(2, [[1, 2], [-1, 2]])
        g, m = build_sat_graph(f)
        assert g.num_vertices == 7 and g.num_edges() == 8
        assert g.edges() == [(1, 2), (1, 3), (2, 4), (2, 6), (3, 5), (3, 6), (4, 5), (6, 7)]
        assert m.hub == 1
        assert m.clause_vertex == {1: 2, 2: 3}
        assert m.pos_vertex == {1: 4, 2: 6} and m.neg_vertex == {1: 5, 2: 7}
        assert validate_sat_graph(g, f, m)

    def test_empty_formula_single_hub(self):
        g, m = build_sat_graph(CnfFormula(0, ()))
        assert g.num_vertices == 1 and g.num_edges() == 0

    def test_no_clauses_keeps_matched_pairs(self):
        g, m = build_sat_graph(CnfFormula(2, ()))
        assert g.num_vertices == 5
        assert g.edges() == [(2, 3), (4, 5)]
        assert not g.adjacency[m.hub]

    def test_counts(self):
        for i in range(30):
            f = random_formula(6, 6, split_seed(137, i), 2, 4)
            g, m = build_sat_graph(f)
            assert g.num_vertices == 1 + len(f.clauses) + 2 * f.num_vars
            assert g.num_edges() == len(f.clauses) + f.num_vars + sum(len(c) for c in f.clauses)
            assert validate_sat_graph(g, f, m)

    def test_second_layer_induces_matching_edges_only(self):
        for i in range(30):
            f = random_formula(5, 5, split_seed(139, i), 2, 4)
            g, m = build_sat_graph(f)
            n2 = neighborhood_layer(g, {m.hub}, 2)
            pair_edges = {frozenset((m.pos_vertex[i2], m.neg_vertex[i2]))
                          for i2 in range(1, f.num_vars + 1)}
            for u in n2:
                inside = [v for v in g.adjacency[u] if v in n2]
                assert len(inside) <= 1
                for v in inside:
                    assert frozenset((u, v)) in pair_edges

    def test_debadpaired_graph_has_no_c6(self):
        for i in range(25):
            f = random_23sat(7, split_seed(149, i), inject_bad_pair=True)
            clean, _ = eliminate_bad_pairs(f)
            g, _ = build_sat_graph(clean)
            assert contains_cycle_of_length(g, 6) is None

    def test_bad_pair_forces_c6(self):
        f = F(2, [[1, 2], [-1, -2]])
        g, _ = build_sat_graph(f)
        assert contains_cycle_of_length(g, 6) is not None

    def test_c6_iff_bad_pair_exhaustive_two_clause_space(self):
        # every pair of 2-literal clauses over 3 variables whose instance is
        # a valid 2/3 shape: the gadget holds a 6-cycle exactly when the
        # clause pair is bad
        from itertools import combinations, product
        lits = [l for v in (1, 2, 3) for l in (v, -v)]
        clauses = [frozenset(c) for c in combinations(lits, 2)
                   if len({abs(l) for l in c}) == 2]
        for c1, c2 in product(clauses, repeat=2):
            f = CnfFormula(3, (c1, c2))
            if not is_23sat_instance(f)[0]:
                continue
            g, _ = build_sat_graph(f)
            has_c6 = contains_cycle_of_length(g, 6) is not None
            assert has_c6 == bool(find_bad_pairs(f))

    def test_map_json_round_trip(self):
        _, m = build_sat_graph(F(2, [[1, 2], [-1, 2]]))
        assert map_from_json(map_to_json(m)) == m


class TestFormulaGraphBiconditional:
    def test_satisfiable_iff_hub_not_shedding(self):
        for i in range(50):
            f = random_formula(5, 5, split_seed(151, i), 1, 4)
            g, m = build_sat_graph(f)
            sat = solve(f).satisfiable
            shedding, witness = is_shedding(g, m.hub)
            assert sat == (not shedding)
            if sat:
                assert validate_shed_witness(g, m.hub, witness)

    def test_empty_formula_hub_isolated_not_shedding(self):
        g, m = build_sat_graph(CnfFormula(2, ()))
        shedding, witness = is_shedding(g, m.hub)
        assert not shedding and witness.set_s == frozenset()


class TestWitnessTranslation:
    def test_assignment_to_witness_drops_distant_vertices(self):
        f = F(2, [[1, 2]])
        g, m = build_sat_graph(f)
        w = assignment_to_witness(g, m, {1: True, 2: False})
        # u2' sits at distance 3 (negative literal of 2 occurs nowhere)
        assert w.set_s == frozenset({m.pos_vertex[1]})
        assert validate_shed_witness(g, m.hub, w)

    def test_all_positive_assignment(self):
        f = F(2, [[1, 2]])
        g, m = build_sat_graph(f)
        w = assignment_to_witness(g, m, {1: True, 2: True})
        assert w.set_s == frozenset({m.pos_vertex[1], m.pos_vertex[2]})

    def test_unsatisfying_assignment_rejected(self):
        f = F(2, [[1, 2]])
        g, m = build_sat_graph(f)
        with pytest.raises(ContractViolation):
            assignment_to_witness(g, m, {1: False, 2: False})

    def test_witness_to_assignment_negative_side(self):
        f = F(2, [[-1, 2], [1, -2]])
        g, m = build_sat_graph(f)
        shedding, w = is_shedding(g, m.hub)
        assert not shedding
        t = witness_to_assignment(g, m, w)
        assert evaluate(f, t)

    def test_round_trip_campaign(self):
        for i in range(50):
            f = random_formula(5, 5, split_seed(157, i), 1, 4)
            r = solve(f)
            if not r.satisfiable:
                continue
            g, m = build_sat_graph(f)
            w = assignment_to_witness(g, m, r.model)
            assert validate_shed_witness(g, m.hub, w)
            t = witness_to_assignment(g, m, w)
            assert evaluate(f, t)

    def test_invalid_witness_rejected(self):
        from reledge.deciders import ShedComplementWitness
        f = F(2, [[1, 2]])
        g, m = build_sat_graph(f)
        with pytest.raises(ContractViolation):
            witness_to_assignment(g, m, ShedComplementWitness(frozenset({m.hub})))


class TestPendant:
    def test_p3_to_p4(self):
        g2, edge, trace = add_pendant(path_graph(3), 3)
        assert g2.edges() == [(1, 2), (2, 3), (3, 4)]
        assert edge == (3, 4)
        assert trace.steps == (PendantStep(3, 4),)
        assert replay_graph_trace(path_graph(3), trace) == g2

    def test_single_vertex_to_k2(self):
        g = Graph.from_edges(1, [])
        g2, edge, _ = add_pendant(g, 1)
        assert g2.edges() == [(1, 2)] and edge == (1, 2)

    def test_pendant_preserves_c6_freeness(self):
        from reledge.generate import random_graph_avoiding
        for i in range(20):
            g = random_graph_avoiding(9, 11, [6], split_seed(163, i))
            g2, _, _ = add_pendant(g, (i % 9) + 1)
            assert contains_cycle_of_length(g2, 6) is None


class TestShedWitnessToRelatingWitness:
    def test_p3_example(self):
        g = path_graph(3)
        _, sw = is_shedding(g, 3)
        rw = shed_witness_to_relating_witness(g, 3, sw)
        assert rw.set_s == frozenset({1})
        g2, (x, y), _ = add_pendant(g, 3)
        assert validate_relating_witness(g2, x, y, rw)

    def test_star_center_rejects_empty_witness(self):
        from reledge.deciders import ShedComplementWitness
        star = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
        with pytest.raises(ContractViolation):
            shed_witness_to_relating_witness(star, 1, ShedComplementWitness(frozenset()))

    def test_campaign(self):
        from reledge.generate import random_graph
        for i in range(60):
            g = random_graph(8, 10, split_seed(167, i))
            for v in g.vertices():
                shedding, sw = is_shedding(g, v)
                if shedding:
                    continue
                rw = shed_witness_to_relating_witness(g, v, sw)
                g2, (x, y), _ = add_pendant(g, v)
                assert validate_relating_witness(g2, x, y, rw)


class TestRelatingWitnessToShedWitness:
    def test_p4_example(self):
        # 1-2-3-4 where 4 is the pendant on 3
        g2 = path_graph(4)
        relating, rw = is_relating(g2, 3, 4)
        assert relating
        sw = relating_witness_to_shed_witness(g2, 3, rw)
        assert sw.set_s == frozenset({1})
        assert validate_shed_witness(path_graph(3), 3, sw)

    def test_k2_degenerate(self):
        from reledge.deciders import RelatingWitness
        k2 = path_graph(2)
        sw = relating_witness_to_shed_witness(k2, 1, RelatingWitness(frozenset()))
        assert sw.set_s == frozenset()

    def test_non_pendant_rejected(self):
        from reledge.deciders import RelatingWitness
        g = path_graph(3)  # vertex 3 has degree 1 but attaches to 2, not 1
        with pytest.raises(ContractViolation):
            relating_witness_to_shed_witness(g, 1, RelatingWitness(frozenset()))

    def test_campaign(self):
        from reledge.generate import random_graph
        for i in range(60):
            g = random_graph(8, 10, split_seed(173, i))
            v = (i % 8) + 1
            g2, (x, y), _ = add_pendant(g, v)
            relating, rw = is_relating(g2, x, y)
            if relating:
                sw = relating_witness_to_shed_witness(g2, x, rw)
                assert validate_shed_witness(g, v, sw)


class TestTraceJson:
    def test_round_trip_all_step_kinds(self):
        from reledge.reductions import ReductionTrace
        trace = ReductionTrace(4, 9, (
            UnitPropStep(-2, (0, 3)),
            ChainSplitStep(0, (1, -3, 4), (5, 6)),
            BadPairCase1Step(0, 1, 1, 2, 1, 2, (0, 1, 2)),
            BadPairCase2Step(1, 2, -1, 3, -1, 3, (1, 2)),
            PendantStep(1, 10),
            UnsatSentinelStep(4),
        ))
        assert trace_from_json(trace_to_json(trace)) == trace

    def test_stable_key_order(self):
        _, trace = sat_to_23sat(F(2, [[1, 2]]))
        assert trace_to_json(trace) == trace_to_json(trace)


class TestFullPipeline:
    def test_satisfiable_example(self):
        f = F(2, [[1, 2], [-1, -2]])
        art = full_pipeline(f)
        assert contains_cycle_of_length(art.re_graph, 6) is None
        relating, w = is_relating(art.re_graph, *art.re_edge)
        assert relating
        assert validate_relating_witness(art.re_graph, *art.re_edge, w)

    def test_unsatisfiable_example(self):
        f = F(2, [[1, 2], [1, -2], [-1, 2], [-1, -2]])
        art = full_pipeline(f)
        assert not solve(f).satisfiable
        relating, _ = is_relating(art.re_graph, *art.re_edge)
        assert not relating

    def test_full_witness_chain(self):
        for i in range(25):
            f = random_formula(4, 4, split_seed(179, i), 1, 3)
            art = full_pipeline(f)
            r = solve(f)
            relating, _ = is_relating(art.re_graph, *art.re_edge, cap=1 << 22)
            assert r.satisfiable == relating
            if not r.satisfiable:
                continue
            lifted = lift_assignment(art.split_trace, r.model)
            assert evaluate(art.nobad, lifted)
            shed_w = assignment_to_witness(art.sat_graph, art.graph_map, lifted)
            rel_w = shed_witness_to_relating_witness(art.sat_graph, art.graph_map.hub, shed_w)
            assert validate_relating_witness(art.re_graph, *art.re_edge, rel_w)

    def test_reverse_witness_chain(self):
        for i in range(25):
            f = random_formula(4, 4, split_seed(181, i), 1, 3)
            art = full_pipeline(f)
            relating, rel_w = is_relating(art.re_graph, *art.re_edge, cap=1 << 22)
            if not relating:
                continue
            shed_w = relating_witness_to_shed_witness(art.re_graph, art.graph_map.hub, rel_w)
            t3 = witness_to_assignment(art.sat_graph, art.graph_map, shed_w)
            t2 = backfill_assignment(art.split, art.nobad_trace, t3)
            assert evaluate(art.split, t2)
            t1 = project_assignment(art.split_trace, t2)
            assert evaluate(f, t1)

    def test_composite_trace_emission(self):
        art = full_pipeline(F(2, [[1, 2], [-1, -2]]))
        text = composite_trace_json(art)
        assert '"to23sat"' in text and '"pendant"' in text
