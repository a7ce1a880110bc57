"""reledge: exact deciders and reductions for relating edges, shedding
vertices and well-covered graphs."""

from .cnf import (
    BadPair,
    CnfFormula,
    classify_literals,
    emit_dimacs,
    evaluate,
    find_bad_pairs,
    is_23sat_instance,
    make_clause,
    negate,
    parse_dimacs,
)
from .deciders import (
    CrosscheckReport,
    RelatingWitness,
    ShedComplementWitness,
    crosscheck_shedding_relating,
    is_relating,
    is_shedding,
    is_w2,
    validate_relating_witness,
    validate_shed_witness,
)
from .errors import ContractViolation, ParseError, ReledgeError, ResourceLimitExceeded
from .graphs import (
    Graph,
    closed_neighborhood,
    contains_cycle_of_length,
    dominates,
    emit_dimacs_graph,
    enumerate_maximal_independent_sets,
    greedy_mis,
    is_independent,
    is_maximal_independent,
    is_well_covered,
    neighborhood_layer,
    parse_dimacs_graph,
)
from .kernels import backend_name
from .reductions import (
    PipelineArtifact,
    ReductionTrace,
    SatGraphMap,
    add_pendant,
    assignment_to_witness,
    backfill_assignment,
    build_sat_graph,
    eliminate_bad_pairs,
    full_pipeline,
    lift_assignment,
    project_assignment,
    relating_witness_to_shed_witness,
    sat_to_23sat,
    shed_witness_to_relating_witness,
    witness_to_assignment,
)
from .solver import SolveResult, solve, solve_brute

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
