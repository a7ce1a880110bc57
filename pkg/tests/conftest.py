import pytest

from reledge.deciders import is_relating, is_shedding
from reledge.graphs import Graph, enumerate_maximal_independent_sets
from reledge.kernels import has_cycle
from reledge.oracles import relating_oracle, shedding_oracle, well_covered_oracle


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Touch every kernel once so JIT compilation never lands inside a
    timed or deadline-sensitive test."""
    g = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    is_relating(g, 1, 2)
    is_shedding(g, 1)
    enumerate_maximal_independent_sets(g)
    has_cycle(g, 4)
    relating_oracle(g, 1, 2)
    shedding_oracle(g, 1)
    well_covered_oracle(g)
