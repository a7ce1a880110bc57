"""Reference brute-force implementations used to cross-check the deciders.

These stay deliberately definitional — full powerset sweeps and permutation
enumeration — and share no search logic with the production deciders they
referee.  Desk scale only.
"""

from __future__ import annotations

from itertools import permutations

from . import kernels
from .errors import ResourceLimitExceeded
from .graphs import Graph


def relating_oracle(g: Graph, x: int, y: int):
    """Sweep all vertex subsets S; (relating, witness | None).

    S qualifies when S+x and S+y are both maximal independent sets, checked
    straight from the definitions.
    """
    g._check_vertex(x)
    g._check_vertex(y)
    return kernels.oracle_relating(g, x, y)


def shedding_oracle(g: Graph, v: int):
    """(shedding, counterexample | None) via the extension definition:
    v is shedding iff every independent set avoiding N[v] can be extended
    by some neighbor of v."""
    g._check_vertex(v)
    return kernels.oracle_shedding(g, v)


def well_covered_oracle(g: Graph) -> bool:
    """Sweep all subsets, filter maximal independent ones, compare sizes."""
    return kernels.oracle_well_covered(g)


def cycle_oracle(g: Graph, k: int) -> bool:
    """k-cycle existence by enumerating all k-permutations of vertices."""
    n = g.num_vertices
    if n > 8:
        raise ResourceLimitExceeded(f"cycle_oracle limited to 8 vertices, got {n}")
    if k > n:
        return False
    for perm in permutations(g.vertices(), k):
        if all(perm[i + 1] in g.adjacency[perm[i]] for i in range(k - 1)) \
                and perm[0] in g.adjacency[perm[-1]]:
            return True
    return False
