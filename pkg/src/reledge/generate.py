"""Seeded random instance generators for formulas and graphs.

Determinism contract: the same seed and parameters always produce the same
instance, on any platform.  Child seeds are derived with splitmix64 so that
campaigns can draw one independent stream per instance index.
"""

from __future__ import annotations

import random

from .cnf import CnfFormula, is_23sat_instance
from .errors import ContractViolation, ResourceLimitExceeded
from .graphs import Graph
from . import kernels

MASK64 = (1 << 64) - 1


def split_seed(seed: int, index: int) -> int:
    """splitmix64 step: independent child seed for instance `index`."""
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return (z ^ (z >> 31)) & MASK64


def random_formula(num_vars: int, num_clauses: int, seed: int,
                   size_min: int = 2, size_max: int = 3) -> CnfFormula:
    """Random CNF: each clause samples `size` distinct variables and negates
    each with probability 1/2 (so clauses are never tautological)."""
    if num_vars < 1 or num_clauses < 0:
        raise ContractViolation("need num_vars >= 1 and num_clauses >= 0")
    if not 1 <= size_min <= size_max:
        raise ContractViolation("need 1 <= size_min <= size_max")
    if size_max > num_vars:
        raise ContractViolation("clause size cannot exceed the variable count")
    rng = random.Random(seed)
    clauses = []
    for _ in range(num_clauses):
        k = rng.randint(size_min, size_max)
        chosen = rng.sample(range(1, num_vars + 1), k)
        clauses.append(frozenset(v if rng.random() < 0.5 else -v for v in chosen))
    return CnfFormula(num_vars, tuple(clauses))


def random_23sat(num_clauses: int, seed: int, shared_fraction: float = 0.5,
                 inject_bad_pair: bool = False) -> CnfFormula:
    """Random valid 2/3-clause instance with at most one major literal per
    clause, built constructively:

    * a small pool of designated shared literals may appear in many clauses
      (at most one per clause, so they are the only possible majors);
    * every other slot takes a (variable, polarity) used nowhere else, which
      keeps those literals minor — note the two polarities of one variable
      count separately, so both may appear once.

    With inject_bad_pair, two clauses also receive literal pairs (a,b) and
    (~a,~b) over fresh variables, guaranteeing at least one bad pair.
    """
    if num_clauses < 0:
        raise ContractViolation("num_clauses must be nonnegative")
    rng = random.Random(seed)
    sizes = [rng.choice((2, 3)) for _ in range(num_clauses)]
    n_shared = max(1, num_clauses // 3)
    next_var = 1
    shared = []
    for _ in range(n_shared):
        v = next_var
        next_var += 1
        shared.append(v if rng.random() < 0.5 else -v)
    free_polarities = []  # (var, polarity) slots usable once each
    clauses = []
    for k in sizes:
        clause = []
        used_vars = set()
        if shared and rng.random() < shared_fraction:
            l = rng.choice(shared)
            clause.append(l)
            used_vars.add(abs(l))
        while len(clause) < k:
            slot = None
            for idx, (v, polarity) in enumerate(free_polarities):
                if v not in used_vars:
                    slot = idx
                    break
            if slot is not None and rng.random() < 0.5:
                v, polarity = free_polarities.pop(slot)
            else:
                v, polarity = next_var, rng.random() < 0.5
                next_var += 1
                free_polarities.append((v, not polarity))
                rng.shuffle(free_polarities)
            clause.append(v if polarity else -v)
            used_vars.add(v)
        clauses.append(frozenset(clause))
    if inject_bad_pair and num_clauses >= 2:
        a, b = next_var, next_var + 1
        next_var += 2
        i, j = rng.sample(range(num_clauses), 2)
        clauses[i] = frozenset({a, b})
        clauses[j] = frozenset({-a, -b})
    out = CnfFormula(max(next_var - 1, 1), tuple(clauses))
    ok, why = is_23sat_instance(out)
    assert ok, why
    return out


def random_graph(num_vertices: int, num_edges: int, seed: int) -> Graph:
    """Uniform random graph with exactly num_edges edges."""
    if num_vertices < 0 or num_edges < 0:
        raise ContractViolation("counts must be nonnegative")
    all_pairs = [(u, v) for u in range(1, num_vertices + 1)
                 for v in range(u + 1, num_vertices + 1)]
    if num_edges > len(all_pairs):
        raise ContractViolation(f"at most {len(all_pairs)} edges fit on {num_vertices} vertices")
    rng = random.Random(seed)
    return Graph.from_edges(num_vertices, rng.sample(all_pairs, num_edges))


def random_graph_avoiding(num_vertices: int, num_edges: int, forbidden_cycles,
                          seed: int, retry_cap: int = 64) -> Graph:
    """Random graph with num_edges edges and no C_k subgraph for any k in
    forbidden_cycles.

    Each attempt shuffles the candidate edges and adds them greedily,
    skipping any edge that would close a forbidden cycle; if the edge budget
    cannot be met, the whole sample is retried with a derived seed, up to
    retry_cap attempts.
    """
    forbidden = sorted(set(forbidden_cycles))
    for k in forbidden:
        if not 3 <= k <= 8:
            raise ContractViolation(f"forbidden cycle length {k} outside 3..8")
    all_pairs = [(u, v) for u in range(1, num_vertices + 1)
                 for v in range(u + 1, num_vertices + 1)]
    if num_edges > len(all_pairs):
        raise ContractViolation(f"at most {len(all_pairs)} edges fit on {num_vertices} vertices")
    for attempt in range(retry_cap):
        rng = random.Random(split_seed(seed, attempt))
        order = list(all_pairs)
        rng.shuffle(order)
        chosen = []
        for e in order:
            if len(chosen) == num_edges:
                break
            trial = Graph.from_edges(num_vertices, chosen + [e])
            if any(kernels.has_cycle(trial, k) for k in forbidden):
                continue
            chosen.append(e)
        if len(chosen) == num_edges:
            return Graph.from_edges(num_vertices, chosen)
    raise ResourceLimitExceeded(
        f"could not reach {num_edges} edges avoiding C{forbidden} in {retry_cap} attempts")
