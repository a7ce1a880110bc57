"""Exact SAT oracle: DPLL with unit propagation, plus an exhaustive checker.

Kept deliberately independent of the reduction code so it can referee every
reduction stage.  Fully deterministic: branching always picks the lowest
unassigned variable and tries True first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cnf import CnfFormula, evaluate
from .errors import ContractViolation, ResourceLimitExceeded

DEFAULT_NODE_BUDGET = 10_000_000


@dataclass
class SolveResult:
    satisfiable: bool
    model: Optional[dict]  # total assignment 1..num_vars when satisfiable
    decisions: int
    propagations: int


class _Budget:
    __slots__ = ("left", "decisions", "propagations")

    def __init__(self, budget):
        self.left = budget
        self.decisions = 0
        self.propagations = 0

    def spend_node(self):
        self.left -= 1
        if self.left < 0:
            raise ResourceLimitExceeded("DPLL node budget exhausted")


def _propagate(clauses, assign, budget):
    """Unit-propagate in place; returns False on conflict."""
    changed = True
    while changed:
        changed = False
        for clause in clauses:
            unassigned = None
            n_unassigned = 0
            satisfied = False
            for lit in clause:
                val = assign.get(abs(lit))
                if val is None:
                    n_unassigned += 1
                    unassigned = lit
                elif val == (lit > 0):
                    satisfied = True
                    break
            if satisfied:
                continue
            if n_unassigned == 0:
                return False
            if n_unassigned == 1:
                assign[abs(unassigned)] = unassigned > 0
                budget.propagations += 1
                changed = True
    return True


def _dpll(clauses, assign, num_vars, budget):
    """Returns a satisfying (possibly partial) assignment dict, or None."""
    budget.spend_node()
    assign = dict(assign)
    if not _propagate(clauses, assign, budget):
        return None
    pending = [c for c in clauses if not any(assign.get(abs(l)) == (l > 0) for l in c)]
    if not pending:
        return assign
    var = next(v for v in range(1, num_vars + 1) if v not in assign)
    for value in (True, False):
        budget.decisions += 1
        child = dict(assign)
        child[var] = value
        result = _dpll(pending, child, num_vars, budget)
        if result is not None:
            return result
    return None


def solve(f: CnfFormula, budget: int = DEFAULT_NODE_BUDGET) -> SolveResult:
    """Exact SAT/UNSAT within a search-node budget.

    Raises ResourceLimitExceeded when the budget runs out, which is a
    distinct outcome from UNSAT.
    """
    if budget <= 0:
        raise ContractViolation("budget must be positive")
    b = _Budget(budget)
    found = _dpll(list(f.clauses), {}, f.num_vars, b)
    if found is None:
        return SolveResult(False, None, b.decisions, b.propagations)
    model = {v: found.get(v, False) for v in range(1, f.num_vars + 1)}
    assert evaluate(f, model)
    return SolveResult(True, model, b.decisions, b.propagations)


def solve_brute(f: CnfFormula) -> SolveResult:
    """Exhaustive sweep over all 2^n assignments; the oracle for the oracle."""
    n = f.num_vars
    if n > 24:
        raise ResourceLimitExceeded(f"solve_brute limited to 24 variables, got {n}")
    clause_masks = []
    for c in f.clauses:
        pos = 0
        neg = 0
        for l in c:
            if l > 0:
                pos |= 1 << (l - 1)
            else:
                neg |= 1 << (-l - 1)
        clause_masks.append((pos, neg))
    tried = 0
    for m in range(1 << n):
        tried += 1
        ok = True
        for pos, neg in clause_masks:
            if not (m & pos) and (m & neg) == neg:
                ok = False
                break
        if ok:
            model = {v: bool(m & (1 << (v - 1))) for v in range(1, n + 1)}
            return SolveResult(True, model, tried, 0)
    return SolveResult(False, None, tried, 0)
