"""Backend dispatch for the hot search kernels.

Two interchangeable implementations exist: numba-compiled (``_kernels_numba``,
graphs up to 64 vertices) and pure Python/numpy (``_kernels_numpy``, any
size).  Selection is via the environment variable ``RELEDGE_BACKEND``
(``numba`` or ``numpy``); unset means numba when importable.  Graphs larger
than 64 vertices always use the fallback, whatever the flag says.

All wrappers speak 1-based vertices and frozensets; the kernels themselves
work on 0-based bitmasks.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_numpy as _py
from .errors import ContractViolation, ResourceLimitExceeded

_ENV_FLAG = "RELEDGE_BACKEND"
_ORACLE_MAX_VERTICES = 20
DEFAULT_MIS_NODE_CAP = 1 << 26

FOUND = _py.FOUND
NOT_FOUND = _py.NOT_FOUND
CAP_EXCEEDED = _py.CAP_EXCEEDED


def _resolve_backend():
    choice = os.environ.get(_ENV_FLAG, "").strip().lower()
    if choice not in ("", "numba", "numpy"):
        raise ValueError(f"{_ENV_FLAG} must be 'numba' or 'numpy', got {choice!r}")
    if choice == "numpy":
        return "numpy", _py
    try:
        from . import _kernels_numba as _nb
        return "numba", _nb
    except ImportError:
        if choice == "numba":
            raise
        return "numpy", _py


_BACKEND_NAME, _fast = _resolve_backend()


def backend_name() -> str:
    return _BACKEND_NAME


def _masks(g):
    n = g.num_vertices
    adj = [0] * n
    for v in range(1, n + 1):
        m = 0
        for u in g.adjacency[v]:
            m |= 1 << (u - 1)
        adj[v - 1] = m
    adjc = [adj[i] | (1 << i) for i in range(n)]
    full = (1 << n) - 1
    return adj, adjc, full


def _use_fast(n):
    return _BACKEND_NAME == "numba" and n <= 64


def _np_masks(adj, adjc):
    return np.array(adj, dtype=np.uint64), np.array(adjc, dtype=np.uint64)


def mask_to_set(mask: int) -> frozenset:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def set_to_mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def search_dominating_independent(g, candidates, target, cap):
    """First independent subset of ``candidates`` (by size, then lexicographic)
    whose closed neighborhood covers ``target``.

    Returns (status, witness | None, visited_sets).
    """
    adj, adjc, _ = _masks(g)
    cand = sorted(set(candidates))
    target_mask = set_to_mask(target)
    if _use_fast(g.num_vertices):
        a, ac = _np_masks(adj, adjc)
        cand_arr = np.array([v - 1 for v in cand], dtype=np.int64)
        status, mask, nodes = _fast.find_witness_set(
            a, ac, cand_arr, np.uint64(0), np.uint64(target_mask), np.uint64(0), np.uint64(0), cap)
    else:
        status, mask, nodes = _py.find_witness_set(
            adj, adjc, [v - 1 for v in cand], 0, target_mask, 0, 0, cap)
    witness = mask_to_set(int(mask)) if status == _py.FOUND else None
    return status, witness, int(nodes)


def search_relating_set(g, x, y, cap):
    """First independent S (size, then lex) with S+x and S+y both maximal.

    Candidates are drawn outside N[x] ∪ N[y]; any valid S must avoid both
    closed neighborhoods to keep S+x and S+y independent.
    """
    adj, adjc, full = _masks(g)
    forbidden = adjc[x - 1] | adjc[y - 1]
    cand0 = [i for i in range(g.num_vertices) if not (forbidden >> i) & 1]
    if _use_fast(g.num_vertices):
        a, ac = _np_masks(adj, adjc)
        cand_arr = np.array(cand0, dtype=np.int64)
        status, mask, nodes = _fast.find_witness_set(
            a, ac, cand_arr,
            np.uint64(adjc[x - 1]), np.uint64(full),
            np.uint64(adjc[y - 1]), np.uint64(full), cap)
    else:
        status, mask, nodes = _py.find_witness_set(
            adj, adjc, cand0, adjc[x - 1], full, adjc[y - 1], full, cap)
    witness = mask_to_set(int(mask)) if status == _py.FOUND else None
    return status, witness, int(nodes)


def all_maximal_independent_sets(g, set_cap, node_cap=DEFAULT_MIS_NODE_CAP):
    """Every maximal independent set, unordered; raises on either cap."""
    n = g.num_vertices
    adj, adjc, full = _masks(g)
    if _use_fast(n):
        a, ac = _np_masks(adj, adjc)
        status, masks = _fast.enumerate_mis(a, ac, n, np.uint64(full), set_cap, node_cap)
        masks = [int(m) for m in masks]
    else:
        status, masks = _py.enumerate_mis(adj, adjc, n, full, set_cap, node_cap)
    if status == _py.CAP_EXCEEDED:
        raise ResourceLimitExceeded(
            f"maximal independent set enumeration exceeded its cap ({set_cap} sets)")
    return [mask_to_set(m) for m in masks]


def _oracle_guard(n):
    if n > _ORACLE_MAX_VERTICES:
        raise ResourceLimitExceeded(
            f"powerset oracle sweeps are limited to {_ORACLE_MAX_VERTICES} vertices, got {n}")


def oracle_relating(g, x, y):
    """Definitional 2^n sweep; returns (relating, witness | None)."""
    n = g.num_vertices
    _oracle_guard(n)
    adj, adjc, _ = _masks(g)
    if _use_fast(n):
        a, ac = _np_masks(adj, adjc)
        found, mask = _fast.oracle_relating(a, ac, n, x - 1, y - 1)
    else:
        found, mask = _py.oracle_relating(adj, adjc, n, x - 1, y - 1)
    return (True, mask_to_set(int(mask))) if found else (False, None)


def oracle_shedding(g, v):
    """Definitional sweep; returns (shedding, counterexample | None)."""
    n = g.num_vertices
    _oracle_guard(n)
    adj, adjc, _ = _masks(g)
    if _use_fast(n):
        a, ac = _np_masks(adj, adjc)
        shedding, mask = _fast.oracle_shedding(a, ac, n, v - 1)
    else:
        shedding, mask = _py.oracle_shedding(adj, adjc, n, v - 1)
    return (True, None) if shedding else (False, mask_to_set(int(mask)))


def oracle_well_covered(g):
    n = g.num_vertices
    _oracle_guard(n)
    adj, adjc, _ = _masks(g)
    if _use_fast(n):
        a, ac = _np_masks(adj, adjc)
        return bool(_fast.oracle_well_covered(a, ac, n))
    return bool(_py.oracle_well_covered(adj, adjc, n))


def has_cycle(g, k):
    """Existence-only fixed-length cycle test (subgraph, not induced)."""
    if not 3 <= k <= 8:
        raise ContractViolation(f"cycle length must be in 3..8, got {k}")
    n = g.num_vertices
    adj, _, _ = _masks(g)
    if _use_fast(n):
        a = np.array(adj, dtype=np.uint64)
        return bool(_fast.has_cycle(a, n, k))
    return bool(_py.has_cycle(adj, n, k))
