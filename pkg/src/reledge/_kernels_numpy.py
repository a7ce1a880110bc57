"""Pure-Python / numpy implementations of the hot search kernels.

This is the fallback twin of ``_kernels_numba``: identical signatures and
semantics, arbitrary-precision int bitmasks (so it also serves graphs with
more than 64 vertices), and numpy vectorization for the full-powerset oracle
sweeps.  Vertices are 0-based bit positions throughout.
"""

from __future__ import annotations

import numpy as np

FOUND = 0
NOT_FOUND = 1
CAP_EXCEEDED = 2


def find_witness_set(adj, adjc, cand, base1, target1, base2, target2, cap):
    """Search independent subsets of ``cand`` by increasing size, then
    lexicographic order, for the first S whose closed neighborhood, extended
    by base1/base2, covers target1/target2 respectively.

    Returns (status, witness_mask, visited_sets).  Every independent set
    materialized during the search (including partial ones) counts against
    ``cap``.
    """
    L = len(cand)
    nodes = 1  # the empty set
    if nodes > cap:
        return CAP_EXCEEDED, 0, nodes
    if (target1 & ~base1) == 0 and (target2 & ~base2) == 0:
        return FOUND, 0, nodes
    pick = [0] * (L + 1)
    chosen = [0] * (L + 2)
    cover = [0] * (L + 2)
    for size in range(1, L + 1):
        d = 0
        nxt = 0
        chosen[0] = 0
        cover[0] = 0
        while d >= 0:
            if d == size:
                cov = cover[d]
                if (target1 & ~(cov | base1)) == 0 and (target2 & ~(cov | base2)) == 0:
                    return FOUND, chosen[d], nodes
                d -= 1
                nxt = pick[d] + 1
                continue
            placed = False
            i = nxt
            while i <= L - (size - d):
                v = cand[i]
                if (adj[v] & chosen[d]) == 0:
                    nodes += 1
                    if nodes > cap:
                        return CAP_EXCEEDED, 0, nodes
                    pick[d] = i
                    chosen[d + 1] = chosen[d] | (1 << v)
                    cover[d + 1] = cover[d] | adjc[v]
                    d += 1
                    nxt = i + 1
                    placed = True
                    break
                i += 1
            if not placed:
                d -= 1
                if d >= 0:
                    nxt = pick[d] + 1
    return NOT_FOUND, 0, nodes


def enumerate_mis(adj, adjc, n, full, set_cap, node_cap):
    """All maximal independent sets via include/exclude DFS over vertices.

    Returns (status, list_of_masks).  status CAP_EXCEEDED covers both the
    emitted-set cap and the internal node guard.
    """
    if n == 0:
        return FOUND, [0]
    out = []
    sv = [0] * (n + 2)
    sc = [0] * (n + 2)
    sk = [0] * (n + 2)
    sb = [0] * (n + 2)
    sp = 0
    sv[0] = sc[0] = sk[0] = sb[0] = 0
    nodes = 0
    while sp >= 0:
        v = sv[sp]
        if v == n:
            if sk[sp] == full:
                out.append(sc[sp])
                if len(out) > set_cap:
                    return CAP_EXCEEDED, out
            sp -= 1
            continue
        b = sb[sp]
        if b == 0:
            sb[sp] = 1
            if (adj[v] & sc[sp]) == 0:
                nodes += 1
                if nodes > node_cap:
                    return CAP_EXCEEDED, out
                child_c = sc[sp] | (1 << v)
                child_k = sk[sp] | adjc[v]
                sp += 1
                sv[sp] = v + 1
                sc[sp] = child_c
                sk[sp] = child_k
                sb[sp] = 0
        elif b == 1:
            sb[sp] = 2
            nodes += 1
            if nodes > node_cap:
                return CAP_EXCEEDED, out
            child_c = sc[sp]
            child_k = sk[sp]
            sp += 1
            sv[sp] = v + 1
            sc[sp] = child_c
            sk[sp] = child_k
            sb[sp] = 0
        else:
            sp -= 1
    return FOUND, out


def _sweep_tables(adj, adjc, n, masks):
    """Vectorized (independent?, closed-cover) tables for an array of masks."""
    size = masks.shape[0]
    indep = np.ones(size, dtype=bool)
    cover = np.zeros(size, dtype=np.uint64)
    for v in range(n):
        inset = ((masks >> np.uint64(v)) & np.uint64(1)) == 1
        clash = (masks & np.uint64(adj[v])) != 0
        indep &= ~(inset & clash)
        cover = np.where(inset, cover | np.uint64(adjc[v]), cover)
    return indep, cover


def oracle_relating(adj, adjc, n, x, y):
    """Unpruned definitional sweep over all 2^n vertex subsets.

    Returns (found, witness_mask): the least S (by mask value) such that
    S+x and S+y are both maximal independent sets.
    """
    full = (1 << n) - 1
    masks = np.arange(1 << n, dtype=np.uint64)
    ufull = np.uint64(full)
    mx = masks | np.uint64(1 << x)
    indep_x, cover_x = _sweep_tables(adj, adjc, n, mx)
    ok_x = indep_x & (cover_x == ufull)
    my = masks | np.uint64(1 << y)
    indep_y, cover_y = _sweep_tables(adj, adjc, n, my)
    ok_y = indep_y & (cover_y == ufull)
    both = ok_x & ok_y
    if not both.any():
        return False, 0
    return True, int(masks[int(np.argmax(both))])


def oracle_shedding(adj, adjc, n, v):
    """Definitional check: v is shedding iff every independent S outside N[v]
    leaves some neighbor of v available to extend S.

    Returns (shedding, counterexample_mask).
    """
    masks = np.arange(1 << n, dtype=np.uint64)
    outside = ((masks & np.uint64(adjc[v])) == 0)
    indep, _ = _sweep_tables(adj, adjc, n, masks)
    extendable = np.zeros(1 << n, dtype=bool)
    for u in range(n):
        if adj[v] & (1 << u):
            extendable |= (masks & np.uint64(adj[u])) == 0
    bad = outside & indep & ~extendable
    if not bad.any():
        return True, 0
    return False, int(masks[int(np.argmax(bad))])


def oracle_well_covered(adj, adjc, n):
    """True iff all maximal independent sets share one cardinality (full sweep)."""
    full = np.uint64((1 << n) - 1)
    masks = np.arange(1 << n, dtype=np.uint64)
    indep, cover = _sweep_tables(adj, adjc, n, masks)
    maximal = indep & (cover == full)
    sizes = np.bitwise_count(masks[maximal])
    return int(sizes.min()) == int(sizes.max())


def has_cycle(adj, n, k):
    """True iff some k-cycle exists as a (not necessarily induced) subgraph.

    DFS over vertex sequences whose first vertex is the cycle minimum.
    """
    path = [0] * k
    for start in range(n):
        path[0] = start
        used = 1 << start
        # it[d] = next candidate vertex to try at depth d; candidates stay
        # above `start` so each cycle is searched from its minimum vertex only
        it = [0] * (k + 1)
        d = 1
        it[1] = start + 1
        while d >= 1:
            if d == k:
                if adj[path[k - 1]] & (1 << start):
                    return True
                d -= 1
                used &= ~(1 << path[d])
                continue
            prev = path[d - 1]
            v = it[d]
            moved = False
            while v < n:
                if not (used & (1 << v)) and (adj[prev] & (1 << v)):
                    it[d] = v + 1
                    path[d] = v
                    used |= 1 << v
                    d += 1
                    if d < k:
                        it[d] = start + 1
                    moved = True
                    break
                v += 1
            if not moved:
                d -= 1
                if d >= 1:
                    used &= ~(1 << path[d])
    return False
