"""Numba-compiled twins of the hot search kernels.

Same semantics as ``_kernels_numpy`` (that module is the reference), but
operating on fixed-width uint64 masks, so these kernels serve graphs with at
most 64 vertices; the dispatcher routes larger graphs to the fallback.
"""

from __future__ import annotations

import numpy as np
from numba import njit

FOUND = 0
NOT_FOUND = 1
CAP_EXCEEDED = 2

U0 = np.uint64(0)
U1 = np.uint64(1)


@njit(cache=True, inline="always")
def _bit(v):
    return U1 << np.uint64(v)


@njit(cache=True)
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(cache=True)
def find_witness_set(adj, adjc, cand, base1, target1, base2, target2, cap):
    L = cand.shape[0]
    nodes = 1
    if nodes > cap:
        return CAP_EXCEEDED, U0, nodes
    if (target1 & ~base1) == U0 and (target2 & ~base2) == U0:
        return FOUND, U0, nodes
    pick = np.zeros(L + 1, np.int64)
    chosen = np.zeros(L + 2, np.uint64)
    cover = np.zeros(L + 2, np.uint64)
    for size in range(1, L + 1):
        d = 0
        nxt = 0
        chosen[0] = U0
        cover[0] = U0
        while d >= 0:
            if d == size:
                cov = cover[d]
                if (target1 & ~(cov | base1)) == U0 and (target2 & ~(cov | base2)) == U0:
                    return FOUND, chosen[d], nodes
                d -= 1
                nxt = pick[d] + 1
                continue
            placed = False
            i = nxt
            while i <= L - (size - d):
                v = cand[i]
                if (adj[v] & chosen[d]) == U0:
                    nodes += 1
                    if nodes > cap:
                        return CAP_EXCEEDED, U0, nodes
                    pick[d] = i
                    chosen[d + 1] = chosen[d] | _bit(v)
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
    return NOT_FOUND, U0, nodes


@njit(cache=True)
def enumerate_mis(adj, adjc, n, full, set_cap, node_cap):
    out = np.empty(set_cap + 1, np.uint64)
    count = 0
    if n == 0:
        out[0] = U0
        return FOUND, out[:1]
    sv = np.zeros(n + 2, np.int64)
    sc = np.zeros(n + 2, np.uint64)
    sk = np.zeros(n + 2, np.uint64)
    sb = np.zeros(n + 2, np.int64)
    sp = 0
    nodes = 0
    while sp >= 0:
        v = sv[sp]
        if v == n:
            if sk[sp] == full:
                if count >= set_cap:
                    return CAP_EXCEEDED, out[:count]
                out[count] = sc[sp]
                count += 1
            sp -= 1
            continue
        b = sb[sp]
        if b == 0:
            sb[sp] = 1
            if (adj[v] & sc[sp]) == U0:
                nodes += 1
                if nodes > node_cap:
                    return CAP_EXCEEDED, out[:count]
                child_c = sc[sp] | _bit(v)
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
                return CAP_EXCEEDED, out[:count]
            child_c = sc[sp]
            child_k = sk[sp]
            sp += 1
            sv[sp] = v + 1
            sc[sp] = child_c
            sk[sp] = child_k
            sb[sp] = 0
        else:
            sp -= 1
    return FOUND, out[:count]


@njit(cache=True, inline="always")
def _independent(adj, mask, n):
    for v in range(n):
        if (mask & _bit(v)) != U0 and (adj[v] & mask) != U0:
            return False
    return True


@njit(cache=True, inline="always")
def _closed_cover(adjc, mask, n):
    c = U0
    for v in range(n):
        if (mask & _bit(v)) != U0:
            c |= adjc[v]
    return c


@njit(cache=True)
def oracle_relating(adj, adjc, n, x, y):
    full = (U1 << np.uint64(n)) - U1
    bx = _bit(x)
    by = _bit(y)
    for m in range(1 << n):
        s = np.uint64(m)
        mx = s | bx
        if not _independent(adj, mx, n):
            continue
        if _closed_cover(adjc, mx, n) != full:
            continue
        my = s | by
        if not _independent(adj, my, n):
            continue
        if _closed_cover(adjc, my, n) != full:
            continue
        return True, s
    return False, U0


@njit(cache=True)
def oracle_shedding(adj, adjc, n, v):
    forbidden = adjc[v]
    nv = adj[v]
    for m in range(1 << n):
        s = np.uint64(m)
        if (s & forbidden) != U0:
            continue
        if not _independent(adj, s, n):
            continue
        extendable = False
        for u in range(n):
            if (nv & _bit(u)) != U0 and (adj[u] & s) == U0:
                extendable = True
                break
        if not extendable:
            return False, s
    return True, U0


@njit(cache=True)
def oracle_well_covered(adj, adjc, n):
    full = (U1 << np.uint64(n)) - U1
    lo = np.int64(-1)
    hi = np.int64(-1)
    for m in range(1 << n):
        s = np.uint64(m)
        if not _independent(adj, s, n):
            continue
        if _closed_cover(adjc, s, n) != full:
            continue
        size = np.int64(_popcount(s))
        if lo < 0 or size < lo:
            lo = size
        if size > hi:
            hi = size
    return lo == hi


@njit(cache=True)
def has_cycle(adj, n, k):
    path = np.zeros(k, np.int64)
    it = np.zeros(k + 1, np.int64)
    for start in range(n):
        path[0] = start
        used = _bit(start)
        d = 1
        it[1] = start + 1
        while d >= 1:
            if d == k:
                if (adj[path[k - 1]] & _bit(start)) != U0:
                    return True
                d -= 1
                used &= ~_bit(path[d])
                continue
            prev = path[d - 1]
            v = it[d]
            moved = False
            while v < n:
                if (used & _bit(v)) == U0 and (adj[prev] & _bit(v)) != U0:
                    it[d] = v + 1
                    path[d] = v
                    used |= _bit(v)
                    d += 1
                    if d < k:
                        it[d] = start + 1
                    moved = True
                    break
                v += 1
            if not moved:
                d -= 1
                if d >= 1:
                    used &= ~_bit(path[d])
    return False
