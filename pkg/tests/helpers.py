"""Shared corpus builders and naive re-implementations for the tests."""

from itertools import combinations

from reledge.cnf import BadPair, CnfFormula
from reledge.graphs import Graph


def all_pairs(n):
    return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]


def all_graphs(n):
    """Every labeled graph on n vertices, one per edge subset."""
    pairs = all_pairs(n)
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        yield Graph.from_edges(n, edges)


def graph_from_bits(n, bits):
    pairs = all_pairs(n)
    return Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def naive_classification(f: CnfFormula):
    """Double-loop literal counting, independent of classify_literals."""
    counts = {}
    for c in f.clauses:
        for v in range(1, f.num_vars + 1):
            for lit in (v, -v):
                if lit in c:
                    counts[lit] = counts.get(lit, 0) + 1
    major = {l for l, k in counts.items() if k >= 2}
    return counts, major


def naive_bad_pairs(f: CnfFormula):
    """Definition-by-definition double loop over clause pairs and literal pairs."""
    out = []
    m = len(f.clauses)
    for a in range(m):
        for b in range(a + 1, m):
            for l1, l2 in combinations(sorted(f.clauses[a], key=abs), 2):
                if -l1 in f.clauses[b] and -l2 in f.clauses[b]:
                    out.append(BadPair(a, b, l1, l2))
    return out


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n):
    return Graph.from_edges(n, all_pairs(n))
