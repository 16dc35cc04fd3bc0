"""Independent reference computations for the test suite.

None of these call into walksym beyond the Graph container; they are brute
force on purpose.
"""
from fractions import Fraction
from itertools import permutations

import networkx as nx
import numpy as np


def pair_index(n):
    idx = {}
    k = 0
    for j in range(1, n):
        for i in range(j):
            idx[(i, j)] = idx[(j, i)] = k
            k += 1
    return idx


def brute_min_codes(n, codes):
    """Minimum graph6-order code over all n! relabelings, for each code."""
    L = n * (n - 1) // 2
    codes = np.asarray(codes, dtype=np.int64)
    if L == 0:
        return codes.copy()
    bits = ((codes[:, None] >> np.arange(L - 1, -1, -1)) & 1).astype(np.int64)
    idx = pair_index(n)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    best = None
    for p in permutations(range(n)):
        weights = np.array([1 << (L - 1 - idx[(p[i], p[j])]) for i, j in pairs], dtype=np.int64)
        c = bits @ weights
        best = c if best is None else np.minimum(best, c)
    return best


def connected_codes_nx(n):
    """All codes on n labeled vertices whose graph is connected (networkx check)."""
    L = n * (n - 1) // 2
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    out = []
    for code in range(1 << L):
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(p for k, p in enumerate(pairs) if (code >> (L - 1 - k)) & 1)
        if nx.is_connected(g):
            out.append(code)
    return out


def brute_class_count(n):
    codes = connected_codes_nx(n)
    return len(set(brute_min_codes(n, codes).tolist()))


def brute_automorphisms(g):
    return [p for p in permutations(range(g.n)) if g.relabel(p) == g]


def first_passage_by_walks(g, x, y, tmax):
    """Enumerate every walk from x; record the step at which y is first entered."""
    probs = [Fraction(0)] * tmax

    def go(v, step, prob):
        if step == tmax:
            return
        nbrs = g.neighbors(v)
        for z in nbrs:
            p = prob / len(nbrs)
            if z == y:
                probs[step] += p
            else:
                go(z, step + 1, p)

    go(x, 0, Fraction(1))
    return probs


def closed_walks_by_enumeration(g, v, t):
    def go(u, left):
        if left == 0:
            return int(u == v)
        return sum(go(z, left - 1) for z in g.neighbors(u))

    return go(v, t)


def cycle_resistance(n, k):
    """Series-parallel: arcs of k and n-k unit resistors in parallel."""
    return Fraction(k * (n - k), n)


def cycle_r_pi(n):
    # every vertex has degree 2, 2m = 2n
    return sum((2 * cycle_resistance(n, k) for k in range(1, n)), Fraction(0)) / (2 * n)


def complete_resistance(n):
    # direct edge (1 ohm) in parallel with n-2 two-edge paths (2 ohm each)
    return 1 / (1 + Fraction(n - 2, 2))


def complete_r_pi(n):
    r = complete_resistance(n)
    return (n - 1) * (n - 1) * r / (n * (n - 1))


def hitting_times_float(g, y):
    """Floating-point hitting times via numpy, for sanity comparisons only."""
    a = np.array(g.adjacency(), dtype=float)
    p = a / a.sum(axis=1, keepdims=True)
    keep = [u for u in range(g.n) if u != y]
    m = np.eye(len(keep)) - p[np.ix_(keep, keep)]
    h = np.linalg.solve(m, np.ones(len(keep)))
    out = np.zeros(g.n)
    out[keep] = h
    return out


def resistance_pinv(g):
    lap = np.diag(g.degrees).astype(float) - np.array(g.adjacency(), dtype=float)
    pinv = np.linalg.pinv(lap)
    d = np.diag(pinv)
    return d[:, None] + d[None, :] - 2 * pinv
