"""Closed walks, return probabilities, first passage, and Monte Carlo checks.

Both the closed-walk condition and the equal-return-probability condition
quantify over every walk length.  Checking lengths up to ``n - 1`` is
enough: by Cayley-Hamilton, ``M^t`` for ``t >= n`` is a fixed linear
combination of ``M^0 .. M^(n-1)`` (scalar coefficients), so a constant
diagonal for all small powers forces one for every power.  The argument
applies to the adjacency matrix and to the transition matrix alike.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from . import kernels
from .electrical import hitting_times_to
from .errors import BadParams, Disconnected, IsolatedVertex, NotAWalk, SameVertex
from .exact import int_matrix_power_diags, transition_matrix
from .graph import Graph, is_connected


@dataclass(frozen=True)
class WalkProfile:
    tmax: int
    counts: tuple[tuple[int, ...], ...]
    return_probs: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class FirstPassageDistribution:
    source: int
    target: int
    tmax: int
    probs: tuple[Fraction, ...]  # probs[t-1] = Pr(first visit at step t)
    tail: Fraction

    def at(self, t: int) -> Fraction:
        return self.probs[t - 1]


@dataclass(frozen=True)
class SimEstimate:
    point: float
    trials: int
    stderr: float
    seed: int


def _require_no_isolated(g: Graph):
    for v, d in enumerate(g.degrees):
        if d == 0:
            raise IsolatedVertex(f"vertex {v} is isolated; the random walk is undefined there")


def _scaled_walk_matrix(g: Graph):
    """Integer ``M`` and scale ``s`` with ``P = M / s`` for the simple random walk."""
    s = lcm(*g.degrees)
    return [[(s // g.degrees[x]) * int(g.has_edge(x, z)) for z in range(g.n)] for x in range(g.n)], s


def return_probability_diags(g: Graph, tmax: int) -> list[list[Fraction]]:
    """``out[t][x] = Pr_x(Z(t) = x)`` for ``t = 0..tmax``."""
    _require_no_isolated(g)
    m, s = _scaled_walk_matrix(g)
    diags = int_matrix_power_diags(m, tmax)
    return [[Fraction(c, s**t) for c in row] for t, row in enumerate(diags)]


def closed_walk_count_profile(g: Graph, tmax: int | None = None) -> WalkProfile:
    """Closed-walk counts ``(A^t)_vv`` and return probabilities ``(P^t)_vv``, ``t = 0..tmax``.

    ``tmax`` defaults to ``n``.
    """
    if tmax is None:
        tmax = g.n
    if tmax < 0:
        raise BadParams("tmax must be non-negative")
    probs = return_probability_diags(g, tmax)
    counts = int_matrix_power_diags(g.adjacency(), tmax)
    return WalkProfile(tmax, tuple(map(tuple, counts)), tuple(map(tuple, probs)))


def is_walk_regular(g: Graph) -> bool:
    """True iff the number of closed walks of every length is the same at every vertex."""
    if g.n <= 2:
        return True
    for row in int_matrix_power_diags(g.adjacency(), g.n - 1)[2:]:
        if len(set(row)) != 1:
            return False
    return True


def satisfies_return_condition(g: Graph) -> bool:
    """True iff ``Pr_x(Z(t) = x)`` is independent of ``x`` for every ``t``.

    Decided directly on the diagonals of ``P^t``; regularity is not assumed.
    """
    if not is_connected(g):
        raise Disconnected("the return condition is checked on connected graphs only")
    if g.n == 1:
        return True
    m, _ = _scaled_walk_matrix(g)
    # P^t = M^t / s^t, and the common factor does not affect constancy
    for row in int_matrix_power_diags(m, g.n - 1)[1:]:
        if len(set(row)) != 1:
            return False
    return True


def expected_return_time_exact(g: Graph, x: int) -> Fraction:
    """Mean first return time to ``x``, by first-step analysis on hitting times.

    ``E = 1 + (1/d(x)) * sum_{z ~ x} H(z, x)``, with the hitting times solved
    exactly; no closed-form shortcut is used.
    """
    if not is_connected(g):
        raise Disconnected("expected return time needs a connected graph")
    h = hitting_times_to(g, x)
    nbrs = g.neighbors(x)
    return 1 + Fraction(sum(h[z] for z in nbrs), len(nbrs))


def first_passage_distribution(g: Graph, x: int, y: int, tmax: int | None = None) -> FirstPassageDistribution:
    """Exact law of the first visit time to ``y`` from ``x``, truncated at ``tmax`` (default ``2n``)."""
    if x == y:
        raise SameVertex("first passage needs distinct source and target")
    if not is_connected(g):
        raise Disconnected("first passage needs a connected graph")
    if tmax is None:
        tmax = 2 * g.n
    p = transition_matrix(g)
    mass = [Fraction(0)] * g.n
    mass[x] = Fraction(1)
    probs = []
    for _ in range(tmax):
        nxt = [Fraction(0)] * g.n
        for u, mu in enumerate(mass):
            if mu:
                for z in g.neighbors(u):
                    nxt[z] += mu * p[u][z]
        probs.append(nxt[y])
        nxt[y] = Fraction(0)
        mass = nxt
    return FirstPassageDistribution(x, y, tmax, tuple(probs), 1 - sum(probs, Fraction(0)))


def walk_traversal_probability(g: Graph, walk: Sequence[int]) -> Fraction:
    """Probability that the walk's first ``len(walk) - 1`` steps follow ``walk``."""
    if len(walk) < 2:
        raise NotAWalk("a walk needs at least one step")
    for v in walk:
        if not 0 <= v < g.n:
            raise NotAWalk(f"vertex {v} out of range")
    prob = Fraction(1)
    for a, b in zip(walk, walk[1:]):
        if not g.has_edge(a, b):
            raise NotAWalk(f"{a} and {b} are not adjacent")
        prob /= g.degrees[a]
    return prob


def neighbor_table(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    deg = np.array(g.degrees, dtype=np.int64)
    nbr = np.zeros((g.n, max(1, int(deg.max()))), dtype=np.int64)
    for v in range(g.n):
        ns = g.neighbors(v)
        nbr[v, : len(ns)] = ns
    return nbr, deg


def simulate_return_frequency(g: Graph, x: int, t: int, trials: int, seed: int) -> SimEstimate:
    """Fraction of ``trials`` seeded ``t``-step walks from ``x`` that end at ``x``.

    Trial ``i`` draws from a stream keyed by ``(seed, i)`` (see
    :mod:`walksym.kernels`), so the estimate is bit-reproducible whatever the
    backend or thread count.
    """
    _require_no_isolated(g)
    if trials < 1:
        raise BadParams("trials must be >= 1")
    if t < 0:
        raise BadParams("steps must be >= 0")
    if not 0 <= x < g.n:
        raise BadParams(f"vertex {x} out of range")
    nbr, deg = neighbor_table(g)
    ends = kernels.walk_endpoints(nbr, deg, x, t, trials, seed)
    point = int(np.count_nonzero(ends == x)) / trials
    return SimEstimate(point, trials, math.sqrt(point * (1 - point) / trials), int(seed))
