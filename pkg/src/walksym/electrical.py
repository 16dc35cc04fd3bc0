"""Effective resistance, hitting times, and hitting-time symmetry.

Two independent routes are kept on purpose:

* hitting times solve ``(I - P) h = 1`` on ``V - {y}`` with the rational
  transition matrix, one system per target;
* resistances ground a vertex of the integer Laplacian ``D - A`` and solve or
  invert the reduced system.

The commute identity ``H(x,y) + H(y,x) = 2m r(x,y)`` ties them together and
is exposed as :func:`commute_identity_check`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import CharacterizationMismatch, Disconnected, NotRegular, NotReversible, SameVertex, TooSmall
from .exact import format_rational, inverse_exact, laplacian, solve_linear_exact, transition_matrix
from .graph import Graph, is_connected


@dataclass(frozen=True)
class ReversibilityReport:
    reversible: bool
    r_d: tuple[Fraction, ...]
    r_d_constant: Fraction | None
    r_pi: Fraction | None
    max_asymmetry: Fraction

    def to_dict(self):
        opt = lambda q: None if q is None else format_rational(q)  # noqa: E731
        return {
            "reversible": self.reversible,
            "r_d": [format_rational(q) for q in self.r_d],
            "r_d_constant": opt(self.r_d_constant),
            "r_pi": opt(self.r_pi),
            "max_asymmetry": format_rational(self.max_asymmetry),
        }


def _require(g: Graph):
    if g.n < 2:
        raise TooSmall("electrical quantities need at least two vertices")
    if not is_connected(g):
        raise Disconnected("electrical quantities need a connected graph")


def _vertex(g: Graph, v: int):
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n = {g.n}")


# --------------------------------------------------------------------------
# resistance


def effective_resistance(g: Graph, v: int, w: int) -> Fraction:
    """Resistance between ``v`` and ``w`` with every edge a unit resistor.

    Grounds ``w``, injects unit current at ``v`` and returns the potential
    there.
    """
    _vertex(g, v)
    _vertex(g, w)
    if v == w:
        raise SameVertex("effective resistance needs two distinct vertices")
    _require(g)
    keep = [u for u in range(g.n) if u != w]
    lap = laplacian(g)
    reduced = [[lap[i][j] for j in keep] for i in keep]
    rhs = [int(u == v) for u in keep]
    phi = solve_linear_exact(reduced, rhs, method="bareiss")
    return phi[keep.index(v)]


def resistance_matrix(g: Graph) -> list[list[Fraction]]:
    """All-pairs resistance from one inversion of the Laplacian grounded at ``n-1``."""
    _require(g)
    n = g.n
    lap = laplacian(g)
    inv = inverse_exact([row[: n - 1] for row in lap[: n - 1]])
    zero = Fraction(0)
    green = [row + [zero] for row in inv] + [[zero] * n]
    return [[green[v][v] + green[w][w] - 2 * green[v][w] for w in range(n)] for v in range(n)]


def r_d_vector(g: Graph, res: list[list[Fraction]] | None = None) -> tuple[Fraction, ...]:
    """``R_d(v) = sum_w d(w) r(v, w)`` for every vertex."""
    if res is None:
        res = resistance_matrix(g)
    deg = g.degrees
    return tuple(sum((deg[w] * res[v][w] for w in range(g.n)), Fraction(0)) for v in range(g.n))


# --------------------------------------------------------------------------
# hitting times


def hitting_times_to(g: Graph, y: int) -> list[Fraction]:
    """``h[x] = H(x, y)`` for all ``x``, with ``h[y] = 0``."""
    _vertex(g, y)
    _require(g)
    p = transition_matrix(g)
    keep = [u for u in range(g.n) if u != y]
    system = [[int(i == j) - p[i][j] for j in keep] for i in keep]
    sol = solve_linear_exact(system, [1] * len(keep))
    h = [Fraction(0)] * g.n
    for u, val in zip(keep, sol):
        h[u] = val
    return h


def hitting_time(g: Graph, x: int, y: int) -> Fraction:
    _vertex(g, x)
    if x == y:
        raise SameVertex("hitting time needs distinct vertices")
    return hitting_times_to(g, y)[x]


def hitting_matrix(g: Graph) -> list[list[Fraction]]:
    """``H[x][y]``, one exact solve per target ``y``."""
    cols = [hitting_times_to(g, y) for y in range(g.n)]
    return [[cols[y][x] for y in range(g.n)] for x in range(g.n)]


# --------------------------------------------------------------------------
# reversibility


def is_reversible(g: Graph) -> ReversibilityReport:
    """Decide hitting-time symmetry and cross-check it against constancy of ``R_d``.

    The verdict comes from the hitting matrix.  The ``R_d`` vector is computed
    from resistances alone; if the two criteria disagree the implementation
    is wrong and :class:`CharacterizationMismatch` is raised.
    """
    _require(g)
    h = hitting_matrix(g)
    asym = max(abs(h[x][y] - h[y][x]) for x in range(g.n) for y in range(x + 1, g.n))
    rd = r_d_vector(g)
    constant = len(set(rd)) == 1
    symmetric = asym == 0
    if symmetric != constant:
        raise CharacterizationMismatch(
            f"hitting-time symmetry ({symmetric}) disagrees with constant R_d ({constant}) on {g}"
        )
    r_d_const = rd[0] if constant else None
    rpi = rd[0] / (2 * g.m) if constant else None
    return ReversibilityReport(symmetric, rd, r_d_const, rpi, asym)


def r_pi(g: Graph) -> Fraction:
    """``R_d(G) / 2m`` for a graph whose ``R_d`` is vertex-independent."""
    rd = r_d_vector(g)
    if len(set(rd)) != 1:
        raise NotReversible(f"R_d varies over vertices ({min(rd)} .. {max(rd)}); R_pi is undefined")
    return rd[0] / (2 * g.m)


def commute_identity_check(g: Graph) -> bool:
    """True iff ``H(x,y) + H(y,x) == 2m r(x,y)`` for every pair."""
    h = hitting_matrix(g)
    res = resistance_matrix(g)
    two_m = 2 * g.m
    return all(
        h[x][y] + h[y][x] == two_m * res[x][y] for x in range(g.n) for y in range(x + 1, g.n)
    )


def spectral_gap_estimate(g: Graph) -> float:
    """``k - lambda_2`` of the adjacency spectrum of a connected ``k``-regular graph (float)."""
    if not is_connected(g):
        raise Disconnected("spectral gap needs a connected graph")
    if not g.is_regular():
        raise NotRegular("spectral gap is defined here for regular graphs only")
    if g.n < 2:
        raise TooSmall("spectral gap needs at least two vertices")
    eig = np.linalg.eigvalsh(np.array(g.adjacency(), dtype=float))
    return float(g.degrees[0] - eig[-2])
