"""Exact rational and integer linear algebra.

Rationals are :class:`fractions.Fraction`; matrices are plain lists of rows.
Nothing here touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import IsolatedVertex, SingularMatrix
from .graph import Graph

Rational = Fraction
RatMatrix = list[list[Fraction]]
IntMatrix = list[list[int]]


def format_rational(q) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def identity(n: int) -> RatMatrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _augmented(a, b):
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("coefficient matrix must be square")
    if len(b) != n:
        raise ValueError(f"right-hand side has length {len(b)}, expected {n}")
    return [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]


def solve_linear_exact(a: Sequence[Sequence], b: Sequence, method: str = "gauss") -> list[Fraction]:
    """Solve ``a @ x = b`` exactly.

    Parameters
    ----------
    a : square matrix of ints or Fractions
    b : right-hand side
    method : {"gauss", "bareiss"}
        ``gauss`` runs Gaussian elimination over the rationals, pivoting on
        the first nonzero entry of each column.  ``bareiss`` clears
        denominators row by row and runs fraction-free integer elimination.

    Raises
    ------
    SingularMatrix
        if ``a`` has no inverse.
    """
    if method == "gauss":
        return _gauss_solve(_augmented(a, b))
    if method == "bareiss":
        return _bareiss_solve(_augmented(a, b))
    raise ValueError(f"unknown method {method!r}")


def _gauss_solve(m: RatMatrix) -> list[Fraction]:
    n = len(m)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise SingularMatrix(f"no nonzero pivot in column {col}")
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
        prow = m[col]
        inv = 1 / prow[col]
        for r in range(col + 1, n):
            row = m[r]
            f = row[col]
            if f:
                f *= inv
                for c in range(col, n + 1):
                    if prow[c]:
                        row[c] -= f * prow[c]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        row = m[r]
        s = row[n]
        for c in range(r + 1, n):
            if row[c]:
                s -= row[c] * x[c]
        x[r] = s / row[r]
    return x


def _bareiss_solve(m: RatMatrix) -> list[Fraction]:
    n = len(m)
    rows = []
    for row in m:
        den = lcm(*(x.denominator for x in row))
        rows.append([int(x * den) for x in row])
    prev = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if rows[r][k] != 0), None)
        if piv is None:
            raise SingularMatrix(f"no nonzero pivot in column {k}")
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
        pk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            a_ik = ri[k]
            for j in range(k + 1, n + 1):
                # exact division is the Bareiss invariant
                ri[j] = (pk[k] * ri[j] - a_ik * pk[j]) // prev
            ri[k] = 0
        prev = pk[k]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        row = rows[r]
        s = Fraction(row[n])
        for c in range(r + 1, n):
            if row[c]:
                s -= row[c] * x[c]
        x[r] = s / row[r]
    return x


def inverse_exact(a: Sequence[Sequence]) -> RatMatrix:
    """Gauss-Jordan inverse over the rationals."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise SingularMatrix(f"no nonzero pivot in column {col}")
        m[col], m[piv] = m[piv], m[col]
        prow = m[col]
        inv = 1 / prow[col]
        for c in range(col, 2 * n):
            prow[c] *= inv
        for r in range(n):
            if r != col and m[r][col]:
                row = m[r]
                f = row[col]
                for c in range(col, 2 * n):
                    if prow[c]:
                        row[c] -= f * prow[c]
    return [row[n:] for row in m]


def matmul(a, b):
    """Dense product that skips zero entries of ``a``; works for ints and Fractions."""
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cols
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += x * bk[j]
        out.append(acc)
    return out


def matvec(a, x):
    return [sum(aij * xj for aij, xj in zip(row, x) if aij) for row in a]


def int_matrix_power_diags(a: IntMatrix, tmax: int) -> list[list[int]]:
    """``out[t][v] = (a^t)[v][v]`` for ``t = 0..tmax`` by iterated multiplication."""
    n = len(a)
    power = [[int(i == j) for j in range(n)] for i in range(n)]
    out = [[1] * n]
    for _ in range(tmax):
        power = matmul(power, a)
        out.append([power[v][v] for v in range(n)])
    return out


def trace_powers(a: IntMatrix, tmax: int) -> list[int]:
    """``trace(a^t)`` for ``t = 0..tmax``, accumulated one basis vector at a time.

    Deliberately shares no code with :func:`int_matrix_power_diags`: each
    column of ``a^t`` is carried forward by matrix-vector products.
    """
    n = len(a)
    traces = [0] * (tmax + 1)
    for v in range(n):
        x = [int(i == v) for i in range(n)]
        traces[0] += 1
        for t in range(1, tmax + 1):
            x = [sum(a[i][j] * x[j] for j in range(n)) for i in range(n)]
            traces[t] += x[v]
    return traces


def transition_matrix(g: Graph) -> RatMatrix:
    """Simple random walk kernel: ``P[x][z] = 1/d(x)`` for each neighbour ``z``."""
    rows = []
    for x in range(g.n):
        d = g.degrees[x]
        if d == 0:
            raise IsolatedVertex(f"vertex {x} has no neighbours")
        p = Fraction(1, d)
        rows.append([p if g.has_edge(x, z) else Fraction(0) for z in range(g.n)])
    return rows


def laplacian(g: Graph) -> IntMatrix:
    return [[g.degrees[i] if i == j else -int(g.has_edge(i, j)) for j in range(g.n)] for i in range(g.n)]
