"""Exact feasibility LP over the rationals.

Phase-one simplex with Bland's anti-cycling rule on an integer tableau.
Pivoting is fraction-free (Edmonds/Bareiss): every entry is an integer over
one common denominator, the previous pivot, and each update divides exactly.
Answers are exact; the problems solved here are small.
"""

import math
from fractions import Fraction

__all__ = ["find_feasible", "is_feasible"]


def _integer_row(row, rhs):
    scale = 1
    for v in (*row, rhs):
        scale = math.lcm(scale, Fraction(v).denominator)
    return [int(Fraction(v) * scale) for v in row], int(Fraction(rhs) * scale)


def find_feasible(A, b):
    """Return some ``x >= 0`` with ``A x = b``, or ``None`` if there is none.

    ``A`` is a list of ``m`` rows of length ``n``; entries may be ints or
    Fractions.  The solution is a list of Fractions.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A) or len(b) != m:
        raise ValueError("inconsistent LP dimensions")
    if m == 0:
        return [Fraction(0)] * n

    # Tableau rows: [A | I_artificial | rhs] with rhs >= 0.
    width = n + m
    T = []
    for i in range(m):
        row, rhs = _integer_row(A[i], b[i])
        if rhs < 0:
            row, rhs = [-v for v in row], -rhs
        T.append(row + [1 if j == i else 0 for j in range(m)] + [rhs])
    basis = list(range(n, width))
    denom = 1

    # Phase-one objective row: minimise the sum of artificials.  The row
    # stores reduced costs; its last entry is minus the objective value.
    z = [0] * (width + 1)
    for row in T:
        for j in range(n):
            z[j] -= row[j]
        z[width] -= row[width]

    while z[width] != 0:
        entering = next((j for j in range(width) if z[j] < 0), None)
        if entering is None:
            break
        leaving = None
        for i, row in enumerate(T):
            a = row[entering]
            if a > 0:
                if leaving is None:
                    leaving = i
                    continue
                lrow = T[leaving]
                # Compare row[rhs]/a with lrow[rhs]/lrow[entering].
                lhs = row[width] * lrow[entering]
                rhs = lrow[width] * a
                if lhs < rhs or (lhs == rhs and basis[i] < basis[leaving]):
                    leaving = i
        if leaving is None:
            # Phase one is bounded below by zero.
            raise ArithmeticError("unbounded phase-one problem")
        denom = _pivot(T, z, leaving, entering, denom)
        basis[leaving] = entering

    if z[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = Fraction(T[i][width], denom)
    return x


def is_feasible(A, b):
    return find_feasible(A, b) is not None


def _pivot(T, z, r, c, denom):
    prow = T[r]
    p = prow[c]
    for row in T:
        if row is prow:
            continue
        f = row[c]
        if f:
            row[:] = [(v * p - f * w) // denom for v, w in zip(row, prow)]
        elif p != denom:
            row[:] = [v * p // denom for v in row]
    f = z[c]
    if f:
        z[:] = [(v * p - f * w) // denom for v, w in zip(z, prow)]
    elif p != denom:
        z[:] = [v * p // denom for v in z]
    return p
