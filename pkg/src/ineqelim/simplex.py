"""Phase-1 simplex over exact rationals.

Solves "find x >= 0 with A x = b" by minimizing the sum of one artificial
variable per row.  Bland's smallest-index rule on both the entering and the
leaving choice rules out cycling, and Fraction arithmetic rules out rounding,
so a None result is a genuine infeasibility proof.
"""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)


def solve_eq_nonneg(
    matrix: list[list[Fraction]], rhs: list[Fraction]
) -> list[Fraction] | None:
    """Return some x >= 0 with matrix @ x == rhs, or None when none exists."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    if any(len(row) != n for row in matrix):
        raise ValueError("ragged constraint matrix")
    if len(rhs) != m:
        raise ValueError("rhs length does not match row count")
    if m == 0:
        return []

    # tableau columns: n structural, m artificial, then the rhs
    tableau: list[list[Fraction]] = []
    for row, b in zip(matrix, rhs):
        sign = -1 if b < 0 else 1
        tableau.append([sign * a for a in row] + [_ZERO] * m + [sign * b])
    for i in range(m):
        tableau[i][n + i] = Fraction(1)
    basis = [n + i for i in range(m)]

    # objective: sum of artificials, expressed over the nonbasic columns
    # (basic artificial columns start zeroed, row operations keep them so)
    obj = [_ZERO] * (n + m + 1)
    for row in tableau:
        for j in range(n):
            obj[j] += row[j]
        obj[-1] += row[-1]

    while True:
        entering = -1
        for j in range(n + m):
            if obj[j] > 0:
                entering = j
                break
        if entering < 0:
            break
        pivot_row = -1
        best: Fraction | None = None
        for i in range(m):
            a = tableau[i][entering]
            if a > 0:
                ratio = tableau[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[pivot_row]):
                    best = ratio
                    pivot_row = i
        if pivot_row < 0:
            # unbounded descent cannot happen for a sum of nonnegatives
            raise RuntimeError("phase-1 objective unbounded")
        _pivot(tableau, obj, pivot_row, entering)
        basis[pivot_row] = entering

    if obj[-1] != 0:
        return None
    x = [_ZERO] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = tableau[i][-1]
    return x


def _pivot(tableau: list[list[Fraction]], obj: list[Fraction], row: int, col: int) -> None:
    piv = tableau[row][col]
    tableau[row] = [a / piv for a in tableau[row]]
    pivot_line = tableau[row]
    for i, line in enumerate(tableau):
        if i != row and line[col] != 0:
            factor = line[col]
            tableau[i] = [a - factor * p for a, p in zip(line, pivot_line)]
    factor = obj[col]
    if factor != 0:
        obj[:] = [a - factor * p for a, p in zip(obj, pivot_line)]
