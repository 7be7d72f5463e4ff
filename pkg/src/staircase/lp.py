"""Exact rational linear programming, phase-1 simplex only.

Decides feasibility of A x = b, x >= 0 over the rationals.  Bland's rule
guarantees termination; every pivot is a Fraction operation, so the answer
is exact.  Sized for the small systems that polytope membership produces.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def lp_feasible(A: list[list[Fraction]], b: list[Fraction]) -> bool:
    """True iff there is x >= 0 with A x = b (exact arithmetic)."""
    m = len(A)
    if m == 0:
        return True
    ncols = len(A[0])

    # Flip rows so the right hand side is nonnegative.
    rows = []
    rhs = []
    for i in range(m):
        if b[i] < 0:
            rows.append([-Fraction(v) for v in A[i]])
            rhs.append(-Fraction(b[i]))
        else:
            rows.append([Fraction(v) for v in A[i]])
            rhs.append(Fraction(b[i]))

    # Tableau with one artificial variable per row; minimize their sum.
    total = ncols + m
    tableau = []
    for i in range(m):
        row = rows[i] + [ZERO] * m + [rhs[i]]
        row[ncols + i] = ONE
        tableau.append(row)
    basis = [ncols + i for i in range(m)]

    # Objective row: reduced costs for minimizing the artificial sum,
    # expressed in terms of the current basis (initially the artificials).
    obj = [ZERO] * (total + 1)
    for i in range(m):
        for j in range(total + 1):
            obj[j] -= tableau[i][j]
    for i in range(m):
        obj[ncols + i] = ZERO

    while True:
        # Bland: entering variable = lowest index with negative reduced cost.
        enter = -1
        for j in range(total):
            if obj[j] < 0:
                enter = j
                break
        if enter == -1:
            break
        # Ratio test, ties broken by lowest basis index (Bland).
        leave = -1
        best = None
        for i in range(m):
            if tableau[i][enter] > 0:
                ratio = tableau[i][-1] / tableau[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave == -1:
            # Unbounded phase-1 objective cannot happen (bounded below by 0).
            raise RuntimeError("phase-1 simplex became unbounded")
        piv = tableau[leave][enter]
        tableau[leave] = [v / piv for v in tableau[leave]]
        for i in range(m):
            if i != leave and tableau[i][enter] != 0:
                f = tableau[i][enter]
                tableau[i] = [v - f * w for v, w in zip(tableau[i], tableau[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [v - f * w for v, w in zip(obj, tableau[leave])]
        basis[leave] = enter

    artificial_sum = -obj[-1]
    return artificial_sum == 0
