"""Exact volume of a bounded rational polyhedron given by inequalities.

Uses the divergence identity d * vol(Q) = sum_i (-b_i) * vol_{d-1}(F_i) / |a_i k|,
where F_i is the face on the hyperplane a_i . u = b_i projected along a
coordinate k with a_i k != 0.  Each face is again an inequality system, so
the recursion stays in integer arithmetic until the one-dimensional base
case.  Degenerate and empty faces contribute zero automatically.
"""

from __future__ import annotations

import math
from fractions import Fraction

Ineq = tuple[tuple[int, ...], int]  # coefficients a, right hand side b: a . u >= b


def _primitive(coeffs: tuple[int, ...], rhs: int) -> Ineq:
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
    if g > 1:
        # g divides rhs for inequalities tight on lattice data, but reduce
        # conservatively: only scale when rhs stays integral.
        if rhs % g == 0:
            return tuple(c // g for c in coeffs), rhs // g
    return coeffs, rhs


def _eliminate(ineq: Ineq, eq: Ineq, k: int) -> tuple[tuple[int, ...], int]:
    """Substitute u_k from the equality a.u = b into c.u >= r, dropping coordinate k."""
    (c, r), (a, b) = ineq, eq
    ak, ck = a[k], c[k]
    s = 1 if ak > 0 else -1
    new_c = tuple(s * (c[j] * ak - ck * a[j]) for j in range(len(c)) if j != k)
    new_r = s * (r * ak - ck * b)
    return new_c, new_r


def polytope_volume(ineqs: list[Ineq], dim: int) -> Fraction:
    """Euclidean volume of {u in R^dim : a.u >= b for all (a, b)}.

    The system must describe a bounded set; lower-dimensional and empty
    systems return 0.
    """
    # Constant rows: drop the vacuous ones, detect infeasibility.
    clean: dict[tuple[int, ...], int] = {}
    for a, b in ineqs:
        if all(c == 0 for c in a):
            if b > 0:
                return Fraction(0)
            continue
        a, b = _primitive(a, b)
        prev = clean.get(a)
        if prev is None or b > prev:
            clean[a] = b

    if dim == 1:
        lo = None
        hi = None
        for (c,), r in clean.items():
            if c > 0:
                v = Fraction(r, c)
                lo = v if lo is None else max(lo, v)
            else:
                v = Fraction(r, c)
                hi = v if hi is None else min(hi, v)
        if lo is None or hi is None:
            raise ValueError("unbounded one-dimensional system")
        return max(Fraction(0), hi - lo)

    rows = sorted(clean.items())
    total = Fraction(0)
    for a, b in rows:
        if b == 0:
            continue  # zero contribution, skip the recursion
        k = max(j for j in range(dim) if a[j] != 0)
        sub = [_eliminate((c, r), (a, b), k) for c, r in rows if c != a]
        face = polytope_volume(sub, dim - 1)
        if face:
            total += Fraction(-b, abs(a[k])) * face
    return total / dim
