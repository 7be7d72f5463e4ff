"""Truncated linear algebra on polynomial ideals supported at the origin.

Working inside R / m^(N+1) (m the maximal ideal at the origin) turns ideal
questions into finite exact row reduction.  The rows are all monomial
multiples of the generators truncated above degree N; their span is the
image of the ideal once m^N is certified to lie inside it, because then
adding m^(N+1) changes nothing.

Two column orders extract different information from the same rows:

* degree ascending, order descending inside a degree: the pivot of a row is
  the leading monomial of its lowest-degree form, so the pivot set generates
  the initial ideal of the tangent cone, degree by degree;
* order descending globally (degree-compatible orders only): the pivot is
  the true leading monomial, so the pivot set generates the initial ideal of
  the ideal itself.

Certification searches N = 2, 3, ... up to a budget: the degree-N slice is
fully covered by pivots exactly when m^N is contained in the ideal locally
at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FormatError, NotZeroDimensionalError
from .ideals import Exponent, MonomialIdeal
from .polynomials import MonomialOrder, PolyIdeal, monomials_of_degree


def _columns_tangent_cone(n: int, N: int, order: MonomialOrder) -> list[Exponent]:
    cols: list[Exponent] = []
    for d in range(N + 1):
        cols.extend(sorted(monomials_of_degree(n, d), key=order.key, reverse=True))
    return cols


def _columns_initial(n: int, N: int, order: MonomialOrder) -> list[Exponent]:
    all_mons = [e for d in range(N + 1) for e in monomials_of_degree(n, d)]
    return sorted(all_mons, key=order.key, reverse=True)


class _Echelon:
    """Sparse row echelon over the rationals, pivoting on the smallest column index."""

    def __init__(self):
        self.pivots: dict[int, dict[int, Fraction]] = {}

    def insert(self, row: dict[int, Fraction]) -> int | None:
        while row:
            j = min(row)
            piv = self.pivots.get(j)
            if piv is None:
                inv = 1 / row[j]
                row = {k: v * inv for k, v in row.items()}
                self.pivots[j] = row
                return j
            c = row[j]
            for k, v in piv.items():
                newv = row.get(k, Fraction(0)) - c * v
                if newv == 0:
                    row.pop(k, None)
                else:
                    row[k] = newv
        return None

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _macaulay_rows(I: PolyIdeal, N: int, col_index: dict[Exponent, int]):
    """All truncated monomial multiples of the generators, as sparse rows."""
    n = I.n
    for g in I.gens:
        ordg = g.order_at_origin()
        if ordg > N:
            continue
        for d in range(N - ordg + 1):
            for m in monomials_of_degree(n, d):
                row: dict[int, Fraction] = {}
                for e, c in g.terms.items():
                    te = tuple(a + b for a, b in zip(e, m))
                    if sum(te) <= N:
                        row[col_index[te]] = row.get(col_index[te], Fraction(0)) + c
                yield {k: v for k, v in row.items() if v != 0}


@dataclass(frozen=True)
class TruncationData:
    """Result of a successful certification at truncation exponent N."""

    N: int
    rank: int
    dim_truncated: int  # number of monomials of degree <= N
    pivot_exponents: tuple[Exponent, ...]

    @property
    def local_length(self) -> int:
        return self.dim_truncated - self.rank


def _run_truncation(I: PolyIdeal, N: int, order: MonomialOrder) -> TruncationData:
    cols = _columns_tangent_cone(I.n, N, order)
    col_index = {e: i for i, e in enumerate(cols)}
    ech = _Echelon()
    for row in _macaulay_rows(I, N, col_index):
        if row:
            ech.insert(row)
    pivots = tuple(sorted(cols[j] for j in ech.pivots))
    return TruncationData(N=N, rank=ech.rank, dim_truncated=len(cols), pivot_exponents=pivots)


def certify_truncation(I: PolyIdeal, order: MonomialOrder | None = None, budget: int = 24) -> TruncationData:
    """Find the smallest N <= budget with every degree-N monomial a pivot.

    That coverage certifies m^N lies in the ideal locally at the origin,
    which is exactly the zero-dimensionality needed by the degeneration
    pipeline.  Raises NotZeroDimensionalError when the budget runs out.
    """
    if order is None:
        order = MonomialOrder("grevlex", priority=tuple(reversed(range(I.n))))
    for N in range(2, budget + 1):
        data = _run_truncation(I, N, order)
        top = set(monomials_of_degree(I.n, N))
        covered = top.intersection(data.pivot_exponents)
        if len(covered) == len(top):
            return data
    raise NotZeroDimensionalError(
        f"could not certify a maximal-ideal power inside the ideal up to exponent {budget}"
    )


def tangent_cone_initial_pivots(I: PolyIdeal, order: MonomialOrder, budget: int = 24) -> MonomialIdeal:
    """Initial ideal of the tangent cone, from the degree-graded pivot set."""
    data = certify_truncation(I, order, budget)
    return MonomialIdeal(I.n, data.pivot_exponents)


def initial_ideal_pivots(I: PolyIdeal, order: MonomialOrder, budget: int = 24) -> MonomialIdeal:
    """Initial ideal of I itself via truncation; degree-compatible orders only.

    For a degree-compatible order, every minimal generator of the initial
    ideal is the leading monomial of an element of degree at most N, and
    those elements survive truncation unchanged, so the globally order-sorted
    pivot set generates the initial ideal.
    """
    if not order.is_degree_compatible(I.n):
        raise FormatError("the truncated initial-ideal oracle needs a degree-compatible order")
    data = certify_truncation(I, order, budget)
    N = data.N
    cols = _columns_initial(I.n, N, order)
    col_index = {e: i for i, e in enumerate(cols)}
    ech = _Echelon()
    for row in _macaulay_rows(I, N, col_index):
        if row:
            ech.insert(row)
    pivots = tuple(sorted(cols[j] for j in ech.pivots))
    return MonomialIdeal(I.n, pivots)


def truncated_length(I: PolyIdeal, budget: int = 24) -> int:
    """Length of the quotient at the origin: dim R/m^(N+1) minus the row rank."""
    return certify_truncation(I, None, budget).local_length
