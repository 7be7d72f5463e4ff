"""Buchberger's algorithm with full reduction.

Standard improvements only: coprime-leading-term pairs are skipped, the
pair with the smallest lcm is processed first, results are kept monic and
the final basis is inter-reduced, so the output is the unique reduced
Groebner basis.  A configurable S-pair budget turns runaway inputs into a
resource error instead of an endless run.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .errors import ResourceError
from .ideals import Exponent, MonomialIdeal, divides, exp_max, exp_sub
from .polynomials import MonomialOrder, PolyIdeal, RationalPolynomial


def reduce_full(f: RationalPolynomial, basis: list[RationalPolynomial], order: MonomialOrder) -> RationalPolynomial:
    """Normal form of f: no term of the result is divisible by any basis leading term."""
    if not basis:
        return f
    leads = [(order.leading_exponent(g), g) for g in basis]
    work = dict(f.terms)
    result: dict[Exponent, Fraction] = {}
    while work:
        e = max(work, key=order.key)
        c = work.pop(e)
        hit = None
        for le, g in leads:
            if divides(le, e):
                hit = (le, g)
                break
        if hit is None:
            result[e] = c
            continue
        le, g = hit
        factor = c / g.terms[le]
        shift = exp_sub(e, le)
        for ge, gc in g.terms.items():
            if ge == le:
                continue
            key = tuple(a + b for a, b in zip(ge, shift))
            val = work.get(key, Fraction(0)) - factor * gc
            if val == 0:
                work.pop(key, None)
            else:
                work[key] = val
    return RationalPolynomial(f.n, result)


def _monic(f: RationalPolynomial, order: MonomialOrder) -> RationalPolynomial:
    _, lc = order.leading_term(f)
    return f.scale(1 / lc)


def s_polynomial(f: RationalPolynomial, g: RationalPolynomial, order: MonomialOrder) -> RationalPolynomial:
    ef, cf = order.leading_term(f)
    eg, cg = order.leading_term(g)
    lcm = exp_max(ef, eg)
    return f.term_mul(1 / cf, exp_sub(lcm, ef)) - g.term_mul(1 / cg, exp_sub(lcm, eg))


def buchberger(
    polys: list[RationalPolynomial] | tuple[RationalPolynomial, ...],
    order: MonomialOrder,
    s_pair_budget: int = 50_000,
) -> tuple[RationalPolynomial, ...]:
    """The reduced Groebner basis of the ideal generated by polys."""
    basis = [_monic(p, order) for p in polys if not p.is_zero]
    if not basis:
        raise ValueError("no nonzero generators")
    leads = [order.leading_exponent(g) for g in basis]

    def push_pairs(upto: int):
        for i in range(upto):
            lcm = exp_max(leads[i], leads[upto])
            heapq.heappush(pairs, (order.key(lcm), i, upto))

    pairs: list = []
    for k in range(1, len(basis)):
        push_pairs(k)
    processed = 0
    while pairs:
        _, i, j = heapq.heappop(pairs)
        processed += 1
        if processed > s_pair_budget:
            raise ResourceError(f"S-pair budget of {s_pair_budget} exhausted")
        ei, ej = leads[i], leads[j]
        if exp_max(ei, ej) == tuple(a + b for a, b in zip(ei, ej)):
            continue  # coprime leading terms reduce to zero
        s = s_polynomial(basis[i], basis[j], order)
        r = reduce_full(s, basis, order)
        if not r.is_zero:
            basis.append(_monic(r, order))
            leads.append(order.leading_exponent(basis[-1]))
            push_pairs(len(basis) - 1)

    # Inter-reduce to the unique reduced basis.
    leads = [order.leading_exponent(g) for g in basis]
    keep = []
    for idx, le in enumerate(leads):
        if not any(i2 != idx and divides(leads[i2], le) and (leads[i2] != le or i2 < idx) for i2 in range(len(basis))):
            keep.append(idx)
    reduced = []
    kept = [basis[i] for i in keep]
    for idx, g in enumerate(kept):
        others = kept[:idx] + kept[idx + 1 :]
        r = reduce_full(g, others, order)
        if not r.is_zero:
            reduced.append(_monic(r, order))
    reduced.sort(key=lambda g: order.key(order.leading_exponent(g)))
    return tuple(reduced)


def initial_ideal(I: PolyIdeal, order: MonomialOrder, s_pair_budget: int = 50_000) -> MonomialIdeal:
    """Monomial ideal of leading exponents of a Groebner basis of I."""
    gb = buchberger(list(I.gens), order, s_pair_budget=s_pair_budget)
    return MonomialIdeal(I.n, tuple(order.leading_exponent(g) for g in gb))
