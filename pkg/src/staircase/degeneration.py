"""Degenerations of polynomial ideals to monomial ideals.

The pipeline deforms an ideal to the initial ideal of its tangent cone at
the origin; colength is preserved and the diagonal entry value mu can only
grow, so the monomial side yields certified upper bounds for mu of the
original ideal.  A common monomial factor is split off first and carried
through the degeneration unchanged, which is what makes ideals like
x2^2 * (zero-dimensional part) tractable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, NotZeroDimensionalError
from .ideals import MonomialIdeal, colength, exp_min, shift_ideal
from .macaulay import (
    certify_truncation,
    initial_ideal_pivots,
    tangent_cone_initial_pivots,
)
from .polynomials import (
    MonomialOrder,
    PolyIdeal,
    RationalPolynomial,
    default_order,
    substitute_linear,
)


def monomial_content_split(I: PolyIdeal) -> tuple[tuple[int, ...], PolyIdeal]:
    """Largest monomial x^c dividing every generator, and the quotient ideal.

    Only the monomial part of a common factor is extracted; a non-monomial
    common factor leaves the quotient non-zero-dimensional and is reported
    as such downstream.
    """
    content = None
    for g in I.gens:
        gmin = None
        for e in g.terms:
            gmin = e if gmin is None else exp_min(gmin, e)
        content = gmin if content is None else exp_min(content, gmin)
    assert content is not None
    if not any(content):
        return tuple(content), I
    shifted = tuple(
        RationalPolynomial(I.n, {tuple(a - b for a, b in zip(e, content)): c for e, c in g.terms.items()})
        for g in I.gens
    )
    return tuple(content), PolyIdeal(I.n, shifted)


def tangent_cone_initial(I: PolyIdeal, order: MonomialOrder | None = None, budget: int = 24) -> MonomialIdeal:
    """Monomial degeneration: split the monomial content, degenerate the
    zero-dimensional part to the initial ideal of its tangent cone, shift back.

    Raises NotZeroDimensionalError when no maximal-ideal power can be
    certified inside the content-free part within the budget.
    """
    if order is None:
        order = default_order("grevlex", I.n)
    content, primitive = monomial_content_split(I)
    inner = tangent_cone_initial_pivots(primitive, order, budget)
    return shift_ideal(inner, content) if any(content) else inner


def initial_ideal_truncated(I: PolyIdeal, order: MonomialOrder, budget: int = 24) -> MonomialIdeal:
    """Initial ideal of I via the truncation oracle (degree-compatible orders).

    Independent of Buchberger's algorithm; for ideals supported at the
    origin, both must produce the same monomial ideal.
    """
    return initial_ideal_pivots(I, order, budget)


@dataclass(frozen=True)
class LengthCheck:
    l_orig: int
    l_initial: int
    equal: bool


def check_length_preservation(I: PolyIdeal, order: MonomialOrder | None = None, budget: int = 24) -> LengthCheck:
    """Length at the origin before and after degeneration; they must agree.

    A mismatch on exact data means a bug in one of the two pipelines, so it
    raises ConsistencyError rather than returning quietly.
    """
    if order is None:
        order = default_order("grevlex", I.n)
    data = certify_truncation(I, order, budget)
    l_orig = data.local_length
    l_initial = colength(tangent_cone_initial(I, order, budget))
    check = LengthCheck(l_orig=l_orig, l_initial=l_initial, equal=l_orig == l_initial)
    if not check.equal:
        raise ConsistencyError(
            f"degeneration changed the length: {l_orig} != {l_initial} on {I}", report=check
        )
    return check


def _shear_matrix(rng: random.Random, n: int) -> list[list[int]]:
    """Lower-triangular unimodular change with small integer entries."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(1, n):
        for j in range(i):
            m[i][j] = rng.randint(-3, 3)
    return m


def _base_trials(n: int) -> list[tuple[str, MonomialOrder]]:
    from itertools import permutations

    perms = list(permutations(range(n))) if n <= 3 else [tuple(range(n)), tuple(reversed(range(n)))]
    trials = []
    for kind in ("grevlex", "lex"):
        for p in perms:
            trials.append((f"{kind} priority={p}", MonomialOrder(kind, priority=p)))  # type: ignore[arg-type]
    return trials


def mu_upper_bound(I: PolyIdeal, trials: int = 8, seed: int = 0, budget: int = 24) -> Fraction:
    """Certified upper bound for mu(I): the smallest mu over a family of
    monomial degenerations (built-in orders, variable permutations, and
    seeded lower-triangular coordinate changes).

    Weakly decreasing in the number of trials; trials that fail the
    zero-dimensionality certificate are skipped.
    """
    details = mu_upper_bound_details(I, trials=trials, seed=seed, budget=budget)
    values = [mu for _, mu in details if mu is not None]
    if not values:
        raise NotZeroDimensionalError(
            "no degeneration trial certified a zero-dimensional content-free part"
        )
    return min(values)


def mu_upper_bound_details(
    I: PolyIdeal, trials: int = 8, seed: int = 0, budget: int = 24
) -> list[tuple[str, Fraction | None]]:
    """Per-trial mu values (None when the trial's certificate failed)."""
    from .polytope import compute_mu

    out: list[tuple[str, Fraction | None]] = []
    for label, order in _base_trials(I.n):
        try:
            J = tangent_cone_initial(I, order, budget)
            out.append((label, compute_mu(J).mu))
        except NotZeroDimensionalError:
            out.append((label, None))
    rng = random.Random(seed)
    order = default_order("grevlex", I.n)
    for t in range(trials):
        m = _shear_matrix(rng, I.n)
        label = f"shear[{t}] rows={m}"
        transformed = PolyIdeal(I.n, tuple(substitute_linear(g, m) for g in I.gens))
        try:
            J = tangent_cone_initial(transformed, order, budget)
            out.append((label, compute_mu(J).mu))
        except NotZeroDimensionalError:
            out.append((label, None))
    return out
