"""The on-disk ideal format: a small JSON document.

Monomial kind:

    {"vars": 2, "kind": "monomial", "generators": [[6, 0], [0, 2]]}

Polynomial kind (coefficients are nonzero rationals as "p/q" or "p" strings):

    {"vars": 2, "kind": "polynomial",
     "generators": [[{"coeff": "1", "exp": [6, 0]}],
                    [{"coeff": "1", "exp": [0, 2]}, {"coeff": "1", "exp": [2, 1]}]]}

A corpus document bundles several ideals: {"kind": "corpus", "items": [...]}.
Parsing canonicalizes (monomial generators are minimalized, polynomial terms
sorted), so parse -> serialize is idempotent.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .ideals import MonomialIdeal
from .polynomials import PolyIdeal, RationalPolynomial


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s, context: str = "value") -> Fraction:
    if isinstance(s, bool):
        raise ParseError("expected a rational, got a boolean", context)
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ParseError(f"expected a rational string, got {type(s).__name__}", context)
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {s!r}: {exc}", context) from None


def _expect_exponents(raw, nvars: int, context: str) -> tuple[int, ...]:
    if not isinstance(raw, list):
        raise ParseError("exponent vector must be a list", context)
    if len(raw) != nvars:
        raise ParseError(f"exponent vector has {len(raw)} entries, expected {nvars}", context)
    out = []
    for i, v in enumerate(raw):
        if not isinstance(v, int) or isinstance(v, bool):
            raise ParseError(f"exponent must be an integer, got {v!r}", f"{context}[{i}]")
        if v < 0:
            raise ParseError(f"exponent must be nonnegative, got {v}", f"{context}[{i}]")
        out.append(v)
    return tuple(out)


def document_to_ideal(doc, context: str = "$") -> MonomialIdeal | PolyIdeal:
    if not isinstance(doc, dict):
        raise ParseError("ideal document must be a JSON object", context)
    nvars = doc.get("vars")
    if not isinstance(nvars, int) or isinstance(nvars, bool) or nvars < 1:
        raise ParseError(f"'vars' must be a positive integer, got {nvars!r}", f"{context}.vars")
    kind = doc.get("kind")
    gens = doc.get("generators")
    if not isinstance(gens, list) or not gens:
        raise ParseError("'generators' must be a nonempty list (the zero ideal is not allowed)", f"{context}.generators")
    if kind == "monomial":
        exps = [
            _expect_exponents(g, nvars, f"{context}.generators[{i}]") for i, g in enumerate(gens)
        ]
        return MonomialIdeal(nvars, tuple(exps))
    if kind == "polynomial":
        polys = []
        for i, terms in enumerate(gens):
            gctx = f"{context}.generators[{i}]"
            if not isinstance(terms, list) or not terms:
                raise ParseError("polynomial generator must be a nonempty term list", gctx)
            acc: dict[tuple[int, ...], Fraction] = {}
            for j, term in enumerate(terms):
                tctx = f"{gctx}[{j}]"
                if not isinstance(term, dict) or set(term) != {"coeff", "exp"}:
                    raise ParseError("term must be an object with 'coeff' and 'exp'", tctx)
                coeff = parse_rational(term["coeff"], f"{tctx}.coeff")
                if coeff == 0:
                    raise ParseError("zero coefficients are not allowed", f"{tctx}.coeff")
                exp = _expect_exponents(term["exp"], nvars, f"{tctx}.exp")
                acc[exp] = acc.get(exp, Fraction(0)) + coeff
            poly = RationalPolynomial(nvars, acc)
            if poly.is_zero:
                raise ParseError("generator terms cancel to the zero polynomial", gctx)
            polys.append(poly)
        return PolyIdeal(nvars, tuple(polys))
    raise ParseError(f"'kind' must be 'monomial' or 'polynomial', got {kind!r}", f"{context}.kind")


def ideal_to_document(obj: MonomialIdeal | PolyIdeal) -> dict:
    if isinstance(obj, MonomialIdeal):
        return {"vars": obj.n, "kind": "monomial", "generators": [list(g) for g in obj.gens]}
    return {
        "vars": obj.n,
        "kind": "polynomial",
        "generators": [
            [{"coeff": format_rational(c), "exp": list(e)} for e, c in g.sorted_terms()]
            for g in obj.gens
        ],
    }


def corpus_to_document(ideals) -> dict:
    return {"kind": "corpus", "items": [ideal_to_document(J) for J in ideals]}


def parse_ideal_text(text: str, context: str = "$") -> list[MonomialIdeal | PolyIdeal]:
    """Parse a single-ideal or corpus document; always returns a list."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno}, column {exc.colno}") from None
    if isinstance(doc, dict) and doc.get("kind") == "corpus":
        items = doc.get("items")
        if not isinstance(items, list) or not items:
            raise ParseError("'items' must be a nonempty list", f"{context}.items")
        return [document_to_ideal(item, f"{context}.items[{i}]") for i, item in enumerate(items)]
    return [document_to_ideal(doc, context)]


def parse_ideal_file(path: str | Path) -> list[MonomialIdeal | PolyIdeal]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(str(exc), str(path)) from None
    return parse_ideal_text(text, context=str(path))
