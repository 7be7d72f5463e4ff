"""Report documents: deterministic JSON and flat TSV with exact rationals.

Every rational is serialized as "p/q" (or "p" for integers) in both formats,
never as a float, so equalities in the reports are bit-exact.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .ideal_io import format_rational
from .invariants import Codim2Report, ZeroDimReport

SCHEMA_VERSION = 1
TOOL_NAME = "staircase"


def _gens_compact(ideal) -> str:
    return ";".join(",".join(str(c) for c in g) for g in ideal.gens)


def zero_dim_report_dict(r: ZeroDimReport) -> dict:
    return {
        "ideal": _gens_compact(r.ideal),
        "n": r.n,
        "mu": format_rational(r.mu),
        "lct": format_rational(1 / r.mu) if r.mu else None,
        "length": r.length,
        "covolume": format_rational(r.covol),
        "multiplicity": format_rational(r.mult),
        "length_volume_lhs": format_rational(r.length_volume_lhs),
        "length_volume_rhs": format_rational(r.length_volume_rhs),
        "length_volume_slack": format_rational(r.length_volume_lhs - r.length_volume_rhs),
        "length_diagonal_lhs": format_rational(r.length_diagonal_lhs),
        "length_diagonal_rhs": format_rational(r.length_diagonal_rhs),
        "length_diagonal_slack": format_rational(r.length_diagonal_lhs - r.length_diagonal_rhs),
        "mult_diagonal_lhs": format_rational(r.mult_diagonal_lhs),
        "mult_diagonal_rhs": format_rational(r.mult_diagonal_rhs),
        "mult_diagonal_slack": format_rational(r.mult_diagonal_lhs - r.mult_diagonal_rhs),
        "closure_equality": r.closure_equality,
        "closure_power_q": r.closure_power_q,
        "violations": list(r.violations()),
    }


def codim2_report_dict(r: Codim2Report) -> dict:
    return {
        "ideal": _gens_compact(r.ideal),
        "b1": r.b1,
        "b2": r.b2,
        "b_vector": ",".join(str(c) for c in r.b_vector),
        "factor_mult": r.factor_mult,
        "mu": format_rational(r.mu),
        "primitive_length": r.primitive_length,
        "primitive_mult": format_rational(r.primitive_mult),
        "primitive_length_lhs": format_rational(r.primitive_length_lhs),
        "primitive_length_rhs": format_rational(r.primitive_length_rhs),
        "primitive_length_slack": format_rational(r.primitive_length_lhs - r.primitive_length_rhs),
        "mult_bound_lhs": format_rational(r.mult_bound_lhs),
        "mult_bound_rhs": format_rational(r.mult_bound_rhs),
        "mult_bound_slack": format_rational(r.mult_bound_lhs - r.mult_bound_rhs),
        "sharp_bound_lhs": format_rational(r.sharp_bound_lhs),
        "sharp_bound_rhs": format_rational(r.sharp_bound_rhs),
        "sharp_bound_slack": format_rational(r.sharp_bound_lhs - r.sharp_bound_rhs),
        "sharp_equality": r.sharp_equality,
        "boundary_closure_ok": r.boundary_closure_ok,
        "violations": list(r.violations()),
    }


def make_document(command: str, input_echo, reports: list[dict], version: str, extra: dict | None = None) -> dict:
    doc = {
        "tool": TOOL_NAME,
        "version": version,
        "schema": SCHEMA_VERSION,
        "command": command,
        "input": input_echo,
    }
    if extra:
        doc.update(extra)
    doc["reports"] = reports
    return doc


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _tsv_cell(value, sep: str = ";") -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        inner = "," if sep == ";" else ";"
        return sep.join(_tsv_cell(v, inner) for v in value)
    if isinstance(value, dict):
        return ";".join(f"{k}={_tsv_cell(v, ',')}" for k, v in value.items())
    return str(value)


def render_tsv(doc: dict) -> str:
    reports = doc.get("reports", [])
    if not reports:
        return ""
    header = list(reports[0].keys())
    lines = ["\t".join(header)]
    for r in reports:
        lines.append("\t".join(_tsv_cell(r.get(k)) for k in header))
    return "\n".join(lines) + "\n"
