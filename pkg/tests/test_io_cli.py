"""Ideal file format and the command-line surface."""

from __future__ import annotations

import dataclasses
import json

import pytest

from staircase import MonomialIdeal, ParseError, PolyIdeal
from staircase.cli import main
from staircase.ideal_io import (
    format_rational,
    ideal_to_document,
    parse_ideal_file,
    parse_ideal_text,
    parse_rational,
)

BOUNDARY_DOC = {"vars": 2, "kind": "monomial", "generators": [[6, 2], [0, 4]]}
POLY_DOC = {
    "vars": 2,
    "kind": "polynomial",
    "generators": [
        [{"coeff": "1", "exp": [6, 0]}],
        [{"coeff": "1", "exp": [0, 2]}, {"coeff": "1", "exp": [2, 1]}],
    ],
}


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestFormat:
    def test_monomial_parse(self):
        (J,) = parse_ideal_text(json.dumps({"vars": 2, "kind": "monomial", "generators": [[6, 0], [0, 2]]}))
        assert J == MonomialIdeal(2, [(6, 0), (0, 2)])

    def test_minimalized_on_load(self):
        (J,) = parse_ideal_text(json.dumps({"vars": 2, "kind": "monomial", "generators": [[2, 0], [2, 1], [0, 3]]}))
        assert J.gens == ((0, 3), (2, 0))

    def test_polynomial_parse(self):
        (I,) = parse_ideal_text(json.dumps(POLY_DOC))
        assert isinstance(I, PolyIdeal)
        assert {tuple(sorted(g.terms)) for g in I.gens} == {((6, 0),), ((0, 2), (2, 1))}

    def test_round_trip_is_stable(self):
        for doc in (BOUNDARY_DOC, POLY_DOC):
            (obj,) = parse_ideal_text(json.dumps(doc))
            canonical = ideal_to_document(obj)
            (again,) = parse_ideal_text(json.dumps(canonical))
            assert ideal_to_document(again) == canonical

    @pytest.mark.parametrize(
        "doc,fragment",
        [
            ("{not json", "invalid JSON"),
            ({"vars": 0, "kind": "monomial", "generators": [[0]]}, "vars"),
            ({"vars": 2, "kind": "monomial", "generators": []}, "zero ideal"),
            ({"vars": 2, "kind": "monomial", "generators": [[1, -2]]}, "nonnegative"),
            ({"vars": 2, "kind": "monomial", "generators": [[1]]}, "expected 2"),
            ({"vars": 2, "kind": "other", "generators": [[1, 0]]}, "kind"),
            (
                {"vars": 2, "kind": "polynomial", "generators": [[{"coeff": "0", "exp": [1, 0]}]]},
                "zero coefficients",
            ),
            (
                {"vars": 1, "kind": "polynomial", "generators": [[{"coeff": "1/0", "exp": [1]}]]},
                "bad rational",
            ),
        ],
    )
    def test_parse_errors(self, doc, fragment):
        text = doc if isinstance(doc, str) else json.dumps(doc)
        with pytest.raises(ParseError) as err:
            parse_ideal_text(text)
        assert fragment in str(err.value)

    def test_rational_formatting(self):
        from fractions import Fraction

        assert format_rational(Fraction(3, 2)) == "3/2"
        assert format_rational(Fraction(-4, 2)) == "-2"
        assert parse_rational("7/3") == Fraction(7, 3)


class TestCli:
    @pytest.fixture
    def boundary_file(self, tmp_path):
        path = tmp_path / "ideal.json"
        path.write_text(json.dumps(BOUNDARY_DOC))
        return str(path)

    @pytest.fixture
    def simple_file(self, tmp_path):
        path = tmp_path / "simple.json"
        path.write_text(json.dumps({"vars": 2, "kind": "monomial", "generators": [[6, 0], [0, 2]]}))
        return str(path)

    @pytest.fixture
    def poly_file(self, tmp_path):
        path = tmp_path / "poly.json"
        doc = {
            "vars": 2,
            "kind": "polynomial",
            "generators": [
                [{"coeff": "1", "exp": [6, 2]}],
                [{"coeff": "1", "exp": [0, 4]}, {"coeff": "1", "exp": [2, 3]}],
            ],
        }
        path.write_text(json.dumps(doc))
        return str(path)

    def test_lct(self, capsys, simple_file):
        code, out, _ = run_cli(capsys, "lct", "--input", simple_file)
        assert code == 0
        doc = json.loads(out)
        assert doc["reports"][0]["mu"] == "3/2"
        assert doc["reports"][0]["lct"] == "2/3"

    def test_length_and_mult(self, capsys, simple_file):
        code, out, _ = run_cli(capsys, "length", "--input", simple_file)
        assert code == 0 and json.loads(out)["reports"][0]["length"] == 12
        code, out, _ = run_cli(capsys, "mult", "--input", simple_file, "--t-max", "2")
        doc = json.loads(out)
        assert doc["reports"][0]["multiplicity"] == "12"
        assert doc["reports"][0]["limit_sequence"] == ["24", "18"]

    def test_polytope_rows(self, capsys, simple_file):
        code, out, _ = run_cli(capsys, "polytope", "--input", simple_file, "--format", "tsv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].split("\t")[:3] == ["ideal", "coefficients", "rhs"]
        assert len(lines) == 4  # header + three facets

    def test_closure(self, capsys, simple_file):
        code, out, _ = run_cli(capsys, "closure", "--input", simple_file)
        doc = json.loads(out)
        assert doc["reports"][0]["closure"] == [[0, 2], [3, 1], [6, 0]]
        assert doc["reports"][0]["closure_power_q"] is None

    def test_codim2_boundary_example(self, capsys, boundary_file):
        code, out, _ = run_cli(capsys, "codim2", "--input", boundary_file)
        assert code == 0
        rep = json.loads(out)["reports"][0]
        assert rep["mu"] == "3"
        assert rep["sharp_bound_lhs"] == "36" == rep["sharp_bound_rhs"]
        assert rep["sharp_equality"] is True
        assert rep["boundary_closure_ok"] is True

    def test_verify_seeded_deterministic(self, capsys):
        code1, out1, _ = run_cli(capsys, "verify", "--seed", "7", "--count", "25", "--dim", "3")
        code2, out2, _ = run_cli(capsys, "verify", "--seed", "7", "--count", "25", "--dim", "3")
        assert code1 == code2 == 0
        assert out1 == out2
        doc = json.loads(out1)
        assert doc["failed"] == 0 and len(doc["reports"]) == 25

    def test_verify_one_variable_corpus_exits_clean(self, capsys):
        # one-variable pure powers sit exactly on the bounds; the checker
        # treats those equalities as correct values, not violations
        code, out, _ = run_cli(capsys, "verify", "--seed", "2", "--count", "10", "--dim", "1")
        assert code == 0
        doc = json.loads(out)
        assert doc["failed"] == 0
        assert all(r["length_volume_slack"] == "0" for r in doc["reports"])

    def test_tsv_and_json_share_values(self, capsys):
        _, json_out, _ = run_cli(capsys, "verify", "--seed", "3", "--count", "5", "--dim", "2")
        _, tsv_out, _ = run_cli(capsys, "verify", "--seed", "3", "--count", "5", "--dim", "2", "--format", "tsv")
        doc = json.loads(json_out)
        lines = tsv_out.strip().splitlines()
        header = lines[0].split("\t")
        for rep, line in zip(doc["reports"], lines[1:]):
            row = dict(zip(header, line.split("\t")))
            assert row["mu"] == rep["mu"]
            assert row["covolume"] == rep["covolume"]
            assert row["length_volume_slack"] == rep["length_volume_slack"]

    def test_degenerate_with_monomial_factor(self, capsys, poly_file):
        code, out, _ = run_cli(capsys, "degenerate", "--input", poly_file)
        assert code == 0
        rep = json.loads(out)["reports"][0]
        assert rep["tangent_cone_initial"] == [[0, 4], [6, 2]]
        assert rep["length"] is None  # the ideal has a monomial factor, infinite length

    def test_degenerate_zero_dimensional(self, capsys, tmp_path):
        doc = {
            "vars": 2,
            "kind": "polynomial",
            "generators": [
                [{"coeff": "1", "exp": [6, 0]}],
                [{"coeff": "1", "exp": [0, 2]}, {"coeff": "1", "exp": [2, 1]}],
            ],
        }
        path = tmp_path / "prim.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run_cli(capsys, "degenerate", "--input", str(path))
        assert code == 0
        rep = json.loads(out)["reports"][0]
        assert rep["tangent_cone_initial"] == [[0, 2], [6, 0]]
        assert rep["length"] == {"l_orig": 12, "l_initial": 12, "equal": True}

    def test_mu_bound(self, capsys, poly_file):
        code, out, _ = run_cli(capsys, "mu-bound", "--input", poly_file, "--trials", "4")
        assert code == 0
        rep = json.loads(out)["reports"][0]
        assert rep["mu_upper_bound"] == "3"
        assert any(t["mu"] == "3" for t in rep["trials"])

    def test_gen_corpus_feeds_verify(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "gen-corpus", "--seed", "11", "--count", "6", "--dim", "2")
        assert code == 0
        corpus = tmp_path / "corpus.json"
        corpus.write_text(out)
        assert len(parse_ideal_file(corpus)) == 6
        code, out, _ = run_cli(capsys, "verify", "--input", str(corpus))
        assert code == 0
        assert len(json.loads(out)["reports"]) == 6

    def test_gen_corpus_rejects_tsv(self, capsys):
        code, _, err = run_cli(capsys, "gen-corpus", "--count", "2", "--format", "tsv")
        assert code == 2 and "JSON" in err

    def test_parse_error_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{broken")
        code, _, err = run_cli(capsys, "lct", "--input", str(bad))
        assert code == 2 and "invalid JSON" in err

    def test_missing_input_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "lct")
        assert code == 2 and "--input" in err

    def test_unknown_command_exits_2(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_theorem_violation_exits_1(self, capsys, monkeypatch):
        # doctor a report so the checker sees a violation: exit 1 plus a
        # counterexample dump is the contract
        from staircase import verify_zero_dim as real_verify

        def doctored(J, *, fatal=True):
            report = real_verify(J, fatal=False)
            return dataclasses.replace(report, mult_diagonal_rhs=report.mult_diagonal_lhs + 1)

        monkeypatch.setattr("staircase.cli.verify_zero_dim", doctored)
        code, out, _ = run_cli(capsys, "verify", "--seed", "1", "--count", "3", "--dim", "2")
        assert code == 1
        doc = json.loads(out)
        assert doc["failed"] == 3
        assert all("mult_diagonal" in r["violations"] for r in doc["reports"])
