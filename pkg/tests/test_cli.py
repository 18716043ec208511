"""CLI behaviour: documents, pipelines, exit codes, exact round trips."""

from __future__ import annotations

import io
import json
from fractions import Fraction

import pytest

from charclass.cli import InputError, parse_input, run_command

VERONESE_DOC = json.dumps(
    {
        "kind": "threefold",
        "chern_data": {
            "d": "8", "xi1": "16", "xi2": "32", "xi01": "12",
            "xi3": "64", "xi11": "24", "xi001": "4",
        },
    }
)

ROMAN_DOC = json.dumps(
    {"kind": "surface", "chern_data": {"d": "4", "xi1": "6", "xi2": "9", "xi01": "3"}}
)


def run(argv, stdin_text=""):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, stdin=io.StringIO(stdin_text), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


class TestParseInput:
    def test_veronese_document(self):
        doc = parse_input(VERONESE_DOC)
        assert doc.kind == "threefold"
        assert doc.chern_data["xi11"] == Fraction(24)

    def test_symbolic_document(self):
        doc = parse_input('{"kind":"surface","chern_data":"symbolic"}')
        assert doc.chern_data == "symbolic"
        assert not doc.to_context().is_numeric()

    def test_missing_keys_listed(self):
        with pytest.raises(InputError, match="missing keys: xi1, xi2, xi01"):
            parse_input('{"kind":"surface","chern_data":{"d":"4"}}')

    def test_malformed_rational(self):
        with pytest.raises(InputError, match=r"\$\.chern_data\.xi1"):
            parse_input(
                '{"kind":"surface","chern_data":{"d":"4","xi1":"6.5","xi2":"9","xi01":"3"}}'
            )

    def test_floats_rejected(self):
        with pytest.raises(InputError, match="strings"):
            parse_input(
                '{"kind":"surface","chern_data":{"d":4,"xi1":"6","xi2":"9","xi01":"3"}}'
            )

    def test_unknown_kind(self):
        with pytest.raises(InputError, match=r"\$\.kind"):
            parse_input('{"kind":"fourfold","chern_data":"symbolic"}')

    def test_bad_json_position(self):
        with pytest.raises(InputError, match="line 1 column"):
            parse_input("{nope}")


class TestPipelines:
    def test_preset_into_threefold(self):
        code, preset_out, _ = run(["preset", "veronese-p3"])
        assert code == 0
        code, out, _ = run(["threefold", "--json"], stdin_text=preset_out)
        assert code == 0
        result = json.loads(out)
        chars = result["characters"]
        assert chars["mu0"] == "20" and chars["t"] == "20"
        assert chars["gamma"] == "20" and chars["q"] == "5"
        assert chars["s_t"] == "40" and chars["chi_C"] == "-20"
        assert chars["m3"] == "4"
        assert all(c["passed"] for c in result["diagnostics"])

    def test_json_round_trips_exactly(self):
        code, out, _ = run(["surface", "--json"], stdin_text=ROMAN_DOC)
        assert code == 0
        result = json.loads(out)
        echoed = result["input"]["chern_data"]
        assert {k: Fraction(v) for k, v in echoed.items()} == {
            "d": 4, "xi1": 6, "xi2": 9, "xi01": 3,
        }
        assert Fraction(result["characters"]["eps0"]) == 3
        assert Fraction(result["characters"]["chi_double_curve"]) == 4

    def test_human_readable_table(self):
        code, out, _ = run(["surface"], stdin_text=ROMAN_DOC)
        assert code == 0
        assert "eps0" in out and "diagnostics:" in out

    def test_symbolic_surface_output(self):
        code, out, _ = run(
            ["surface", "--json"],
            stdin_text='{"kind":"surface","chern_data":"symbolic"}',
        )
        assert code == 0
        chars = json.loads(out)["characters"]
        assert chars["C"] == "6*d - xi01 - 4*xi1 + xi2"

    def test_input_file(self, tmp_path):
        path = tmp_path / "doc.json"
        path.write_text(ROMAN_DOC)
        code, out, _ = run(["surface", "--input", str(path)])
        assert code == 0

    def test_kind_command_mismatch(self):
        code, _, err = run(["threefold"], stdin_text=ROMAN_DOC)
        assert code == 2 and "kind" in err


class TestInvert:
    def test_surface(self):
        doc = '{"kind":"surface","characters":{"d":"4","eps0":"3","C":"6","T":"1"}}'
        code, out, _ = run(["invert", "--kind", "surface", "--json"], stdin_text=doc)
        assert code == 0
        table = json.loads(out)["chern_data"]
        assert table == {"d": "4", "xi1": "6", "xi2": "9", "xi01": "3"}

    def test_threefold(self):
        doc = json.dumps(
            {"kind": "threefold", "characters": {
                "d": "8", "mu0": "20", "t": "20", "q": "5",
                "s_t": "40", "gamma": "20", "chi_C": "-20"}}
        )
        code, out, _ = run(["invert", "--kind", "threefold", "--json"], stdin_text=doc)
        assert code == 0
        table = json.loads(out)["chern_data"]
        assert table["xi3"] == "64" and table["xi001"] == "4"

    def test_missing_character(self):
        doc = '{"kind":"surface","characters":{"d":"4"}}'
        code, _, err = run(["invert", "--kind", "surface"], stdin_text=doc)
        assert code == 2 and "missing keys" in err


class TestVerify:
    def test_all_suites_pass(self):
        code, out, _ = run(["verify", "--suite", "all"])
        assert code == 0
        assert "checks passed" in out
        assert "FAIL" not in out

    def test_tables_suite(self):
        code, out, _ = run(["verify", "--suite", "tables"])
        assert code == 0 and "tables/golden" in out

    def test_json_mode(self):
        code, out, _ = run(["verify", "--suite", "surface", "--json"])
        assert code == 0
        checks = json.loads(out)
        assert checks and all(c["passed"] for c in checks)


class TestDerive:
    def test_triple_point_polynomial(self):
        code, out, _ = run(["derive", "--kind", "surface", "--character", "T", "--json"])
        assert code == 0
        doc = json.loads(out)
        # equals (44d - 12d^2 + d^3 + (3d-24)xi1 + 4xi2 - 2xi01)/6
        from charclass.algebra import parse, degree_symbol, xi_scalar

        d, x1, x2, x01 = (degree_symbol(), xi_scalar((1,)), xi_scalar((2,)), xi_scalar((0, 1)))
        expected = (44 * d - 12 * d ** 2 + d ** 3 + (3 * d - 24) * x1 + 4 * x2 - 2 * x01) / 6
        assert parse(doc["polynomial"]) == expected
        assert doc["provenance"]

    def test_threefold_character(self):
        code, out, _ = run(["derive", "--kind", "threefold", "--character", "K_dot_S"])
        assert code == 0 and "K_dot_S = " in out

    def test_unknown_character(self):
        code, _, err = run(["derive", "--kind", "surface", "--character", "nope"])
        assert code == 2 and "unknown character" in err


class TestPreset:
    def test_listing(self):
        code, out, _ = run(["preset"])
        assert code == 0
        for name in ["roman-surface", "veronese-p3", "smooth-surface", "smooth-threefold"]:
            assert name in out

    def test_smooth_with_degree(self):
        code, out, _ = run(["preset", "smooth-surface", "--degree", "5"])
        assert code == 0
        doc = json.loads(out)
        assert doc["chern_data"]["xi1"] == "-5"

    def test_degree_required(self):
        code, _, err = run(["preset", "smooth-surface"])
        assert code == 2 and "--degree" in err

    def test_unknown(self):
        code, _, err = run(["preset", "moebius"])
        assert code == 2 and "unknown preset" in err


class TestExitCodes:
    def test_parse_error_is_2(self):
        code, _, err = run(["surface"], stdin_text="not json")
        assert code == 2 and "error:" in err

    def test_verification_failure_is_1(self):
        # non-geometric input: xi1 odd makes the double-curve degree a half
        # integer, which the integrality diagnostics flag
        doc = '{"kind":"surface","chern_data":{"d":"4","xi1":"7","xi2":"9","xi01":"3"}}'
        code, out, _ = run(["surface"], stdin_text=doc)
        assert code == 1
        assert "integrality" in out

    def test_bad_flag_is_2(self):
        code, _, _ = run(["surface", "--bogus"])
        assert code == 2
