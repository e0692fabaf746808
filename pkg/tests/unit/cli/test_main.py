"""
Unit tests for the command-line entry point.
"""

import json
import sys
from unittest.mock import patch

import pytest

from src.cli.errors import EXIT_DEFECT, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK
from src.cli.formatters import dump_json
from src.cli.main import build_parser, main
from src.products.models import SetDescr
from src.utils.errors import ConstructionDefect

pytestmark = pytest.mark.usefixtures("restore_root_logging")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParser:
    """Test suite for argument parsing."""

    def test_subcommands(self):
        parser = build_parser()
        args = parser.parse_args(["square", "--q", "8", "--class", "ord:9", "--closed-form"])
        assert (args.command, args.q, args.selector, args.closed_form) == ("square", 8, "ord:9", True)
        assert args.format == "table"

    def test_missing_arguments(self, capsys):
        code, _, err = run(capsys, "square", "--q", "7")
        assert code == EXIT_INPUT
        assert "--class" in err

    def test_verify_needs_a_target(self, capsys):
        code, _, _ = run(capsys, "verify")
        assert code == EXIT_INPUT


class TestCommands:
    """Test suite for the individual subcommands."""

    def test_table1(self, capsys):
        code, out, _ = run(capsys, "table1", "--qmax", "9")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[0] == "q | unipotent | q-minimal good | q-minimal not good"
        assert "9 | 3 | 5 | 4" in lines
        assert "8 | 2 | 7, 9 |" in lines

    def test_classes(self, capsys):
        code, out, _ = run(capsys, "classes", "--q", "7", "--format", "json")
        document = json.loads(out)
        assert code == EXIT_OK
        assert document["field"] == {"p": 7, "e": 1, "defining_poly": [0, 1]}
        assert document["result"]["group_order"] == 168
        assert [c["selector"] for c in document["result"]["classes"]] == [
            "id", "unip:sq", "unip:nonsq", "tr:0", "tr:1", "tr:3",
        ]

    def test_square_closed_form_even_q(self, capsys):
        code, out, _ = run(capsys, "square", "--q", "8", "--class", "ord:9", "--closed-form", "--format", "json")
        result = json.loads(out)["result"]
        assert code == EXIT_OK
        assert result["closed_form"] == SetDescr.ALL_MINUS_UNIPOTENTS.value
        assert "unip" not in [c["selector"] for c in result["classes"]]
        assert result["element_total"] == 7 * 63

    def test_square_brute(self, capsys):
        code, out, _ = run(capsys, "square", "--q", "7", "--class", "unip:sq", "--format", "json")
        result = json.loads(out)["result"]
        assert code == EXIT_OK
        assert result["mode"] == "brute"
        assert result["element_total"] == 125

    def test_traces(self, capsys):
        code, out, _ = run(capsys, "traces", "--q", "7", "--n", "4", "--format", "csv")
        assert code == EXIT_OK
        assert out.splitlines()[1:] == ["trace", "3", "4"]

    def test_absent_pair(self, capsys):
        code, out, _ = run(capsys, "gen-pair", "--q", "9", "--class", "unip:sq", "--format", "json")
        result = json.loads(out)["result"]
        assert code == EXIT_OK
        assert result["present"] is False
        assert result["reason"]

    def test_pair(self, capsys):
        code, out, _ = run(capsys, "gen-pair", "--q", "7", "--class", "tr:3", "--format", "json")
        certificate = json.loads(out)["result"]["certificate"]
        assert code == EXIT_OK
        assert certificate["relation"] == "pair"
        assert certificate["closure_order"] == 168

    def test_triple_table(self, capsys):
        code, out, _ = run(capsys, "gen-triple", "--q", "7", "--class", "ord:4")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[1] == "role | matrix"
        assert [line.split(" | ")[0] for line in lines[2:]] == ["x", "y", "z"]

    def test_factor(self, capsys):
        code, out, _ = run(capsys, "factor", "--q", "7", "--elem", "3,6,1,0", "--format", "json")
        certificate = json.loads(out)["result"]["certificate"]
        assert code == EXIT_OK
        assert certificate["target"] == [3, 6, 1, 0]

    def test_factor_absent_involution(self, capsys):
        code, out, _ = run(capsys, "factor", "--q", "5", "--elem", "0,1,4,0", "--format", "json")
        result = json.loads(out)["result"]
        assert code == EXIT_OK
        assert result["present"] is False
        assert "PSL2(5)" in result["reason"]

    def test_factor_with_unipotent_fallback(self, capsys):
        code, out, _ = run(capsys, "factor", "--q", "5", "--elem", "1,1,4,0", "--format", "json")
        certificate = json.loads(out)["result"]["certificate"]
        assert code == EXIT_OK
        assert certificate["class_label"].startswith("unip")
        assert certificate["target"] == [1, 1, 4, 0]

    @pytest.mark.parametrize("q", [5, 7, 9])
    def test_verify(self, capsys, q):
        code, out, _ = run(capsys, "verify", "--q", str(q), "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)["result"]["all_match"] is True

    def test_verify_range(self, capsys):
        code, out, _ = run(capsys, "verify", "--all-q-upto", "5")
        assert code == EXIT_OK
        assert [line.split(" | ")[0] for line in out.splitlines()[1:]] == ["2", "3", "4", "5"]

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "classes.csv"
        code, out, _ = run(capsys, "classes", "--q", "5", "--format", "csv", "--out", str(target))
        assert code == EXIT_OK
        assert target.read_text(encoding="utf-8") == out


class TestExitCodes:
    """Test suite for error handling and exit codes."""

    def test_bad_selector(self, capsys):
        code, out, err = run(capsys, "square", "--q", "7", "--class", "tr:2")
        assert code == EXIT_INPUT
        assert out == ""
        assert "valid selectors:" in err

    def test_bad_selector_json(self, capsys):
        code, _, err = run(capsys, "gen-pair", "--q", "7", "--class", "nope", "--format", "json")
        body = json.loads(err.splitlines()[-1])
        assert code == EXIT_INPUT
        assert body["error_code"] == "INVALID_SELECTOR"
        assert "id" in body["details"]["valid_selectors"]

    @pytest.mark.parametrize("argv", [
        ["classes", "--q", "6"],
        ["factor", "--q", "7", "--elem", "1,2,3"],
        ["factor", "--q", "7", "--elem", "1,1,1,1"],
        ["factor", "--q", "7", "--elem", "a,b,c,d"],
        ["traces", "--q", "7", "--n", "1"],
    ])
    def test_malformed_input(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == EXIT_INPUT
        assert err.startswith("error [")

    def test_verification_mismatch(self, capsys):
        with patch("src.oracle.verification.class_square_closed", return_value=SetDescr.WHOLE_GROUP):
            code, _, _ = run(capsys, "verify", "--q", "7")
        assert code == EXIT_MISMATCH

    def test_construction_defect(self, capsys):
        cli_main = sys.modules["src.cli.main"]
        with patch.object(cli_main, "generating_pair_in_class", side_effect=ConstructionDefect("search failed")):
            code, _, err = run(capsys, "gen-pair", "--q", "7", "--class", "tr:3", "--format", "json")
        assert code == EXIT_DEFECT
        assert json.loads(err.splitlines()[-1])["error_code"] == "CONSTRUCTION_DEFECT"


class TestDeterminism:
    """Test suite for reproducible output."""

    @pytest.mark.parametrize("argv", [
        ["classes", "--q", "9"],
        ["gen-triple", "--q", "8", "--class", "ord:7"],
        ["square", "--q", "9", "--class", "unip:nonsq"],
    ])
    def test_repeated_runs(self, capsys, argv):
        first = run(capsys, *argv, "--format", "json")
        second = run(capsys, *argv, "--format", "json")
        assert first[:2] == second[:2]
        assert dump_json(json.loads(first[1])) == first[1]

    @pytest.mark.slow
    def test_full_verification_is_reproducible(self, capsys):
        first = run(capsys, "verify", "--all-q-upto", "27", "--seed", "1", "--format", "json")
        second = run(capsys, "verify", "--all-q-upto", "27", "--seed", "1", "--format", "json")
        assert first[0] == EXIT_OK
        assert first[1] == second[1]
