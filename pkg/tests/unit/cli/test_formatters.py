"""
Unit tests for command output rendering.
"""

import json

import pytest

from src.cli.formatters import CommandOutput, dump_json, render


@pytest.fixture
def output():
    return CommandOutput(
        command="square",
        q=9,
        header={"p": 3, "e": 2, "defining_poly": [1, 0, 1]},
        result={"class": "tr:0", "element_total": 360},
        columns=["selector", "present", "matrix"],
        rows=[
            {"selector": "tr:0", "present": True, "matrix": [0, 2, 1, 0]},
            {"selector": "unip:sq", "present": False, "matrix": None},
        ],
    )


class TestRender:
    """Test suite for table, CSV and JSON output."""

    def test_table(self, output):
        assert render(output, "table").splitlines() == [
            "# q=9 p=3 e=2 defining_poly=[1, 0, 1]",
            "selector | present | matrix",
            "tr:0 | yes | 0, 2, 1, 0",
            "unip:sq | no |",
        ]

    def test_csv(self, output):
        lines = render(output, "csv").splitlines()
        assert lines[0] == "# q=9 p=3 e=2 defining_poly=[1, 0, 1]"
        assert lines[1] == "selector,present,matrix"
        assert lines[2] == 'tr:0,yes,"0, 2, 1, 0"'
        assert lines[3] == "unip:sq,no,"

    def test_json(self, output):
        document = json.loads(render(output, "json"))
        assert document == {
            "command": "square",
            "q": 9,
            "field": {"p": 3, "e": 2, "defining_poly": [1, 0, 1]},
            "result": {"class": "tr:0", "element_total": 360},
        }

    def test_json_reemits_identically(self, output):
        text = render(output, "json")
        assert dump_json(json.loads(text)) == text

    def test_no_header(self):
        plain = CommandOutput(command="table1", q=None, header=None, result=[], columns=["q"], rows=[{"q": 2}])
        assert render(plain, "table") == "q\n2\n"
        assert "field" not in json.loads(render(plain, "json"))
