"""
Output Formatting

Renders command results as JSON, CSV or pipe-separated text.

Design Considerations:
- JSON keys are sorted and the output contains no floats, so parsing and
  re-emitting reproduces the same bytes
- Field elements are enc integers; every format carries the (p, e,
  defining_poly) header needed to decode them
- Lists inside table and CSV cells are joined with ", "
"""

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

FORMATS = ("table", "json", "csv")


@dataclass
class CommandOutput:
    """
    Result of one command before formatting.

    Attributes:
        command: Subcommand name
        q: Field size, or None for multi-q commands
        header: Field description from FieldCtx.describe
        result: JSON-ready payload
        columns: Column order for table and CSV output
        rows: Flat rows for table and CSV output
        exit_code: Process exit code the command asks for
    """
    command: str
    q: Optional[int]
    header: Optional[Dict[str, Any]]
    result: Any
    columns: List[str] = field(default_factory=list)
    rows: List[Dict[str, Any]] = field(default_factory=list)
    exit_code: int = 0


def dump_json(value: Any) -> str:
    return json.dumps(value, sort_keys=True, indent=2) + "\n"


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return ", ".join(_cell(v) for v in value)
    return str(value)


def _header_line(output: CommandOutput) -> Optional[str]:
    if output.header is None:
        return None
    h = output.header
    return f"# q={output.q} p={h['p']} e={h['e']} defining_poly={h['defining_poly']}"


def render(output: CommandOutput, fmt: str) -> str:
    """Render a command output in one of FORMATS."""
    if fmt == "json":
        document = {"command": output.command, "q": output.q, "result": output.result}
        if output.header is not None:
            document["field"] = output.header
        return dump_json(document)

    lines = []
    header = _header_line(output)
    if fmt == "csv":
        buffer = io.StringIO()
        if header:
            buffer.write(header + "\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(output.columns)
        for row in output.rows:
            writer.writerow([_cell(row.get(column)) for column in output.columns])
        return buffer.getvalue()

    if header:
        lines.append(header)
    lines.append(" | ".join(output.columns).rstrip())
    for row in output.rows:
        lines.append(" | ".join(_cell(row.get(column)) for column in output.columns).rstrip())
    return "\n".join(lines) + "\n"
