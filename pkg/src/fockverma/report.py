"""Machine-readable run reports emitted by the command line tool.

Outputs are plain JSON-compatible structures whose numbers are already
``p/q`` strings. The text and CSV renderers walk the same structure, so all
three formats carry identical numeric content.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class Check:
    name: str
    passed: bool
    witness: Optional[str] = None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class RunReport:
    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    outputs: dict[str, Any] = field(default_factory=dict)

    def check(self, name: str, passed: bool, witness: Optional[str] = None) -> bool:
        self.checks.append(Check(name, bool(passed), witness))
        return bool(passed)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "status": "pass" if self.ok else "fail",
            "checks": [c.to_json() for c in self.checks],
            "outputs": self.outputs,
        }

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"
        if fmt == "csv":
            return _render_csv(self)
        if fmt == "text":
            return _render_text(self)
        raise ValueError(f"unknown format {fmt!r}")


def _is_matrix(node: Any) -> bool:
    return isinstance(node, dict) and "entries" in node and isinstance(node["entries"], list)


def _labels(node: dict, key: str, n: int) -> list[str]:
    labels = node.get(key)
    if labels is None:
        return [str(i) for i in range(n)]
    return [str(x) for x in labels]


def _matrix_labels(node: dict) -> list[str]:
    for key in ("basis", "levels"):
        if key in node:
            return _labels(node, key, len(node["entries"]))
    return _labels(node, "", len(node["entries"]))


def _flatten(node: Any, path: str, rows: list[list[str]]) -> None:
    if _is_matrix(node):
        labels = _matrix_labels(node)
        for key, value in node.items():
            if key not in ("entries", "basis", "levels"):
                _flatten(value, f"{path}.{key}", rows)
        for r, row in enumerate(node["entries"]):
            for c, value in enumerate(row):
                rows.append([path, labels[r], labels[c], str(value)])
    elif isinstance(node, dict):
        for key, value in node.items():
            _flatten(value, f"{path}.{key}" if path else key, rows)
    elif isinstance(node, list):
        for i, value in enumerate(node):
            _flatten(value, f"{path}[{i}]", rows)
    else:
        rows.append([path, "", "", "" if node is None else str(node)])


def _render_csv(report: RunReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["section", "row", "col", "value"])
    for c in report.checks:
        writer.writerow([f"check.{c.name}", "", "", c.status])
        if c.witness:
            writer.writerow([f"check.{c.name}.witness", "", "", c.witness])
    rows: list[list[str]] = []
    _flatten(report.outputs, "", rows)
    writer.writerows(rows)
    return buf.getvalue()


def _text_matrix(node: dict, indent: str) -> list[str]:
    labels = _matrix_labels(node)
    entries = [[str(v) for v in row] for row in node["entries"]]
    width = max([len(s) for s in labels] + [len(v) for row in entries for v in row] + [1])
    lines = [indent + " " * (width + 3) + " ".join(s.rjust(width) for s in labels)]
    for label, row in zip(labels, entries):
        lines.append(indent + label.rjust(width) + " | " + " ".join(v.rjust(width) for v in row))
    return lines


def _text_node(node: Any, indent: str, lines: list[str], key: Optional[str] = None) -> None:
    prefix = f"{indent}{key}:" if key is not None else indent.rstrip() or ""
    if _is_matrix(node):
        if key is not None:
            lines.append(prefix)
        for k, v in node.items():
            if k not in ("entries", "basis", "levels"):
                _text_node(v, indent + "  ", lines, k)
        lines.extend(_text_matrix(node, indent + "  "))
    elif isinstance(node, dict):
        if key is not None:
            lines.append(prefix)
        for k, v in node.items():
            _text_node(v, indent + "  ", lines, k)
    elif isinstance(node, list) and any(isinstance(v, (dict, list)) for v in node):
        if key is not None:
            lines.append(prefix)
        for v in node:
            lines.append(indent + "  -")
            _text_node(v, indent + "  ", lines)
    elif isinstance(node, list):
        lines.append(f"{prefix} " + ", ".join(str(v) for v in node))
    else:
        lines.append(f"{prefix} {node}")


def _render_text(report: RunReport) -> str:
    lines = [f"command: {report.command}"]
    for k, v in report.parameters.items():
        shown = ", ".join(str(x) for x in v) if isinstance(v, list) else v
        lines.append(f"  {k} = {shown}")
    lines.append("checks:")
    for c in report.checks:
        w = f"  ({c.witness})" if c.witness else ""
        lines.append(f"  [{c.status.upper()}] {c.name}{w}")
    if report.outputs:
        lines.append("outputs:")
        for k, v in report.outputs.items():
            _text_node(v, "  ", lines, k)
    lines.append(f"status: {'pass' if report.ok else 'fail'}")
    return "\n".join(lines) + "\n"
