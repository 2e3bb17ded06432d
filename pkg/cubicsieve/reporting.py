"""
Report writers: JSON documents, CSV tables and aligned plain text.

Output depends only on the report content, so identical runs produce
byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel

Section = Tuple[str, List[Dict[str, Any]]]


def to_document(report: BaseModel | Dict[str, Any]) -> Dict[str, Any]:
    if isinstance(report, BaseModel):
        return report.model_dump(mode="json", by_alias=True)
    return report


def flatten(row: Dict[str, Any], prefix: str = "") -> Dict[str, Any]:
    """Nested mappings become prefix_key columns; lists are joined with ';'."""

    flat: Dict[str, Any] = {}
    for key, value in row.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(flatten(value, prefix=f"{name}_"))
        elif isinstance(value, (list, tuple)):
            flat[name] = ";".join(_cell(v) for v in value)
        else:
            flat[name] = _cell(value)
    return flat


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def render_json(document: Dict[str, Any]) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def render_csv(sections: Sequence[Section]) -> str:
    buffer = io.StringIO()
    for position, (_, rows) in enumerate(sections):
        if position:
            buffer.write("\n")
        flat = [flatten(row) for row in rows]
        if not flat:
            continue
        writer = csv.DictWriter(buffer, fieldnames=list(flat[0]), lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        writer.writerows(flat)
    return buffer.getvalue()


def render_plain(title: str, passed: Optional[bool], sections: Sequence[Section]) -> str:
    lines = [title]
    if passed is not None:
        lines.append(f"status: {'PASS' if passed else 'FAIL'}")
    for name, rows in sections:
        lines.append("")
        lines.append(f"[{name}]")
        flat = [flatten(row) for row in rows]
        if not flat:
            lines.append("(empty)")
            continue
        columns = list(flat[0])
        widths = {c: max(len(c), *(len(r.get(c, "")) for r in flat)) for c in columns}
        lines.append("  ".join(c.ljust(widths[c]) for c in columns).rstrip())
        for row in flat:
            lines.append("  ".join(row.get(c, "").ljust(widths[c]) for c in columns).rstrip())
    return "\n".join(lines) + "\n"


def render(
    fmt: str,
    title: str,
    document: Dict[str, Any],
    sections: Sequence[Section],
    passed: Optional[bool] = None,
) -> str:
    if fmt == "json":
        return render_json(document)
    if fmt == "csv":
        return render_csv(sections)
    if fmt == "plain":
        return render_plain(title, passed, sections)
    raise ValueError(f"Unknown output format: {fmt}")


def emit(text: str, out: Optional[Path] = None) -> None:
    """Write once, to ``out`` or stdout."""

    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
