"""Deterministic CSV (RFC 4180), Markdown, and JSON rendering.

Floats are always formatted with %.12g so identical inputs give
byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json

__all__ = [
    "fmt",
    "table_csv",
    "table_markdown",
    "render_table",
    "reports_table",
    "reports_json",
]


def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def table_csv(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


def table_markdown(columns, rows) -> str:
    out = ["| " + " | ".join(columns) + " |",
           "| " + " | ".join("---" for _ in columns) + " |"]
    for row in rows:
        out.append("| " + " | ".join(fmt(v) for v in row) + " |")
    return "\n".join(out) + "\n"


def render_table(columns, rows, form: str) -> str:
    if form == "csv":
        return table_csv(columns, rows)
    if form == "md":
        return table_markdown(columns, rows)
    raise ValueError(f"unknown format {form!r}; use csv or md")


REPORT_COLUMNS = ("name", "lhs", "rhs", "slack", "holds")


def reports_table(reports, form: str) -> str:
    rows = [(r.name, r.lhs, r.rhs, r.slack, r.holds) for r in reports]
    return render_table(REPORT_COLUMNS, rows, form)


def reports_json(reports) -> str:
    return json.dumps([r.to_json_dict() for r in reports], indent=2)
