"""Text and JSON rendering of report records."""
from __future__ import annotations

import json

REPORT_VERSION = "1"

_FIELD = {"type": ["string", "null"]}
RECORD_SCHEMA = {
    "type": "object",
    "required": ["fixture", "check", "status", "ok", "witness", "certificate", "values",
                 "seed", "bounds", "timing", "error"],
    "properties": {
        "fixture": {"type": "string"},
        "check": {"type": "string"},
        "status": {"type": "string"},
        "ok": {"type": "boolean"},
        "line": {"type": "integer"},
        "witness": {"type": ["object", "null"]},
        "certificate": {"type": ["object", "null"]},
        "values": {"type": "object"},
        "seed": {"type": "integer"},
        "bounds": {"type": "object", "additionalProperties": {"type": "integer"}},
        "timing": {"type": "number", "minimum": 0},
        "error": _FIELD,
    },
    "additionalProperties": False,
}
REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["version", "fixtures", "records"],
    "properties": {
        "version": {"type": "string"},
        "fixtures": {"type": "array", "items": {"type": "string"}},
        "records": {"type": "array", "items": RECORD_SCHEMA},
    },
    "additionalProperties": False,
}


def report_object(records, fixtures=None):
    if fixtures is None:
        fixtures = list(dict.fromkeys(r.fixture for r in records))
    return {"version": REPORT_VERSION, "fixtures": list(fixtures),
            "records": [r.to_json() for r in records]}


def emit_json(records, fixtures=None):
    return json.dumps(report_object(records, fixtures), indent=2, sort_keys=True) + "\n"


def emit_text(records):
    rows = [("fixture", "check", "status", "result")]
    for r in records:
        result = "ok" if r.ok else ("error" if r.error else "FAIL")
        rows.append((r.fixture, r.check, r.status, result))
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    for r in records:
        if r.error:
            lines.append(f"{r.fixture}:{r.line}: {r.check}: {r.error}")
    return "\n".join(lines) + "\n"


def emit_report(records, fmt="text", fixtures=None):
    """The report as bytes (UTF-8)."""
    if fmt == "json":
        return emit_json(records, fixtures).encode()
    if fmt == "text":
        return emit_text(records).encode()
    raise ValueError(f"unknown report format {fmt!r}")
