"""Machine-readable run reports shared by every CLI command.

Reports are deterministic: identical inputs, parameters, and seed produce
byte-identical JSON.  Wall-clock timing is therefore excluded unless the
caller explicitly opts in.
"""

from __future__ import annotations

import hashlib
import json

from . import __version__

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "colorbias run report",
    "type": "object",
    "required": ["command", "input_digest", "parameters", "results", "version"],
    "properties": {
        "command": {"type": "string"},
        "input_digest": {"type": ["string", "null"], "pattern": "^[0-9a-f]{64}$"},
        "parameters": {"type": "object"},
        "results": {"type": "object"},
        "version": {"type": "string"},
        "timing_seconds": {"type": "number"},
    },
    "additionalProperties": False,
}


def digest_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def make_report(
    command: str,
    input_digest: str | None,
    parameters: dict,
    results: dict,
    timing_seconds: float | None = None,
) -> dict:
    report = {
        "command": command,
        "input_digest": input_digest,
        "parameters": parameters,
        "results": results,
        "version": __version__,
    }
    if timing_seconds is not None:
        report["timing_seconds"] = timing_seconds
    return report


def render_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
