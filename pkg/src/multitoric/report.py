"""Machine-readable report documents shared by the command-line front end."""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import jsonschema
import numpy as np

from . import __version__

STATUSES = ("PASS", "FAIL", "UNKNOWN", "INFO")

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "inputs_digest", "checks", "version"],
    "properties": {
        "command": {"type": "string"},
        "inputs_digest": {"type": "string", "pattern": "^[0-9a-f]{64}$"},
        "version": {"type": "string"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "status", "details", "numbers"],
                "properties": {
                    "name": {"type": "string"},
                    "status": {"enum": list(STATUSES)},
                    "details": {"type": "string"},
                    "numbers": {"type": "object"},
                },
                "additionalProperties": False,
            },
        },
        "artifacts": {"type": "object"},
    },
    "additionalProperties": False,
}


def _plain(x):
    """Convert numpy scalars, fractions, tuples and dataclass dicts to JSON types."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (np.bool_, bool)):
        return bool(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, (np.floating, float)):
        x = float(x)
        return x if math.isfinite(x) else str(x)
    if isinstance(x, np.ndarray):
        return _plain(x.tolist())
    return x


@dataclass
class Check:
    name: str
    status: str
    details: str = ""
    numbers: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    @classmethod
    def of(cls, name: str, ok: bool, details: str = "", **numbers) -> Check:
        return cls(name, "PASS" if ok else "FAIL", details, numbers)

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "details": self.details,
                "numbers": _plain(self.numbers)}


def digest(*parts) -> str:
    h = hashlib.sha256()
    for p in parts:
        if isinstance(p, bytes):
            h.update(p)
        else:
            h.update(json.dumps(_plain(p), sort_keys=True).encode())
        h.update(b"\0")
    return h.hexdigest()


def build_report(command: str, inputs_digest: str, checks: list[Check], artifacts: dict | None = None) -> dict:
    doc = {
        "command": command,
        "inputs_digest": inputs_digest,
        "checks": [c.to_dict() for c in checks],
        "version": __version__,
    }
    if artifacts:
        doc["artifacts"] = _plain(artifacts)
    jsonschema.validate(doc, REPORT_SCHEMA)
    return doc


def all_passed(checks: list[Check]) -> bool:
    return all(c.status in ("PASS", "INFO") for c in checks)
