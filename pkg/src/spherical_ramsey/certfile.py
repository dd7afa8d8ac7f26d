"""The JSON envelope every CLI command writes.

Rationals always travel as "num/den" strings. ``timing_ms`` is the only
field allowed to differ between two runs on the same input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .bounds import BoundReport
from .search import SearchEntry
from .simulate import CampaignReport
from .verifier import Certificate
from .witness import WitnessPair

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class ColorResult:
    point: tuple[str, ...]
    norm_sq: str
    color: str

    def to_dict(self) -> dict:
        return {"kind": "color", "point": list(self.point), "norm_sq": self.norm_sq, "color": self.color}

    @classmethod
    def from_dict(cls, data: dict) -> "ColorResult":
        return cls(tuple(data["point"]), data["norm_sq"], data["color"])


@dataclass(frozen=True)
class Failure:
    """A result that could not be produced (refuted precondition, undecided scan)."""

    reason: str
    detail: str = ""

    def to_dict(self) -> dict:
        return {"kind": "failure", "reason": self.reason, "detail": self.detail}

    @classmethod
    def from_dict(cls, data: dict) -> "Failure":
        return cls(data["reason"], data.get("detail", ""))


RESULT_KINDS = {
    "certificate": Certificate,
    "bound_report": BoundReport,
    "search_entry": SearchEntry,
    "witness": WitnessPair,
    "campaign": CampaignReport,
    "color": ColorResult,
    "failure": Failure,
}


@dataclass(frozen=True)
class CertificateFile:
    command: str
    inputs: dict[str, Any]
    results: tuple[Any, ...]
    timing_ms: int = 0
    schema_version: str = SCHEMA_VERSION
    tool_version: str = __version__

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "tool_version": self.tool_version,
            "command": self.command,
            "inputs": self.inputs,
            "results": [r.to_dict() for r in self.results],
            "timing_ms": self.timing_ms,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "CertificateFile":
        results = []
        for r in data["results"]:
            kind = r.get("kind")
            if kind not in RESULT_KINDS:
                raise ValueError(f"unknown result kind {kind!r}")
            results.append(RESULT_KINDS[kind].from_dict(r))
        return cls(
            command=data["command"],
            inputs=data["inputs"],
            results=tuple(results),
            timing_ms=data["timing_ms"],
            schema_version=data["schema_version"],
            tool_version=data["tool_version"],
        )

    @classmethod
    def loads(cls, text: str) -> "CertificateFile":
        return cls.from_dict(json.loads(text))
