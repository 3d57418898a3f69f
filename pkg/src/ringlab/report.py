"""Serializable classification reports.

A :class:`ReportDocument` renders either as JSON or as ``key: value`` text
where keys are dotted paths and values are JSON literals, so both forms parse
back to the same document.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__
from .classifiers import FLAG_ORDER, SIZE_ORDER, ClassificationReport, Skipped
from .ring import FiniteRing
from .subsets import center, delta, idempotents, jacobson_radical, nilpotents, units

SCHEMA_VERSION = 1

MEMBER_SETS = ("units", "idempotents", "nilpotents", "jacobson", "delta", "center")

_FLAG_VALUE = {"oneOf": [{"type": "boolean"}, {"const": "skipped"}]}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "ring", "sizes", "flags", "skipped", "provenance"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "ring": {
            "type": "object",
            "required": ["label", "order", "elements"],
            "additionalProperties": False,
            "properties": {
                "label": {"type": "string"},
                "order": {"type": "integer", "minimum": 1},
                "elements": {"type": "array", "items": {"type": "string"}},
            },
        },
        "sizes": {
            "type": "object",
            "required": list(SIZE_ORDER),
            "additionalProperties": False,
            "properties": {k: {"type": "integer", "minimum": 0} for k in SIZE_ORDER},
        },
        "members": {
            "type": "object",
            "additionalProperties": False,
            "properties": {k: {"type": "array", "items": {"type": "integer"}} for k in MEMBER_SETS},
        },
        "flags": {
            "type": "object",
            "required": list(FLAG_ORDER),
            "additionalProperties": False,
            "properties": {k: _FLAG_VALUE for k in FLAG_ORDER},
        },
        "skipped": {"type": "object", "additionalProperties": {"type": "string"}},
        "witnesses": {
            "type": "object",
            "additionalProperties": {
                "oneOf": [
                    {"type": "null"},
                    {"type": "object", "required": ["idempotent", "part"],
                     "additionalProperties": False,
                     "properties": {"idempotent": {"type": "integer"}, "part": {"type": "integer"}}},
                ],
            },
        },
        "provenance": {
            "type": "object",
            "required": ["expression", "max_order", "budget", "version"],
            "additionalProperties": False,
            "properties": {
                "expression": {"type": "string"},
                "max_order": {"type": "integer"},
                "budget": {"type": "integer"},
                "version": {"type": "string"},
            },
        },
    },
}


class ReportFormatError(ValueError):
    pass


@dataclass
class ReportDocument:
    ring: dict
    sizes: dict
    flags: dict
    skipped: dict
    provenance: dict
    members: dict | None = None
    witnesses: dict | None = None
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> dict:
        out = {"schema_version": self.schema_version, "ring": self.ring, "sizes": self.sizes}
        if self.members is not None:
            out["members"] = self.members
        out["flags"] = self.flags
        out["skipped"] = self.skipped
        if self.witnesses is not None:
            out["witnesses"] = self.witnesses
        out["provenance"] = self.provenance
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "ReportDocument":
        try:
            version = data["schema_version"]
            if version != SCHEMA_VERSION:
                raise ReportFormatError(f"unsupported schema_version {version!r}")
            return cls(ring=data["ring"], sizes=data["sizes"], flags=data["flags"],
                       skipped=data["skipped"], provenance=data["provenance"],
                       members=data.get("members"), witnesses=data.get("witnesses"),
                       schema_version=version)
        except KeyError as exc:
            raise ReportFormatError(f"missing field {exc.args[0]!r}") from None

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        return "".join(f"{k}: {json.dumps(v)}\n" for k, v in _flatten(self.to_dict()))

    @classmethod
    def from_text(cls, text: str) -> "ReportDocument":
        data: dict = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            key, sep, value = line.partition(": ")
            if not sep:
                raise ReportFormatError(f"line {lineno}: expected 'key: value'")
            try:
                leaf = json.loads(value)
            except json.JSONDecodeError as exc:
                raise ReportFormatError(f"line {lineno}: bad value ({exc.msg})") from None
            _assign(data, key.split("."), leaf)
        return cls.from_dict(data)


def _flatten(data: dict, prefix: str = ""):
    for key, value in data.items():
        path = f"{prefix}{key}"
        if isinstance(value, dict) and value:
            yield from _flatten(value, path + ".")
        else:
            yield path, value


def _assign(data: dict, path: list, value) -> None:
    for key in path[:-1]:
        data = data.setdefault(key, {})
    data[path[-1]] = value


def _members(ring: FiniteRing) -> dict:
    sets = {
        "units": units(ring).units, "idempotents": idempotents(ring),
        "nilpotents": nilpotents(ring), "jacobson": jacobson_radical(ring),
        "delta": delta(ring), "center": center(ring),
    }
    return {k: s.sorted() for k, s in sets.items()}


def build_report(ring: FiniteRing, report: ClassificationReport, expression: str,
                 max_order: int, budget: int, members: bool = False) -> ReportDocument:
    flags = {k: ("skipped" if isinstance(v, Skipped) else v) for k, v in report.flags.items()}
    witnesses = None
    if report.witnesses is not None:
        witnesses = {str(a): (None if w is None else {"idempotent": w.idempotent, "part": w.part})
                     for a, w in enumerate(report.witnesses)}
    return ReportDocument(
        ring={"label": ring.label, "order": ring.order,
              "elements": [ring.name(a) for a in ring.elements()]},
        sizes=dict(report.sizes), flags=flags, skipped=report.skipped(),
        provenance={"expression": expression, "max_order": max_order, "budget": budget,
                    "version": __version__},
        members=_members(ring) if members else None, witnesses=witnesses)
