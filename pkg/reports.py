#!/usr/bin/env python3
"""
Run Reports - structured results of one command
===============================================

Every command writes one self-describing JSON document:

    schema_version, command, params, verdict, dims, witnesses,
    counterexample, wall_ms

Serialization is canonical (sorted keys, two-space indent, trailing
newline) so golden files can pin it byte for byte. Vectors appear as an
object holding the printable expression and its terms; tensor terms carry
separate ``left`` and ``right`` words.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import jsonschema

from errors import ConfigError
from exactnum import Vector, format_scalar
from expression_parser import Alphabet, monomial_word, format_vector
from tensormod import order_key

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1.0"

REPORT_SCHEMA: Dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "gca-verify run report",
    "type": "object",
    "required": [
        "schema_version", "command", "params", "verdict", "dims",
        "witnesses", "counterexample", "wall_ms",
    ],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {
            "enum": [
                "axioms", "rank-one", "tensor-irr", "closure", "reduce",
                "invariance", "intertwiner", "classify", "vandermonde",
            ],
        },
        "params": {
            "type": "object",
            "additionalProperties": {"type": ["string", "integer", "boolean", "array"]},
        },
        "verdict": {"type": "string", "minLength": 1},
        "dims": {"type": "object", "additionalProperties": {"type": "integer"}},
        "witnesses": {
            "type": "array",
            "items": {"oneOf": [{"type": "string"}, {"$ref": "#/$defs/vector"}]},
        },
        "counterexample": {"type": ["object", "null"]},
        "wall_ms": {"type": "integer", "minimum": 0},
    },
    "$defs": {
        "vector": {
            "type": "object",
            "required": ["expr", "terms"],
            "additionalProperties": False,
            "properties": {
                "expr": {"type": "string"},
                "terms": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["coeff"],
                        "properties": {
                            "coeff": {"type": "string"},
                            "word": {"type": "string"},
                            "left": {"type": "string"},
                            "right": {"type": "string"},
                        },
                    },
                },
            },
        },
    },
}

CONFIG_SCHEMA: Dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "gca-verify parameter file",
    "type": "object",
    "propertyNames": {"pattern": "^[A-Za-z][A-Za-z0-9_-]*$"},
    "additionalProperties": {
        "oneOf": [
            {"type": "string"},
            {"type": "integer"},
            {"type": "boolean"},
            {"type": "array", "items": {"type": "string"}},
        ],
    },
}


@dataclass
class Report:
    """
    One run's structured result.

    Attributes:
        command: Subcommand name
        params: Effective flag values keyed by flag name
        verdict: Outcome label of the command
        dims: Named dimensions and counts
        witnesses: Expressions or labelled values backing the verdict
        counterexample: Failure record of a falsified check
        wall_ms: Elapsed wall time in milliseconds
    """
    command: str
    params: Dict[str, Any]
    verdict: str
    dims: Dict[str, int] = field(default_factory=dict)
    witnesses: List[Any] = field(default_factory=list)
    counterexample: Optional[Dict[str, Any]] = None
    wall_ms: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "params": self.params,
            "verdict": self.verdict,
            "dims": self.dims,
            "witnesses": self.witnesses,
            "counterexample": self.counterexample,
            "wall_ms": self.wall_ms,
        }

    def to_json(self) -> str:
        doc = self.to_dict()
        validate_report(doc)
        return render(doc)


def render(doc: Dict[str, Any]) -> str:
    """Canonical JSON text of a report document."""
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def validate_report(doc: Dict[str, Any]) -> None:
    jsonschema.validate(doc, REPORT_SCHEMA)


def vector_witness(v: Vector, spec) -> Dict[str, Any]:
    """Structured form of a vector: printable expression plus its terms."""
    alphabet = Alphabet.for_spec(spec)
    terms = []
    for mono in sorted(v.terms, key=order_key, reverse=True):
        entry = {"coeff": format_scalar(v.terms[mono])}
        if alphabet.is_tensor:
            entry["left"] = monomial_word(mono[:2], alphabet.names[:2])
            entry["right"] = monomial_word(mono[2:], alphabet.names[2:])
        else:
            entry["word"] = monomial_word(mono, alphabet.names)
        terms.append(entry)
    return {"expr": format_vector(v, spec), "terms": terms}


def load_config(path: str) -> Dict[str, Any]:
    """Read and validate a JSON parameter file."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        jsonschema.validate(data, CONFIG_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise ConfigError(f"invalid config {path}: {exc.message}") from exc
    logger.debug("loaded %d setting(s) from %s", len(data), path)
    return data


def write_report(report: Report, out: Optional[str]) -> str:
    """Serialize, then write to ``out`` (when given); returns the text."""
    text = report.to_json()
    if out:
        Path(out).write_text(text, encoding="utf-8")
    return text
