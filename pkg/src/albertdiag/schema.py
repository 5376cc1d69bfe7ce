"""JSON schemas for the command-line file formats."""

from __future__ import annotations

import jsonschema

_REAL = {"type": "number"}


def _reals(n):
    return {"type": "array", "items": _REAL, "minItems": n, "maxItems": n}


JORDAN_ELEMENT = {
    "type": "object",
    "properties": {
        "algebra": {"enum": ["compact", "split"]},
        "diag": _reals(3),
        "x1": _reals(8),
        "x2": _reals(8),
        "x3": _reals(8),
    },
    "required": ["algebra", "diag", "x1", "x2", "x3"],
    "additionalProperties": False,
}

GENERATOR = {
    "oneOf": [
        {
            "type": "object",
            "properties": {
                "kind": {"const": "delta_a"},
                "algebra": {"enum": ["compact", "split"]},
                "a": _reals(8),
            },
            "required": ["kind", "algebra", "a"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {"kind": {"const": "rot_o3"}, "T": _reals(9)},
            "required": ["kind", "T"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {"kind": {"const": "sp3"}, "A": _reals(36)},
            "required": ["kind", "A"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {"kind": {"const": "g2"}, "L": _reals(49)},
            "required": ["kind", "L"],
            "additionalProperties": False,
        },
    ]
}

_DRIFT_KEYS = ["trace", "inner_square", "sigma", "det"]

TRANSCRIPT = {
    "type": "object",
    "properties": {
        "input": JORDAN_ELEMENT,
        "steps": {"type": "array", "items": GENERATOR},
        "diagonal": _reals(3),
        "off_diag_residual": _REAL,
        "invariant_drift": {
            "type": "object",
            "properties": {k: _REAL for k in _DRIFT_KEYS},
            "required": _DRIFT_KEYS,
            "additionalProperties": False,
        },
    },
    "required": ["input", "steps", "diagonal", "off_diag_residual", "invariant_drift"],
    "additionalProperties": False,
}

OCTONION = {
    "type": "object",
    "properties": {"coeffs": _reals(8), "algebra": {"enum": ["compact", "split"]}},
    "required": ["coeffs", "algebra"],
    "additionalProperties": False,
}


def validate(data, schema):
    """Raise ``jsonschema.ValidationError`` if ``data`` does not match."""
    jsonschema.validate(data, schema)
