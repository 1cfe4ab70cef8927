# SPDX-License-Identifier: MIT
"""JSON Schema for classification reports.

Reports are emitted by ``tipgm classify --format json`` and parsed back by
``parse_report``. Rationals are strings (``"-37/20"``); roots use the expansion
display format ``p^v * (d0 + d1*p + ...) + O(p^w)``.
"""

from __future__ import annotations

from tipgm_padic import RATIONAL_PATTERN

# Display format of tipgm_padic.PadicExpansion
EXPANSION_PATTERN = r"^(0|\d+\^-?\d+ \* \([^)]*\) \+ O\(\d+\^-?\d+\))$"

CLOSED_FORM_CASES = ["case1", "case2", "case3", "case4", "case5", "case6"]
CLOSED_FORM_KINDS = ["exact", "target", "upper-bound"]
METHOD_NAMES = ["rules", "direct", "both"]

REPORT_SCHEMA: dict = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "TIpGM Classification Report",
    "description": "Translation-invariant p-adic Gibbs measures of the Potts model for one theta",
    "type": "object",
    "required": ["params", "per_m", "n_ti", "mu0_bounded", "warnings"],
    "properties": {
        "params": {
            "type": "object",
            "required": ["p", "q", "k", "theta"],
            "properties": {
                "p": {"type": "integer", "minimum": 2},
                "q": {"type": "integer", "minimum": 2},
                "k": {"type": "integer", "minimum": 1},
                "theta": {
                    "type": "string",
                    "description": "theta = exp_p(J) as an exact rational",
                    "pattern": RATIONAL_PATTERN.pattern,
                },
                "theta_precision": {"type": ["integer", "null"], "minimum": 1},
            },
            "additionalProperties": False,
        },
        "method": {"type": "string", "enum": METHOD_NAMES},
        "per_m": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["m", "count", "rule", "roots", "multiplicity"],
                "properties": {
                    "m": {"type": "integer", "minimum": 1},
                    "count": {"type": "integer", "minimum": 0, "maximum": 2},
                    "rule": {"type": "string", "minLength": 1},
                    "roots": {
                        "type": "array",
                        "items": {"type": "string", "pattern": EXPANSION_PATTERN},
                        "maxItems": 2,
                    },
                    "exact_roots": {
                        "type": "array",
                        "items": {"type": "string"},
                        "maxItems": 2,
                    },
                    "multiplicity": {"type": "integer", "minimum": 1},
                },
                "additionalProperties": False,
            },
        },
        "n_ti": {"type": "integer", "minimum": 1},
        "mu0_bounded": {"type": "boolean"},
        "nontrivial_bounded": {"type": "boolean"},
        "closed_form": {
            "type": ["object", "null"],
            "required": ["case", "kind", "value", "agrees"],
            "properties": {
                "case": {"type": "string", "enum": CLOSED_FORM_CASES},
                "kind": {"type": "string", "enum": CLOSED_FORM_KINDS},
                "value": {"type": "integer", "minimum": 1},
                "agrees": {"type": "boolean"},
            },
            "additionalProperties": False,
        },
        "warnings": {"type": "array", "items": {"type": "string"}},
    },
    "additionalProperties": False,
}
