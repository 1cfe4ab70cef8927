# SPDX-License-Identifier: MIT
"""Report documents: conversion, schema validation and JSON rendering.

A document is the JSON-ready dict form of a TipgmReport. Every document is
validated against REPORT_SCHEMA before it is rendered and after it is parsed.
"""

from __future__ import annotations

import json
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from jsonschema import Draft202012Validator, ValidationError

from .classifier import TipgmReport
from .errors import ReportValidationError
from .schema import REPORT_SCHEMA


@dataclass(frozen=True, slots=True)
class ValidationErrorDetail:
    """One schema violation in a report document.

    Attributes:
        field: Dotted path such as ``n_ti`` or ``per_m[0].count``
        message: Readable description of the violation
        value: The offending value, None for document-level errors
    """

    field: str
    message: str
    value: Any = None


@dataclass
class ValidationResult:
    """Outcome of validate_report; document is set only when valid."""

    valid: bool
    errors: list[ValidationErrorDetail] = field(default_factory=list)
    document: dict | None = None


def report_to_document(report: TipgmReport, method: str | None = None) -> dict:
    """Convert a report into its JSON-ready document.

    Examples:
        >>> from fractions import Fraction
        >>> from tipgm_potts import ModelParams, count_tipgm
        >>> report_to_document(count_tipgm(ModelParams(5, 5, Fraction(6))))["n_ti"]
        16
    """
    params = report.params
    document: dict[str, Any] = {
        "params": {
            "p": params.p,
            "q": params.q,
            "k": params.k,
            "theta": str(params.theta),
            "theta_precision": params.theta_precision,
        },
    }
    if method is not None:
        document["method"] = method
    document["per_m"] = [
        {
            "m": item.m,
            "count": item.count,
            "rule": item.rule_fired,
            "roots": [str(root.expansion) for root in item.roots],
            "exact_roots": [str(root) for root in item.roots],
            "multiplicity": item.multiplicity,
        }
        for item in report.per_m
    ]
    document["n_ti"] = report.n_ti
    document["mu0_bounded"] = report.mu0_bounded
    document["nontrivial_bounded"] = report.nontrivial_bounded
    form = report.closed_form
    document["closed_form"] = (
        None
        if form is None
        else {
            "case": form.case,
            "kind": form.kind.value,
            "value": form.value,
            "agrees": form.agrees(report.n_ti),
        }
    )
    document["warnings"] = list(report.warnings)
    return document


def _field_path(error: ValidationError) -> str:
    parts = list(error.absolute_path)
    if not parts:
        return "<root>"
    text = str(parts[0])
    for part in parts[1:]:
        text += f"[{part}]" if isinstance(part, int) else f".{part}"
    return text


def _missing_fields(error: ValidationError) -> str:
    missing = [name for name in error.validator_value if name not in error.instance]
    label = "field" if len(missing) == 1 else "fields"
    return f"Missing required {label}: {', '.join(missing)}"


_MESSAGES: dict[str, Callable[[ValidationError], str]] = {
    "required": _missing_fields,
    "type": lambda e: f"Expected {e.validator_value}, got {type(e.instance).__name__}",
    "enum": lambda e: "Value must be one of: " + ", ".join(map(repr, e.validator_value)),
    "pattern": lambda e: "Value does not match required pattern",
    "minimum": lambda e: f"Value must be at least {e.validator_value}",
    "maximum": lambda e: f"Value must be at most {e.validator_value}",
    "maxItems": lambda e: f"At most {e.validator_value} item(s) allowed",
}


def _describe(error: ValidationError) -> ValidationErrorDetail:
    formatter = _MESSAGES.get(str(error.validator))
    return ValidationErrorDetail(
        field=_field_path(error),
        message=formatter(error) if formatter else error.message,
        value=error.instance if error.absolute_path else None,
    )


def validate_report(document: Any) -> ValidationResult:
    """Validate a report document against REPORT_SCHEMA.

    Beyond the schema, each entry's root list must hold ``count`` roots when
    roots are listed at all (rules-only reports list none).
    """
    if not isinstance(document, dict):
        return ValidationResult(
            valid=False,
            errors=[
                ValidationErrorDetail(
                    field="<root>",
                    message=f"Report must be an object, got {type(document).__name__}",
                    value=document,
                )
            ],
        )

    validator = Draft202012Validator(REPORT_SCHEMA)
    errors = [_describe(error) for error in validator.iter_errors(document)]
    if errors:
        return ValidationResult(valid=False, errors=errors)

    for index, entry in enumerate(document["per_m"]):
        if entry["roots"] and len(entry["roots"]) != entry["count"]:
            errors.append(
                ValidationErrorDetail(
                    field=f"per_m[{index}].roots",
                    message=f"Expected {entry['count']} root(s), got {len(entry['roots'])}",
                    value=entry["roots"],
                )
            )
    if errors:
        return ValidationResult(valid=False, errors=errors)
    return ValidationResult(valid=True, document=document)


def validate_report_strict(document: Any) -> dict:
    """Validate a document and raise if it is invalid.

    Raises:
        ReportValidationError: If the document is invalid
    """
    result = validate_report(document)
    if not result.valid:
        raise ReportValidationError(result.errors)
    return result.document  # type: ignore[return-value]


def render_json(document: dict) -> str:
    """Validate and render a document as indented JSON."""
    return json.dumps(validate_report_strict(document), indent=2)


def parse_report(text: str) -> dict:
    """Parse JSON text into a validated document.

    Raises:
        ReportValidationError: If the text is not JSON or fails validation
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReportValidationError(
            [ValidationErrorDetail(field="<root>", message=f"Invalid JSON: {exc.msg}", value=text)]
        ) from exc
    return validate_report_strict(document)
