# SPDX-License-Identifier: MIT
"""Tests for report documents and their schema validation."""

import json
from fractions import Fraction

import pytest

from tipgm_potts import (
    ModelParams,
    ReportValidationError,
    count_tipgm,
    parse_report,
    render_json,
    report_to_document,
    validate_report,
    validate_report_strict,
)


@pytest.fixture
def document() -> dict:
    """Document for p = q = 5, theta = 6."""
    return report_to_document(count_tipgm(ModelParams(5, 5, Fraction(6))), method="both")


class TestReportToDocument:
    """Tests for report_to_document function."""

    def test_fields(self, document):
        """Test the top-level values."""
        assert document["params"] == {"p": 5, "q": 5, "k": 2, "theta": "6", "theta_precision": None}
        assert document["n_ti"] == 16
        assert document["mu0_bounded"] is False
        assert document["nontrivial_bounded"] is False
        expected = {"case": "case2", "kind": "exact", "value": 16, "agrees": True}
        assert document["closed_form"] == expected

    def test_per_m(self, document):
        """Test the per-m entries."""
        first = document["per_m"][0]
        assert (first["m"], first["count"], first["multiplicity"]) == (1, 1, 5)
        assert first["rule"].startswith("pro")
        assert first["exact_roots"] == ["16"]
        assert first["roots"][0].startswith("5^0 * (1 + 3*5 + 0*5^2")

    def test_valid(self, document):
        """Test that a fresh document validates."""
        result = validate_report(document)
        assert result.valid
        assert result.document is document

    def test_rules_only(self):
        """Test a rules-only document without roots."""
        report = count_tipgm(ModelParams(5, 5, Fraction(11)), method="rules")
        document = report_to_document(report, method="rules")
        assert all(entry["roots"] == [] for entry in document["per_m"])
        assert validate_report(document).valid


class TestValidateReport:
    """Tests for validate_report function."""

    def test_not_an_object(self):
        """Test that a list is rejected."""
        result = validate_report([])
        assert not result.valid
        assert result.errors[0].field == "<root>"

    def test_missing_field(self, document):
        """Test that a missing n_ti is reported."""
        del document["n_ti"]
        result = validate_report(document)
        assert not result.valid
        assert result.errors[0].message == "Missing required field: n_ti"

    def test_count_out_of_range(self, document):
        """Test that count = 3 is reported with its path."""
        document["per_m"][0]["count"] = 3
        result = validate_report(document)
        assert [(e.field, e.message) for e in result.errors] == [
            ("per_m[0].count", "Value must be at most 2")
        ]

    def test_bad_theta(self, document):
        """Test that theta must be rational text."""
        document["params"]["theta"] = "six"
        result = validate_report(document)
        assert result.errors[0].field == "params.theta"

    def test_bad_closed_form_kind(self, document):
        """Test that closed-form kinds are enumerated."""
        document["closed_form"]["kind"] = "approximate"
        result = validate_report(document)
        assert result.errors[0].message.startswith("Value must be one of:")

    def test_root_count(self, document):
        """Test that the root list must match the count."""
        document["per_m"][0]["roots"].append(document["per_m"][0]["roots"][0])
        result = validate_report(document)
        assert result.errors[0].field == "per_m[0].roots"

    def test_strict(self, document):
        """Test that strict validation raises."""
        document["n_ti"] = 0
        with pytest.raises(ReportValidationError) as exc_info:
            validate_report_strict(document)
        assert "n_ti" in str(exc_info.value)


class TestJson:
    """Tests for render_json and parse_report."""

    def test_round_trip(self, document):
        """Test that a rendered document parses back unchanged."""
        assert parse_report(render_json(document)) == document

    def test_render_is_stable(self, document):
        """Test that rendering a parsed document reproduces the text."""
        text = render_json(document)
        assert render_json(parse_report(text)) == text

    def test_indented(self, document):
        """Test the two-space indentation."""
        assert render_json(document).startswith('{\n  "params"')

    def test_invalid_json(self):
        """Test that malformed text is a validation error."""
        with pytest.raises(ReportValidationError):
            parse_report("{")

    def test_invalid_document(self, document):
        """Test that parsing validates."""
        document["warnings"] = "none"
        with pytest.raises(ReportValidationError):
            parse_report(json.dumps(document))
