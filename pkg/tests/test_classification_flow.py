# SPDX-License-Identifier: MIT
"""Integration test: coupling to measures to reports.

Tests the complete flow of:
1. Turning a coupling J into theta = exp_p(J)
2. Counting and classifying the translation-invariant measures
3. Recovering the boundary fields h = log_p(z) and the partition-function norms
4. Emitting the report through the CLI and parsing it back
"""

from fractions import Fraction

import pytest
from click.testing import CliRunner

from tipgm_cli.main import cli
from tipgm_padic import exp_p, expand, log_p
from tipgm_potts import (
    ModelParams,
    count_tipgm,
    measure_classes,
    parse_report,
    partition_norm_trajectory,
    report_to_document,
)


@pytest.mark.integration
class TestClassificationFlow:
    """End-to-end flow for p = q = 5."""

    def test_coupling_to_count(self):
        """Test that the coupling J = 5 lands on the generic count."""
        theta = exp_p(5, 5, 64).to_rational()
        params = ModelParams(5, 5, theta)
        assert params.in_domain
        assert log_p(5, theta, 64) == expand(5, 5, 64)
        assert count_tipgm(params).n_ti == 31

    def test_measure_classes_round_trip(self):
        """Test that exp_p(h) gives back each root and the complement field is -h."""
        report = count_tipgm(ModelParams(5, 5, Fraction(6)))
        classes = measure_classes(report)
        sizes = [(c.size, c.complement_size, c.multiplicity) for c in classes]
        assert sizes == [(1, 4, 5), (2, 3, 10)]
        first = classes[0]
        assert exp_p(5, first.h, 32) == expand(5, 16, 32)
        assert first.complement_h == -first.h

    def test_every_nontrivial_measure_is_unbounded(self):
        """Test that each counted root gives norms tending to 0."""
        params = ModelParams(5, 5, Fraction(11))
        report = count_tipgm(params)
        for item in report.per_m:
            for root in item.roots:
                assert partition_norm_trajectory(params, item.m, root, 5).unbounded

    def test_cli_matches_library(self):
        """Test that the CLI's JSON equals the library document."""
        result = CliRunner().invoke(
            cli, ["classify", "-p", "5", "-q", "5", "--theta", "11", "--format", "json"]
        )
        assert result.exit_code == 0
        expected = report_to_document(count_tipgm(ModelParams(5, 5, Fraction(11))), method="both")
        assert parse_report(result.output) == expected
