# SPDX-License-Identifier: MIT
"""Tests for the norm-comparison rule tree."""

from dataclasses import replace
from fractions import Fraction

import pytest

from tipgm_padic import Valuation
from tipgm_potts import (
    DEGENERATE_RULE,
    ODD_PRIME_RULES,
    TWO_ADIC_RULES,
    ModelParams,
    RuleInputs,
    UnmatchedCaseError,
    classify_m,
    evaluate_rules,
    rules_for,
)

# One point per case: (p, q, theta, m, rule id, count). Counts come from the
# case itself and are confirmed against the quadratic in the tests below.
CASE_EXAMPLES: tuple[tuple[int, int, int, int, str, int], ...] = (
    (3, 4, 4, 1, "pro11", 0),
    (5, 5, 6, 1, "pro12-1", 1),
    (3, 21, 22, 9, "pro12-2", 0),
    (3, 6, 7, 3, "pro12-3", 0),
    (3, 15, 16, 3, "pro12-4", 1),
    (5, 5, 11, 2, "pro13-case1", 2),
    (3, 18, 4, 9, "pro13-case2", 0),
    (3, 21, 10, 9, "pro13-case3", 0),
    (3, 9, 4, 3, "pro13-case4", 0),
    (3, 6, 10, 3, "pro13-case5", 0),
    (3, 21, 31, 9, "pro13-case6", 1),
    (5, 55, 11, 25, "pro13-case7", 0),
    (5, 10, 6, 5, "pro13-case8", 0),
    (3, 12, 4, 3, "pro13-case9", 1),
    (3, 6, 4, 3, "pro13-case10", 0),
    (3, 6, 34, 3, "pro13-case10", 2),
    (2, 3, 5, 1, "pro21", 0),
    (2, 4, 5, 1, "pro22-1", 1),
    (2, 4, 5, 2, "pro22-2", 0),
    (2, 8, 17, 1, "pro23-case1", 2),
    (2, 8, 5, 2, "pro23-case2", 0),
    (2, 4, 9, 2, "pro23-case3", 0),
    (2, 8, 5, 1, "pro23-case4", 0),
    (2, 4, 9, 1, "pro23-case5", 0),
    (2, 4, 13, 1, "pro23-case6", 2),
    (2, 12, 5, 4, "pro23-case7", 1),
    (2, 4, 29, 2, "pro23-case8", 0),
    (2, 4, 133, 2, "pro23-case8", 2),
    (2, 20, 5, 8, "pro23-case9", 1),
)


class TestRuleInputs:
    """Tests for RuleInputs.from_params."""

    def test_valuations(self):
        """Test the exponents for p = 5, q = 5, theta = 11, m = 2."""
        inputs = RuleInputs.from_params(ModelParams(5, 5, Fraction(11)), 2)
        assert (inputs.a, inputs.b, inputs.c) == (0, 1, 1)
        assert inputs.v_q_minus_2m == Valuation(0)
        assert not inputs.pole

    def test_pole_and_half(self):
        """Test the infinite valuations at a pole with q = 2m."""
        inputs = RuleInputs.from_params(ModelParams(3, 6, Fraction(7)), 3)
        assert inputs.pole
        assert inputs.q_is_2m


class TestRuleLists:
    """Tests for the case lists."""

    def test_selection(self):
        """Test that p = 2 gets its own list."""
        assert rules_for(2) is TWO_ADIC_RULES
        assert rules_for(7) is ODD_PRIME_RULES

    def test_unique_ids(self):
        """Test that rule identifiers are unique."""
        for rules in (ODD_PRIME_RULES, TWO_ADIC_RULES):
            ids = [rule.rule_id for rule in rules]
            assert len(ids) == len(set(ids))


class TestEvaluateRules:
    """Tests for evaluate_rules function."""

    def test_pole_single_root(self):
        """Test p = q = 5, theta = 6, m = 1: one root."""
        outcome = evaluate_rules(ModelParams(5, 5, Fraction(6)), 1)
        assert outcome.rule_id == "pro12-1"
        assert outcome.count == 1

    def test_two_roots(self):
        """Test p = q = 5, theta = 11, m = 2: two roots."""
        outcome = evaluate_rules(ModelParams(5, 5, Fraction(11)), 2)
        assert outcome.rule_id == "pro13-case1"
        assert outcome.count == 2

    def test_unit_q(self):
        """Test that |q|_p = 1 gives no root."""
        outcome = evaluate_rules(ModelParams(3, 4, Fraction(4)), 1)
        assert (outcome.rule_id, outcome.count) == ("pro11", 0)

    def test_two_adic_unit_q(self):
        """Test that |q|_2 > 1/4 gives no root."""
        outcome = evaluate_rules(ModelParams(2, 3, Fraction(5)), 1)
        assert (outcome.rule_id, outcome.count) == ("pro21", 0)

    def test_pole_half_no_root(self):
        """Test that a pole with q = 2m gives no root."""
        outcome = evaluate_rules(ModelParams(3, 6, Fraction(7)), 3)
        assert (outcome.rule_id, outcome.count) == ("pro12-3", 0)

    def test_conditional_without_root(self):
        """Test a conditional case resolved by sqrt(D) not existing."""
        # p = 2, q = 4, theta = 29, m = 2: D = 768 = 2^8 * 3
        outcome = evaluate_rules(ModelParams(2, 4, Fraction(29)), 2)
        assert outcome.rule_id == "pro23-case8"
        assert outcome.count == 0
        assert outcome.conditional is not None
        assert not outcome.conditional.exists

    def test_conditional_odd_prime(self):
        """Test the conditional odd-prime case for q = 2m."""
        # p = 3, q = 6, theta = 4, m = 3: D = -27 has odd valuation
        outcome = evaluate_rules(ModelParams(3, 6, Fraction(4)), 3)
        assert outcome.rule_id == "pro13-case10"
        assert outcome.count == 0

    def test_degenerate(self):
        """Test that theta = 1 short-circuits."""
        outcome = evaluate_rules(ModelParams(5, 5, Fraction(1)), 1)
        assert (outcome.rule_id, outcome.count) == (DEGENERATE_RULE, 0)

    def test_outside_domain(self):
        """Test that theta outside E_p is not classified."""
        params = ModelParams(2, 3, Fraction(3), allow_out_of_domain=True)
        with pytest.raises(UnmatchedCaseError):
            evaluate_rules(params, 1)

    def test_no_case_matches(self):
        """Test that a truncated case list reports the gap."""
        with pytest.raises(UnmatchedCaseError) as exc_info:
            evaluate_rules(ModelParams(5, 5, Fraction(6)), 1, rules=ODD_PRIME_RULES[2:])
        assert exc_info.value.matched == []

    def test_several_cases_match(self):
        """Test that overlapping guards are reported."""
        duplicate = replace(ODD_PRIME_RULES[1], rule_id="pro12-1-copy")
        with pytest.raises(UnmatchedCaseError) as exc_info:
            evaluate_rules(ModelParams(5, 5, Fraction(6)), 1, rules=(*ODD_PRIME_RULES, duplicate))
        assert exc_info.value.matched == ["pro12-1", "pro12-1-copy"]


class TestEveryCase:
    """Each case fires on a known point and agrees with the quadratic there."""

    def test_every_rule_has_an_example(self):
        """Test that the examples cover both case lists."""
        covered = {rule_id for *_, rule_id, _ in CASE_EXAMPLES}
        expected = {rule.rule_id for rule in (*ODD_PRIME_RULES, *TWO_ADIC_RULES)}
        assert covered == expected

    def test_rule_fired(self):
        """Test that each example selects its case with the expected count."""
        for p, q, theta, m, rule_id, count in CASE_EXAMPLES:
            outcome = evaluate_rules(ModelParams(p, q, Fraction(theta)), m)
            assert (outcome.rule_id, outcome.count) == (rule_id, count), (p, q, theta, m)

    def test_matches_quadratic(self):
        """Test that the direct root count agrees on every example."""
        for p, q, theta, m, rule_id, count in CASE_EXAMPLES:
            params = ModelParams(p, q, Fraction(theta))
            assert classify_m(params, m, "direct").count == count, (p, q, theta, m)
            assert classify_m(params, m, "both").rule_fired == rule_id

    def test_conditional_two_roots_odd_prime(self):
        """Test the conditional odd-prime case when sqrt(D) exists."""
        # p = 3, q = 6, theta = 34, m = 3: D = 1053 = 3^4 * 13, 13 = 1 mod 3
        params = ModelParams(3, 6, Fraction(34))
        outcome = evaluate_rules(params, 3)
        assert outcome.rule_id == "pro13-case10"
        assert outcome.count == 2
        assert outcome.conditional is not None
        assert outcome.conditional.exists
        assert len(classify_m(params, 3, "direct").roots) == 2

    def test_conditional_two_roots_two_adic(self):
        """Test the conditional 2-adic case when sqrt(D) exists."""
        # p = 2, q = 4, theta = 133, m = 2: D = 17408 = 2^10 * 17, 17 = 1 mod 8
        params = ModelParams(2, 4, Fraction(133))
        outcome = evaluate_rules(params, 2)
        assert outcome.rule_id == "pro23-case8"
        assert outcome.count == 2
        assert outcome.conditional is not None
        assert outcome.conditional.exists
        assert classify_m(params, 2, "both").count == 2
