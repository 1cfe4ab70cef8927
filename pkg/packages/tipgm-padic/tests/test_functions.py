# SPDX-License-Identifier: MIT
"""Unit tests for square roots, exp_p and log_p."""

from fractions import Fraction

import pytest

from tipgm_padic import (
    ConvergenceDomain,
    DomainKind,
    NoSquareRootError,
    OutsideDomainError,
    SqrtReason,
    Valuation,
    ZeroInputError,
    exp_p,
    expand,
    log_p,
    sqrt,
    sqrt_exists,
)


class TestSqrtExists:
    """Tests for sqrt_exists function."""

    def test_two_adic_one_mod_8(self):
        """Test that 17 = 1 mod 8 has a 2-adic root."""
        verdict = sqrt_exists(2, 17)
        assert verdict.exists
        assert verdict.reason is SqrtReason.EXISTS

    def test_odd_valuation(self):
        """Test that 3 has no 3-adic root."""
        verdict = sqrt_exists(3, 3)
        assert not verdict
        assert verdict.reason is SqrtReason.ODD_VALUATION

    def test_two_adic_unit_not_one_mod_8(self):
        """Test that 768 = 2^8 * 3 has no 2-adic root."""
        verdict = sqrt_exists(2, 768)
        assert not verdict.exists
        assert verdict.reason is SqrtReason.TWO_ADIC_UNIT_NOT_ONE_MOD_8

    def test_residue(self):
        """Test that 6 = 1 mod 5 has a 5-adic root."""
        assert sqrt_exists(5, 6).exists

    def test_non_residue(self):
        """Test that 2 is not a square mod 3."""
        assert sqrt_exists(3, 2).reason is SqrtReason.NON_RESIDUE

    def test_negative_valuation(self):
        """Test that 1/4 has a 2-adic root."""
        assert sqrt_exists(2, Fraction(1, 4)).exists

    def test_reason_values(self):
        """Test the public reason names."""
        assert [r.value for r in SqrtReason] == [
            "OddValuation",
            "NonResidue",
            "TwoAdicUnitNotOneMod8",
            "Exists",
        ]

    def test_zero_rejected(self):
        """Test that zero raises ZeroInputError."""
        with pytest.raises(ZeroInputError):
            sqrt_exists(5, 0)


class TestSqrt:
    """Tests for sqrt function."""

    def test_perfect_square(self):
        """Test that sqrt(4) at p = 5 is exactly 2 on the canonical branch."""
        root = sqrt(5, 4, 6)
        assert root.to_rational() == 2
        assert root.digits[0] == 2

    def test_sqrt_6_mod_25(self):
        """Test that sqrt(6) = 16 mod 25."""
        root = sqrt(5, 6, 2)
        assert root.unit == 16
        assert root.compact() == "16 + O(5^2)"

    def test_no_root(self):
        """Test that NoSquareRootError carries the verdict."""
        with pytest.raises(NoSquareRootError) as exc_info:
            sqrt(3, 3, 4)
        assert exc_info.value.verdict.reason is SqrtReason.ODD_VALUATION
        assert "OddValuation" in exc_info.value.message

    def test_two_adic_branch(self):
        """Test that the 2-adic root of 17 is 1 mod 4 and squares back."""
        root = sqrt(2, 17, 20)
        assert root.unit % 4 == 1
        assert root * root == expand(2, 17, 20)

    def test_two_adic_small_precision(self):
        """Test 2-adic roots at one and two digits."""
        assert sqrt(2, 17, 1).unit == 1
        assert sqrt(2, 9, 2).unit == 1

    def test_negative_valuation(self):
        """Test that sqrt(4/9) at p = 3 has valuation -1."""
        root = sqrt(3, Fraction(4, 9), 8)
        assert root.valuation == Valuation(-1)
        assert root.digits[0] == 1
        assert root * root == expand(3, Fraction(4, 9), 8)

    def test_p_one_mod_four(self):
        """Test a prime where Tonelli-Shanks runs its full loop."""
        root = sqrt(17, 3**2 * 17**2, 10)
        assert root.valuation == Valuation(1)
        assert root.digits[0] == 3

    def test_branches_are_negatives(self):
        """Test that the other branch is the negative of the canonical root."""
        root = sqrt(7, 2, 12)
        other = -root
        assert other * other == expand(7, 2, 12)
        assert other.digits[0] > 3


class TestConvergenceDomain:
    """Tests for ConvergenceDomain."""

    def test_exp_thresholds(self):
        """Test exp domain thresholds for odd p and p = 2."""
        assert ConvergenceDomain.exp_domain(3).threshold == 1
        assert ConvergenceDomain.exp_domain(2).threshold == 2

    def test_contains(self):
        """Test membership in the log domain."""
        domain = ConvergenceDomain.log_domain(5)
        assert domain.kind is DomainKind.LOG
        assert domain.contains(5, 6)
        assert not domain.contains(5, 2)

    def test_str(self):
        """Test the rendering used in error messages."""
        assert str(ConvergenceDomain.exp_domain(2)) == "ExpDomain (v(x) >= 2)"


class TestExp:
    """Tests for exp_p function."""

    def test_exp_zero(self):
        """Test exp_p(0) = 1."""
        assert exp_p(7, 0, 10) == expand(7, 1, 10)

    def test_exp_5(self):
        """Test exp_5(5) = 81 mod 125."""
        assert exp_p(5, 5, 3).compact() == "81 + O(5^3)"

    def test_exp_norm(self):
        """Test |exp_5(5) - 1|_5 = 5^-1."""
        result = exp_p(5, 5, 3) - expand(5, 1, 3)
        assert result.valuation == Valuation(1)

    def test_exp_two_adic(self):
        """Test exp_2(4) is 1 mod 4 but not 1 mod 8."""
        result = exp_p(2, 4, 12)
        assert result.unit % 8 == 5

    def test_outside_domain(self):
        """Test that exp_p rejects units and 2 at p = 2."""
        with pytest.raises(OutsideDomainError):
            exp_p(5, 1, 4)
        with pytest.raises(OutsideDomainError):
            exp_p(2, 2, 4)

    def test_expansion_input_caps_precision(self):
        """Test that an expansion input limits the output precision."""
        result = exp_p(5, expand(5, 5, 2), 10)
        assert result.precision == 3


class TestLog:
    """Tests for log_p function."""

    def test_log_one(self):
        """Test log_p(1) = 0."""
        assert log_p(5, 1, 10).is_zero

    def test_log_81(self):
        """Test log_5(81) = 5 mod 125."""
        assert log_p(5, 81, 3).compact() == "5 + O(5^3)"

    def test_log_of_exp_expansion(self):
        """Test log_p accepts the output of exp_p."""
        assert log_p(5, exp_p(5, 5, 3)).compact() == "5 + O(5^3)"

    def test_outside_domain(self):
        """Test that log_p rejects |x - 1|_p = 1 and zero."""
        with pytest.raises(OutsideDomainError):
            log_p(5, 2, 4)
        with pytest.raises(OutsideDomainError):
            log_p(5, 0, 4)

    def test_absolute_precision(self):
        """Test that the result is known modulo p^N."""
        result = log_p(3, 10, 6)
        assert result.valuation == Valuation(2)
        assert result.absolute_precision == 6
