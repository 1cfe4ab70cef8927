# SPDX-License-Identifier: MIT
"""Property-based tests for exp_p, log_p and square roots.

These tests validate, at working precision with exact digit equality:
- |exp_p(x)|_p = 1 and |exp_p(x) - 1|_p = |x|_p
- |log_p(1 + x)|_p = |x|_p
- log_p(exp_p(x)) = x and exp_p(log_p(1 + x)) = 1 + x
- exp_p(x + y) = exp_p(x) * exp_p(y)
- sqrt(a)^2 = a on the canonical branch
"""

from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from tipgm_padic import (
    Valuation,
    exp_p,
    expand,
    log_p,
    sqrt,
    sqrt_exists,
    valuation,
)

WORKING_PRECISION = 24

# =============================================================================
# Strategies for generating test data
# =============================================================================


@st.composite
def units(draw: st.DrawFn, p: int) -> Fraction:
    """Generate a p-adic unit rational of either sign."""
    numerator = draw(st.integers(min_value=1, max_value=10**5).filter(lambda n: n % p))
    denominator = draw(st.integers(min_value=1, max_value=10**5).filter(lambda n: n % p))
    sign = draw(st.sampled_from([1, -1]))
    return Fraction(sign * numerator, denominator)


@st.composite
def exp_domain_elements(draw: st.DrawFn, p: int) -> Fraction:
    """Generate x = p^v * u with v in 1..4 (p odd) or 2..5 (p = 2)."""
    low = 2 if p == 2 else 1
    v = draw(st.integers(min_value=low, max_value=low + 3))
    return Fraction(p) ** v * draw(units(p))


# =============================================================================
# exp/log identities
# =============================================================================


class ExpLogIdentities:
    """The exp/log identities for a fixed prime; subclasses set ``p``."""

    p: int

    def check_exp_norms(self, x: Fraction) -> None:
        result = exp_p(self.p, x, WORKING_PRECISION)
        assert result.valuation == Valuation(0)
        shifted = result - expand(self.p, 1, WORKING_PRECISION)
        assert shifted.valuation == valuation(self.p, x)

    def check_log_norm(self, x: Fraction) -> None:
        result = log_p(self.p, 1 + x, WORKING_PRECISION)
        assert result.valuation == valuation(self.p, x)

    def check_log_exp(self, x: Fraction) -> None:
        v = int(valuation(self.p, x))
        result = log_p(self.p, exp_p(self.p, x, WORKING_PRECISION))
        assert result == expand(self.p, x, WORKING_PRECISION - v)
        assert result.absolute_precision == WORKING_PRECISION

    def check_exp_log(self, x: Fraction) -> None:
        result = exp_p(self.p, log_p(self.p, 1 + x, WORKING_PRECISION))
        assert result == expand(self.p, 1 + x, WORKING_PRECISION)

    def check_homomorphism(self, x: Fraction, y: Fraction) -> None:
        left = exp_p(self.p, x + y, WORKING_PRECISION)
        right = exp_p(self.p, x, WORKING_PRECISION) * exp_p(self.p, y, WORKING_PRECISION)
        assert left == right


class TestExpLogTwo(ExpLogIdentities):
    """exp/log identities at p = 2, valuations 2..5."""

    p = 2

    @given(x=exp_domain_elements(2))
    @settings(max_examples=100)
    def test_exp_norms(self, x: Fraction):
        """|exp(x)| = 1 and |exp(x) - 1| = |x|."""
        self.check_exp_norms(x)

    @given(x=exp_domain_elements(2))
    @settings(max_examples=100)
    def test_log_norm(self, x: Fraction):
        """|log(1 + x)| = |x|."""
        self.check_log_norm(x)

    @given(x=exp_domain_elements(2))
    @settings(max_examples=100)
    def test_log_exp(self, x: Fraction):
        """log(exp(x)) = x."""
        self.check_log_exp(x)

    @given(x=exp_domain_elements(2))
    @settings(max_examples=100)
    def test_exp_log(self, x: Fraction):
        """exp(log(1 + x)) = 1 + x."""
        self.check_exp_log(x)

    @given(x=exp_domain_elements(2), y=exp_domain_elements(2))
    @settings(max_examples=100)
    def test_homomorphism(self, x: Fraction, y: Fraction):
        """exp(x + y) = exp(x) * exp(y)."""
        self.check_homomorphism(x, y)


class TestExpLogThree(ExpLogIdentities):
    """exp/log identities at p = 3, valuations 1..4."""

    p = 3

    @given(x=exp_domain_elements(3))
    @settings(max_examples=100)
    def test_exp_norms(self, x: Fraction):
        """|exp(x)| = 1 and |exp(x) - 1| = |x|."""
        self.check_exp_norms(x)

    @given(x=exp_domain_elements(3))
    @settings(max_examples=100)
    def test_log_norm(self, x: Fraction):
        """|log(1 + x)| = |x|."""
        self.check_log_norm(x)

    @given(x=exp_domain_elements(3))
    @settings(max_examples=100)
    def test_log_exp(self, x: Fraction):
        """log(exp(x)) = x."""
        self.check_log_exp(x)

    @given(x=exp_domain_elements(3))
    @settings(max_examples=100)
    def test_exp_log(self, x: Fraction):
        """exp(log(1 + x)) = 1 + x."""
        self.check_exp_log(x)

    @given(x=exp_domain_elements(3), y=exp_domain_elements(3))
    @settings(max_examples=100)
    def test_homomorphism(self, x: Fraction, y: Fraction):
        """exp(x + y) = exp(x) * exp(y)."""
        self.check_homomorphism(x, y)


class TestExpLogFive(ExpLogIdentities):
    """exp/log identities at p = 5, valuations 1..4."""

    p = 5

    @given(x=exp_domain_elements(5))
    @settings(max_examples=100)
    def test_exp_norms(self, x: Fraction):
        """|exp(x)| = 1 and |exp(x) - 1| = |x|."""
        self.check_exp_norms(x)

    @given(x=exp_domain_elements(5))
    @settings(max_examples=100)
    def test_log_norm(self, x: Fraction):
        """|log(1 + x)| = |x|."""
        self.check_log_norm(x)

    @given(x=exp_domain_elements(5))
    @settings(max_examples=100)
    def test_log_exp(self, x: Fraction):
        """log(exp(x)) = x."""
        self.check_log_exp(x)

    @given(x=exp_domain_elements(5))
    @settings(max_examples=100)
    def test_exp_log(self, x: Fraction):
        """exp(log(1 + x)) = 1 + x."""
        self.check_exp_log(x)

    @given(x=exp_domain_elements(5), y=exp_domain_elements(5))
    @settings(max_examples=100)
    def test_homomorphism(self, x: Fraction, y: Fraction):
        """exp(x + y) = exp(x) * exp(y)."""
        self.check_homomorphism(x, y)


class TestExpLogSeven(ExpLogIdentities):
    """exp/log identities at p = 7, valuations 1..4."""

    p = 7

    @given(x=exp_domain_elements(7))
    @settings(max_examples=100)
    def test_exp_norms(self, x: Fraction):
        """|exp(x)| = 1 and |exp(x) - 1| = |x|."""
        self.check_exp_norms(x)

    @given(x=exp_domain_elements(7))
    @settings(max_examples=100)
    def test_log_norm(self, x: Fraction):
        """|log(1 + x)| = |x|."""
        self.check_log_norm(x)

    @given(x=exp_domain_elements(7))
    @settings(max_examples=100)
    def test_log_exp(self, x: Fraction):
        """log(exp(x)) = x."""
        self.check_log_exp(x)

    @given(x=exp_domain_elements(7))
    @settings(max_examples=100)
    def test_exp_log(self, x: Fraction):
        """exp(log(1 + x)) = 1 + x."""
        self.check_exp_log(x)

    @given(x=exp_domain_elements(7), y=exp_domain_elements(7))
    @settings(max_examples=100)
    def test_homomorphism(self, x: Fraction, y: Fraction):
        """exp(x + y) = exp(x) * exp(y)."""
        self.check_homomorphism(x, y)


# =============================================================================
# Square roots
# =============================================================================


class TestSqrtProperties:
    """Square roots of squares land on the canonical branch and square back."""

    @given(p=st.sampled_from([2, 3, 5, 7, 11, 13]), data=st.data())
    @settings(max_examples=200)
    def test_square_of_root(self, p: int, data: st.DataObject):
        """sqrt(r^2)^2 = r^2 with the canonical leading digit."""
        r = data.draw(units(p)) * Fraction(p) ** data.draw(st.integers(-3, 3))
        a = r * r
        assert sqrt_exists(p, a).exists
        root = sqrt(p, a, 16)
        assert root * root == expand(p, a, 16)
        if p == 2:
            assert root.unit % 4 == 1
        else:
            assert 1 <= root.digits[0] <= (p - 1) // 2

    @given(p=st.sampled_from([3, 5, 7, 11, 13]), data=st.data())
    @settings(max_examples=200)
    def test_verdict_matches_residues(self, p: int, data: st.DataObject):
        """A unit is a square iff its residue is a nonzero square mod p."""
        u = data.draw(units(p))
        residue = u.numerator * pow(u.denominator, -1, p) % p
        squares = {x * x % p for x in range(1, p)}
        assert sqrt_exists(p, u).exists == (residue in squares)
