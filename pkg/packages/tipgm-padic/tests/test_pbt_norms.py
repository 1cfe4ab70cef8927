# SPDX-License-Identifier: MIT
"""Property-based tests for valuations, norms and expansions.

These tests validate:
- Ultrametric inequality, with equality for distinct norms
- Two equal norms: the sum or the difference keeps the norm (p odd)
- Multiplicativity of the norm
- Expansion round trip and digit stability under extra precision
"""

from __future__ import annotations

from fractions import Fraction

from hypothesis import assume, given, settings, strategies as st

from tipgm_padic import expand, norm, valuation

# =============================================================================
# Strategies for generating test data
# =============================================================================

primes = st.sampled_from([2, 3, 5, 7, 11])
odd_primes = st.sampled_from([3, 5, 7, 11])


@st.composite
def rationals(draw: st.DrawFn, nonzero: bool = False) -> Fraction:
    """Generate rationals with numerators and denominators rich in small primes."""
    numerator = draw(st.integers(min_value=-(10**9), max_value=10**9))
    if nonzero:
        assume(numerator != 0)
    scale = draw(st.sampled_from([1, 2, 3, 4, 5, 7, 9, 25, 27, 49, 128]))
    denominator = draw(st.integers(min_value=1, max_value=10**6))
    return Fraction(numerator * scale, denominator)


# =============================================================================
# Ultrametric and multiplicativity
# =============================================================================


class TestUltrametric:
    """Strong triangle inequality on exact norm exponents."""

    @given(p=primes, x=rationals(), y=rationals())
    @settings(max_examples=200)
    def test_strong_triangle(self, p: int, x: Fraction, y: Fraction):
        """norm(x + y) <= max(norm(x), norm(y))."""
        assert norm(p, x + y) <= max(norm(p, x), norm(p, y))

    @given(p=primes, x=rationals(nonzero=True), y=rationals(nonzero=True))
    @settings(max_examples=200)
    def test_equality_for_distinct_norms(self, p: int, x: Fraction, y: Fraction):
        """norm(x + y) = max(norm(x), norm(y)) when the norms differ."""
        assume(norm(p, x) != norm(p, y))
        assert norm(p, x + y) == max(norm(p, x), norm(p, y))

    @given(p=odd_primes, x=rationals(nonzero=True), data=st.data())
    @settings(max_examples=200)
    def test_sum_or_difference_keeps_norm(self, p: int, x: Fraction, data: st.DataObject):
        """For equal nonzero norms, |x + y| or |x - y| equals |x| (p odd)."""
        unit = data.draw(st.integers(min_value=1, max_value=10**6).filter(lambda n: n % p))
        sign = data.draw(st.sampled_from([1, -1]))
        v = int(valuation(p, x))
        y = sign * Fraction(unit) * Fraction(p) ** v
        assert norm(p, y) == norm(p, x)
        assert norm(p, x + y) == norm(p, x) or norm(p, x - y) == norm(p, x)

    @given(p=primes, x=rationals(nonzero=True), y=rationals(nonzero=True))
    @settings(max_examples=200)
    def test_multiplicative(self, p: int, x: Fraction, y: Fraction):
        """Norm exponents add under multiplication."""
        assert norm(p, x * y).exponent == norm(p, x).exponent + norm(p, y).exponent


# =============================================================================
# Expansions
# =============================================================================


class TestExpansionRoundTrip:
    """Canonical expansions reconstruct their input."""

    @given(p=primes, r=rationals(nonzero=True), n=st.integers(min_value=1, max_value=40))
    @settings(max_examples=200)
    def test_reconstruction_congruent(self, p: int, r: Fraction, n: int):
        """Digit reconstruction agrees with r modulo p^(v+N)."""
        x = expand(p, r, n)
        difference = x.to_rational() - r
        v = int(x.valuation)
        assert x.digits[0] != 0
        assert difference == 0 or int(valuation(p, difference)) >= v + n

    @given(
        p=primes,
        r=rationals(nonzero=True),
        n=st.integers(min_value=1, max_value=30),
        extra=st.integers(min_value=0, max_value=30),
    )
    @settings(max_examples=100)
    def test_digits_stable_under_extra_precision(self, p: int, r: Fraction, n: int, extra: int):
        """The first N digits do not change when more digits are requested."""
        assert expand(p, r, n + extra).digits[:n] == expand(p, r, n).digits
