# SPDX-License-Identifier: MIT
"""Tests for the reduced quadratic and its roots."""

from fractions import Fraction

import pytest

from tipgm_padic import SqrtReason, Valuation, expand
from tipgm_potts import (
    InvalidSubsetSizeError,
    ModelParams,
    RootKind,
    kv_coeffs,
    solve_kv,
)


class TestKvCoeffs:
    """Tests for kv_coeffs function."""

    def test_generic(self):
        """Test coefficients for q = 3, m = 1, theta = 13."""
        kv = kv_coeffs(ModelParams(3, 3, Fraction(13)), 1)
        assert (kv.a2, kv.a1, kv.a0) == (1, -140, 4)
        assert kv.discriminant == 136

    def test_zero_discriminant(self):
        """Test coefficients for q = 4, m = 2, theta = 5."""
        kv = kv_coeffs(ModelParams(2, 4, Fraction(5)), 2)
        assert (kv.a2, kv.a1, kv.a0) == (4, -8, 4)
        assert kv.discriminant == 0

    def test_subset_size(self):
        """Test that m = q is rejected."""
        with pytest.raises(InvalidSubsetSizeError):
            kv_coeffs(ModelParams(3, 3, Fraction(4)), 3)

    def test_fixed_point_is_root(self):
        """Test that the fixed point 4 of f_1 solves the quadratic."""
        kv = kv_coeffs(ModelParams(3, 3, Fraction(4)), 1)
        assert kv.evaluate(Fraction(4)) == 0


class TestSolveKv:
    """Tests for solve_kv function."""

    def test_rational_roots(self):
        """Test the exact roots 1 and 4 for q = 3, theta = 4."""
        roots = solve_kv(ModelParams(3, 3, Fraction(4)), 1)
        assert roots.kind is RootKind.TWO
        assert sorted(root.exact for root in roots.roots) == [1, 4]
        assert [str(root) for root in roots.in_ep_minus_one] == ["4"]

    def test_double_root_one(self):
        """Test the double root z = 1 when D = 0."""
        roots = solve_kv(ModelParams(2, 4, Fraction(5)), 2)
        assert roots.kind is RootKind.DOUBLE
        assert roots.roots[0].exact == 1
        assert roots.roots[0].is_one
        assert roots.in_ep_minus_one == ()
        assert str(roots) == "Double(1)"

    def test_degenerate_double_root(self):
        """Test the double root -(q - m)/m for theta = 1."""
        roots = solve_kv(ModelParams(5, 5, Fraction(1)), 2)
        assert roots.kind is RootKind.DOUBLE
        assert roots.roots[0].exact == Fraction(-3, 2)

    def test_irrational_roots(self):
        """Test the roots 70 +/- 12 sqrt(34) for q = 3, theta = 13."""
        roots = solve_kv(ModelParams(3, 3, Fraction(13)), 1, precision=20)
        assert roots.kind is RootKind.TWO
        assert roots.sqrt_verdict.exists
        z1, z2 = roots.roots
        assert int(z1.shift_valuation) + int(z2.shift_valuation) == 3
        assert "sqrt(136)" in str(z1)
        assert z1.expansion.precision == 20

    def test_irrational_roots_vieta(self):
        """Test that the expansions satisfy z1 + z2 = 140 and z1 * z2 = 4."""
        z1, z2 = solve_kv(ModelParams(3, 3, Fraction(13)), 1).roots
        assert z1.expansion + z2.expansion == expand(3, 140)
        assert z1.expansion * z2.expansion == expand(3, 4)

    def test_no_roots(self):
        """Test that D = -3 has no 3-adic root."""
        roots = solve_kv(ModelParams(3, 4, Fraction(4)), 1)
        assert roots.kind is RootKind.NO_ROOTS
        assert roots.roots == ()
        assert roots.sqrt_verdict.reason is SqrtReason.ODD_VALUATION
        assert str(roots) == "NoRoots"

    def test_pole_has_root_one(self):
        """Test that at the pole theta = 1 + q one root is 1."""
        roots = solve_kv(ModelParams(5, 5, Fraction(6)), 1)
        assert sorted(root.exact for root in roots.roots) == [1, 16]
        assert Valuation.infinite() in [root.shift_valuation for root in roots.roots]

    def test_roots_solve_recursion(self):
        """Test that an exact root is a fixed point of f_m."""
        from tipgm_potts import f_m_eval

        params = ModelParams(5, 5, Fraction(6))
        for m in (1, 2):
            for root in solve_kv(params, m).roots:
                assert f_m_eval(params, m, root.exact) == root.exact
