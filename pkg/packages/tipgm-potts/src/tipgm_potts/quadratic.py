# SPDX-License-Identifier: MIT
"""The quadratic satisfied by the nontrivial fixed points of f_m (k = 2).

Dividing f_m(z) = z by z - 1 leaves

    m^2 z^2 + (2m(q - m) - (theta - 1)^2) z + (q - m)^2 = 0

with discriminant D = (theta - 1)^2 - 4m(q - m). Writing t = theta - 1, the roots
are z = (A +/- t sqrt(D)) / (2m^2) with A = t^2 - 2m(q - m), and

    z - 1 = (t^2 - 2mq +/- t sqrt(D)) / (2m^2)

whose numerators multiply to 4m^2 (q^2 - t^2). E_p membership of a root is
decided from the valuation of z - 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import isqrt

from tipgm_padic import (
    DEFAULT_PRECISION,
    PadicExpansion,
    PrecisionExhaustedError,
    SqrtVerdict,
    Valuation,
    expand,
    int_valuation,
    split_valuation,
    sqrt,
    sqrt_exists,
    unit_residue,
    valuation,
)

from .model import ModelParams, check_subset_size, ep_threshold

# Adaptive precision for sqrt(D) when D is not a rational square
INITIAL_SQRT_PRECISION = 16
MAX_SQRT_PRECISION = 1024


@dataclass(frozen=True, slots=True)
class QuadraticKV:
    """Coefficients a2 z^2 + a1 z + a0 and the discriminant of the reduced quadratic.

    Attributes:
        m: Subset size the quadratic belongs to
        a2: m^2
        a1: 2m(q - m) - (theta - 1)^2
        a0: (q - m)^2
        discriminant: (theta - 1)^2 - 4m(q - m)
    """

    m: int
    a2: Fraction
    a1: Fraction
    a0: Fraction
    discriminant: Fraction

    def evaluate(self, z: Fraction) -> Fraction:
        """Return a2 z^2 + a1 z + a0."""
        return (self.a2 * z + self.a1) * z + self.a0


def kv_coeffs(params: ModelParams, m: int) -> QuadraticKV:
    """Return the exact coefficients and discriminant for subset size m.

    Examples:
        >>> kv = kv_coeffs(ModelParams(3, 3, Fraction(13)), 1)
        >>> (kv.a2, kv.a1, kv.a0, kv.discriminant)
        (Fraction(1, 1), Fraction(-140, 1), Fraction(4, 1), Fraction(136, 1))
    """
    check_subset_size(params.q, m)
    q, t = params.q, params.t
    return QuadraticKV(
        m=m,
        a2=Fraction(m * m),
        a1=2 * m * (q - m) - t * t,
        a0=Fraction((q - m) ** 2),
        discriminant=t * t - 4 * m * (q - m),
    )


class RootKind(str, Enum):
    NO_ROOTS = "NoRoots"
    DOUBLE = "Double"
    TWO = "Two"


@dataclass(frozen=True, slots=True)
class SymbolicRoot:
    """The root (a + sign * b * sqrt(discriminant)) / denominator.

    sqrt is the canonical branch returned by ``tipgm_padic.sqrt``.
    """

    a: Fraction
    b: Fraction
    discriminant: Fraction
    denominator: Fraction
    sign: int

    def __str__(self) -> str:
        op = "+" if self.sign > 0 else "-"
        return f"({self.a} {op} {self.b}*sqrt({self.discriminant}))/{self.denominator}"


@dataclass(frozen=True, slots=True)
class KvRoot:
    """One root of the quadratic with its E_p verdict.

    Attributes:
        expansion: p-adic expansion of the root
        shift_valuation: Exact valuation of z - 1 (+inf for z = 1)
        in_ep: True if the root lies in E_p
        exact: The root as a rational, when it is one
        symbolic: The closed form, when the root is irrational
    """

    expansion: PadicExpansion
    shift_valuation: Valuation
    in_ep: bool
    exact: Fraction | None = None
    symbolic: SymbolicRoot | None = None

    @property
    def is_one(self) -> bool:
        return self.shift_valuation.is_infinite

    @property
    def in_ep_minus_one(self) -> bool:
        """True if the root is a nontrivial boundary value."""
        return self.in_ep and not self.is_one

    def __str__(self) -> str:
        if self.exact is not None:
            return str(self.exact)
        return str(self.symbolic)


@dataclass(frozen=True, slots=True)
class RootSet:
    """Roots of the quadratic for one subset size.

    Attributes:
        kind: NO_ROOTS, DOUBLE or TWO
        roots: The roots (one for DOUBLE, two for TWO, z1 first)
        quadratic: The quadratic the roots solve
        sqrt_verdict: The square-root test on D, when it was needed
    """

    kind: RootKind
    roots: tuple[KvRoot, ...]
    quadratic: QuadraticKV
    sqrt_verdict: SqrtVerdict | None = field(default=None, compare=False)

    @property
    def in_ep_minus_one(self) -> tuple[KvRoot, ...]:
        """Roots that lie in E_p minus {1}."""
        return tuple(root for root in self.roots if root.in_ep_minus_one)

    def __str__(self) -> str:
        if self.kind is RootKind.NO_ROOTS:
            return "NoRoots"
        return f"{self.kind.value}({', '.join(str(root) for root in self.roots)})"


def _shift_in_ep(p: int, shift: Valuation) -> bool:
    return shift.is_infinite or int(shift) >= ep_threshold(p)


def _exact_root(p: int, z: Fraction, precision: int) -> KvRoot:
    shift = valuation(p, z - 1)
    return KvRoot(
        expansion=expand(p, z, precision),
        shift_valuation=shift,
        in_ep=_shift_in_ep(p, shift),
        exact=z,
    )


def _rational_sqrt(d: Fraction) -> Fraction | None:
    """Return the positive rational square root of d, or None."""
    if d < 0:
        return None
    numerator, denominator = isqrt(d.numerator), isqrt(d.denominator)
    if numerator * numerator != d.numerator or denominator * denominator != d.denominator:
        return None
    return Fraction(numerator, denominator)


def _canonical_sign(p: int, r: Fraction) -> Fraction:
    """Return +r or -r, whichever lies on the canonical sqrt branch."""
    _, unit = split_valuation(p, r)
    if p == 2:
        canonical = unit_residue(2, unit, 4) == 1
    else:
        canonical = unit_residue(p, unit, p) <= (p - 1) // 2
    return r if canonical else -r


def _symbolic_roots(params: ModelParams, kv: QuadraticKV, precision: int) -> tuple[KvRoot, ...]:
    """Realise the two irrational roots, deciding E_p membership adaptively.

    The valuations of z - 1 come from sqrt(D) expanded at 16, 32, ... digits and
    are accepted only if they add up to the valuation of the exact product
    4m^2 (q^2 - t^2).
    """
    p, q, t, m = params.p, params.q, params.t, kv.m
    d = kv.discriminant
    a = t * t - 2 * m * (q - m)
    shift_base = t * t - 2 * m * q
    denominator = Fraction(2 * m * m)
    product_valuation = int_valuation(p, 4 * m * m * (q * q - t * t))
    denominator_valuation = int_valuation(p, denominator)

    working = INITIAL_SQRT_PRECISION
    while working <= MAX_SQRT_PRECISION:
        try:
            scaled = expand(p, t, working) * sqrt(p, d, working)
            base = expand(p, shift_base, working)
            shifts = (base + scaled, base - scaled)
            if int(shifts[0].valuation) + int(shifts[1].valuation) != product_valuation:
                working *= 2
                continue
            scale = expand(p, denominator, working)
            values = (
                (expand(p, a, working) + scaled) / scale,
                (expand(p, a, working) - scaled) / scale,
            )
        except PrecisionExhaustedError:
            working *= 2
            continue
        if min(value.precision for value in values) < precision:
            working *= 2
            continue

        roots = []
        for sign, value, shift in zip((1, -1), values, shifts, strict=True):
            shift_valuation = Valuation(int(shift.valuation) - denominator_valuation)
            roots.append(
                KvRoot(
                    expansion=value.truncate(precision),
                    shift_valuation=shift_valuation,
                    in_ep=_shift_in_ep(p, shift_valuation),
                    symbolic=SymbolicRoot(a, t, d, denominator, sign),
                )
            )
        return tuple(roots)

    raise PrecisionExhaustedError("solve_kv", MAX_SQRT_PRECISION)


def solve_kv(params: ModelParams, m: int, precision: int = DEFAULT_PRECISION) -> RootSet:
    """Solve the reduced quadratic for subset size m.

    Args:
        params: Model parameters
        m: Subset size, 1 <= m <= q - 1
        precision: Digits of each root's expansion

    Returns:
        RootSet: DOUBLE when theta = 1 or D = 0, TWO when sqrt(D) exists in Q_p
        (z1 takes the + sign on the canonical branch), NO_ROOTS otherwise

    Raises:
        PrecisionExhaustedError: If the adaptive precision ceiling is reached

    Examples:
        >>> roots = solve_kv(ModelParams(3, 3, Fraction(4)), 1)
        >>> sorted(root.exact for root in roots.roots)
        [Fraction(1, 1), Fraction(4, 1)]
    """
    kv = kv_coeffs(params, m)
    p, q, t = params.p, params.q, params.t

    if t == 0:
        # (m z + q - m)^2 = 0
        return RootSet(RootKind.DOUBLE, (_exact_root(p, Fraction(-(q - m), m), precision),), kv)

    d = kv.discriminant
    if d == 0:
        z = (t * t - 2 * m * (q - m)) / (2 * m * m)
        return RootSet(RootKind.DOUBLE, (_exact_root(p, z, precision),), kv)

    rational_root = _rational_sqrt(d)
    if rational_root is not None:
        s = _canonical_sign(p, rational_root)
        a = t * t - 2 * m * (q - m)
        denominator = 2 * m * m
        return RootSet(
            RootKind.TWO,
            (
                _exact_root(p, (a + t * s) / denominator, precision),
                _exact_root(p, (a - t * s) / denominator, precision),
            ),
            kv,
        )

    verdict = sqrt_exists(p, d)
    if not verdict:
        return RootSet(RootKind.NO_ROOTS, (), kv, verdict)
    return RootSet(RootKind.TWO, _symbolic_roots(params, kv, precision), kv, verdict)
