# SPDX-License-Identifier: MIT
"""Square roots, exponential and logarithm over Q_p.

Square roots exist exactly when the valuation is even and the unit part is a
square residue (mod p for odd p, mod 8 for p = 2). Roots are lifted from a
residue root and returned on a canonical branch:
- p odd: leading digit in 1..(p-1)/2
- p = 2: unit part congruent to 1 mod 4

exp_p and log_p sum their power series exactly and stop once every remaining
term is divisible by p^N (term valuations come from Legendre's formula).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import NoSquareRootError, OutsideDomainError, PrecisionExhaustedError, ZeroInputError
from .expansion import DEFAULT_PRECISION, PadicExpansion, expand
from .rational import Valuation, as_rational, check_prime, split_valuation, unit_residue


class SqrtReason(str, Enum):
    """Why a square root does or does not exist."""

    ODD_VALUATION = "OddValuation"
    NON_RESIDUE = "NonResidue"
    TWO_ADIC_UNIT_NOT_ONE_MOD_8 = "TwoAdicUnitNotOneMod8"
    EXISTS = "Exists"


@dataclass(frozen=True, slots=True)
class SqrtVerdict:
    """Outcome of the square-root existence test.

    Attributes:
        exists: True iff a root exists in Q_p
        reason: EXISTS, or the first condition that failed
    """

    exists: bool
    reason: SqrtReason

    def __bool__(self) -> bool:
        return self.exists


class DomainKind(str, Enum):
    EXP = "ExpDomain"
    LOG = "LogDomain"


@dataclass(frozen=True, slots=True)
class ConvergenceDomain:
    """Ball on which exp_p or log_p converges, as a valuation threshold.

    For EXP the threshold bounds valuation(x); for LOG it bounds
    valuation(x - 1).

    Attributes:
        kind: EXP or LOG
        threshold: Minimal valuation inside the domain
    """

    kind: DomainKind
    threshold: int

    @classmethod
    def exp_domain(cls, p: int) -> ConvergenceDomain:
        return cls(DomainKind.EXP, 2 if p == 2 else 1)

    @classmethod
    def log_domain(cls, p: int) -> ConvergenceDomain:
        return cls(DomainKind.LOG, 1)

    def contains(self, p: int, x: Fraction | int | str) -> bool:
        """Return True if x lies in the domain (zero lies in the exp domain)."""
        value = as_rational(x)
        if self.kind is DomainKind.LOG:
            value -= 1
        if value == 0:
            return True
        return split_valuation(p, value)[0] >= self.threshold

    def __str__(self) -> str:
        subject = "v(x)" if self.kind is DomainKind.EXP else "v(x - 1)"
        return f"{self.kind.value} ({subject} >= {self.threshold})"


def sqrt_exists(p: int, a: Fraction | int | str) -> SqrtVerdict:
    """Decide whether a has a square root in Q_p.

    Args:
        p: A prime
        a: A nonzero rational

    Returns:
        SqrtVerdict with the deciding reason

    Raises:
        ZeroInputError: If a is zero

    Examples:
        >>> sqrt_exists(2, 17).exists
        True
        >>> sqrt_exists(2, 768).reason
        <SqrtReason.TWO_ADIC_UNIT_NOT_ONE_MOD_8: 'TwoAdicUnitNotOneMod8'>
    """
    check_prime(p)
    value = as_rational(a)
    if value == 0:
        raise ZeroInputError("sqrt_exists")

    v, u = split_valuation(p, value)
    if v % 2:
        return SqrtVerdict(False, SqrtReason.ODD_VALUATION)
    if p == 2:
        if unit_residue(2, u, 8) == 1:
            return SqrtVerdict(True, SqrtReason.EXISTS)
        return SqrtVerdict(False, SqrtReason.TWO_ADIC_UNIT_NOT_ONE_MOD_8)
    if pow(unit_residue(p, u, p), (p - 1) // 2, p) == 1:
        return SqrtVerdict(True, SqrtReason.EXISTS)
    return SqrtVerdict(False, SqrtReason.NON_RESIDUE)


def _tonelli_shanks(n: int, p: int) -> int:
    """Return r with r^2 = n (mod p) for a nonzero residue n and odd prime p."""
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)

    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1

    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _odd_unit_root(p: int, u: int, precision: int) -> int:
    """Newton-lift a residue root of the unit u to modulus p^precision."""
    target = p**precision
    x = _tonelli_shanks(u % p, p)
    modulus = p
    while modulus < target:
        modulus = min(modulus * modulus, target)
        x = (x - (x * x - u) * pow(2 * x, -1, modulus)) % modulus
    if x % p > (p - 1) // 2:
        x = (target - x) % target
    return x


def _two_adic_unit_root(u: int, precision: int) -> int:
    """Lift a root of u = 1 (mod 8) bit by bit, returning it mod 2^precision."""
    x = 1
    # x^2 = u (mod 2^k) determines x modulo 2^(k-1) up to sign
    for k in range(3, precision + 1):
        if (x * x - u) % (1 << (k + 1)):
            x += 1 << (k - 1)
    target = 1 << precision
    x %= target
    if x % 4 == 3:
        x = (target - x) % target
    return x


def sqrt(p: int, a: Fraction | int | str, precision: int = DEFAULT_PRECISION) -> PadicExpansion:
    """Return the canonical square root of a to ``precision`` digits.

    Raises:
        NoSquareRootError: If no root exists (carries the SqrtVerdict)
        ZeroInputError: If a is zero

    Examples:
        >>> sqrt(5, 6, 2).compact()
        '16 + O(5^2)'
    """
    verdict = sqrt_exists(p, a)
    value = as_rational(a)
    if not verdict:
        raise NoSquareRootError(value, verdict)
    if precision < 1:
        raise ValueError(f"Precision must be at least 1, got {precision}")

    v, u = split_valuation(p, value)
    if p == 2:
        root = _two_adic_unit_root(unit_residue(2, u, 1 << (precision + 2)), precision)
    else:
        root = _odd_unit_root(p, unit_residue(p, u, p**precision), precision)
    return PadicExpansion(p, Valuation(v // 2), root, precision)


def _series_input(
    p: int, x: Fraction | int | str | PadicExpansion, precision: int
) -> tuple[Fraction, int, bool]:
    """Return (exact value, effective absolute precision, exact flag) of a series input."""
    if isinstance(x, PadicExpansion):
        if x.prime != p:
            raise ValueError(f"Expected a {p}-adic expansion, got prime {x.prime}")
        absolute = x.absolute_precision
        if absolute is None:
            return Fraction(0), precision, True
        return x.to_rational(), min(precision, absolute), False
    return as_rational(x), precision, True


def exp_p(
    p: int, x: Fraction | int | str | PadicExpansion, precision: int = DEFAULT_PRECISION
) -> PadicExpansion:
    """Return exp_p(x) known modulo p^N (N = precision, capped by the input's precision).

    Raises:
        OutsideDomainError: If valuation(x) is below the exp domain threshold

    Examples:
        >>> exp_p(5, 5, 3).compact()
        '81 + O(5^3)'
    """
    check_prime(p)
    value, target, _ = _series_input(p, x, precision)
    domain = ConvergenceDomain.exp_domain(p)
    if not domain.contains(p, value):
        raise OutsideDomainError(value, domain)
    if value == 0:
        return expand(p, 1, target)

    v = split_valuation(p, value)[0]
    total = Fraction(1)
    term = Fraction(1)
    n = 1
    # v(x^n/n!) >= n*v - (n-1)/(p-1), increasing in n
    while n * v * (p - 1) - (n - 1) < target * (p - 1):
        term = term * value / n
        total += term
        n += 1
    return expand(p, total, target)


def _floor_log(p: int, n: int) -> int:
    k = 0
    while n >= p:
        n //= p
        k += 1
    return k


def log_p(
    p: int, x: Fraction | int | str | PadicExpansion, precision: int = DEFAULT_PRECISION
) -> PadicExpansion:
    """Return log_p(x) known modulo p^N for |x - 1|_p < 1.

    The precision is absolute: a result of valuation v carries N - v digits.

    Raises:
        OutsideDomainError: If |x - 1|_p >= 1
        PrecisionExhaustedError: If the result vanishes modulo p^N for an
            inexact input

    Examples:
        >>> log_p(5, 81, 3).compact()
        '5 + O(5^3)'
    """
    check_prime(p)
    value, target, exact = _series_input(p, x, precision)
    domain = ConvergenceDomain.log_domain(p)
    if not domain.contains(p, value):
        raise OutsideDomainError(value, domain)

    y = value - 1
    if y == 0:
        if exact:
            return PadicExpansion.zero(p, target)
        raise PrecisionExhaustedError("log_p", target)

    v = split_valuation(p, y)[0]
    total = Fraction(0)
    term = Fraction(1)
    n = 1
    # v(y^n/n) >= n*v - floor(log_p n), nondecreasing in n
    while n * v - _floor_log(p, n) < target:
        term = term * y
        total += term / n if n % 2 else -term / n
        n += 1

    if total == 0:
        raise PrecisionExhaustedError("log_p", target)
    shift = split_valuation(p, total)[0]
    if shift >= target:
        raise PrecisionExhaustedError("log_p", target)
    return expand(p, total, target - shift)
