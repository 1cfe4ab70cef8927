# SPDX-License-Identifier: MIT
"""Exact rationals with p-adic valuations and norms.

Rationals are ``fractions.Fraction`` values. Valuations and norms are integer
exponents; no floating point is used anywhere:
- ``valuation(p, r)`` is the exponent of p in r, +inf for zero
- ``norm(p, r)`` is p^-valuation, stored as its exponent
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .errors import InvalidPrimeError, InvalidRationalError, ZeroInputError

Rational = Fraction

# Accepts "a", "-a", "+a", "a/b", "-a/b" with b > 0
RATIONAL_PATTERN = re.compile(r"^(?P<sign>[+-]?)(?P<numerator>\d+)(?:/(?P<denominator>\d+))?$")

# Miller-Rabin witnesses, deterministic below 3.3 * 10^24
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def parse_rational(text: str) -> Fraction:
    """Parse ``a`` or ``a/b`` (optional leading sign) into a Fraction.

    Args:
        text: Rational in text syntax

    Returns:
        The reduced Fraction

    Raises:
        InvalidRationalError: If the text is malformed or the denominator is zero

    Examples:
        >>> parse_rational("-37/20")
        Fraction(-37, 20)
        >>> parse_rational("64")
        Fraction(64, 1)
    """
    if not isinstance(text, str):
        raise InvalidRationalError(
            str(text), f"Rational must be a string, got {type(text).__name__}"
        )

    match = RATIONAL_PATTERN.match(text.strip())
    if not match:
        raise InvalidRationalError(text)

    numerator = int(match.group("numerator"))
    denominator = int(match.group("denominator") or 1)
    if denominator == 0:
        raise InvalidRationalError(text, f"Zero denominator in {text!r}")
    if match.group("sign") == "-":
        numerator = -numerator
    return Fraction(numerator, denominator)


def as_rational(value: Fraction | int | str) -> Fraction:
    """Coerce an int, Fraction or rational text into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidRationalError(str(value), "Booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InvalidRationalError(str(value), f"Cannot interpret {type(value).__name__} as a rational")


def is_prime(n: int) -> bool:
    """Return True if n is prime (Miller-Rabin over fixed witnesses)."""
    if n < 2:
        return False
    for small in _WITNESSES:
        if n % small == 0:
            return n == small

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for witness in _WITNESSES:
        x = pow(witness, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_prime(p: int) -> int:
    """Return p unchanged if it is a prime integer.

    Raises:
        InvalidPrimeError: If p is not an int or not prime
    """
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise InvalidPrimeError(p)
    return p


@total_ordering
@dataclass(frozen=True, slots=True)
class Valuation:
    """Exponent of p in a rational; ``value=None`` encodes +inf (the zero case).

    Attributes:
        value: Finite valuation, or None for the valuation of zero
    """

    value: int | None

    @classmethod
    def infinite(cls) -> Valuation:
        """Return the valuation of zero."""
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        """Return True for the valuation of zero."""
        return self.value is None

    def __int__(self) -> int:
        if self.value is None:
            raise OverflowError("Valuation of zero is infinite")
        return self.value

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Valuation):
            return NotImplemented
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def __str__(self) -> str:
        return "+inf" if self.value is None else str(self.value)


@total_ordering
@dataclass(frozen=True, slots=True)
class NormExponent:
    """A p-adic norm p^-exponent, or exactly zero.

    Ordering compares norms, not exponents: a larger exponent is a smaller
    norm and zero is below everything.

    Attributes:
        exponent: e such that |x|_p = p^-e (0 when is_zero is set)
        is_zero: True for |0|_p
    """

    exponent: int = 0
    is_zero: bool = False

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, NormExponent):
            return NotImplemented
        if self.is_zero:
            return not other.is_zero
        if other.is_zero:
            return False
        return self.exponent > other.exponent

    def render(self, p: int) -> str:
        """Render the norm as ``p^-e`` (``3^-2``) or ``0``."""
        if self.is_zero:
            return "0"
        return f"{p}^{-self.exponent}"


def split_valuation(p: int, r: Fraction) -> tuple[int, Fraction]:
    """Split nonzero r into (v, u) with r = p^v * u and u a p-adic unit.

    Raises:
        ZeroInputError: If r is zero
    """
    if r == 0:
        raise ZeroInputError("split_valuation")
    numerator, denominator = r.numerator, r.denominator
    v = 0
    while numerator % p == 0:
        numerator //= p
        v += 1
    while denominator % p == 0:
        denominator //= p
        v -= 1
    return v, Fraction(numerator, denominator)


def int_valuation(p: int, r: Fraction | int) -> int:
    """Return the finite valuation of a nonzero rational as a plain int."""
    return split_valuation(p, Fraction(r))[0]


def unit_residue(p: int, u: Fraction, modulus: int) -> int:
    """Reduce a p-adic unit rational modulo ``modulus`` (a power of p)."""
    return u.numerator * pow(u.denominator, -1, modulus) % modulus


def valuation(p: int, r: Fraction | int | str) -> Valuation:
    """Return the p-adic valuation of r.

    Args:
        p: A prime
        r: A rational (Fraction, int or text)

    Returns:
        Valuation with r = p^v * unit, or +inf for r = 0

    Raises:
        InvalidPrimeError: If p is not prime

    Examples:
        >>> valuation(3, 63)
        Valuation(value=2)
        >>> valuation(5, Fraction(9, 10))
        Valuation(value=-1)
    """
    check_prime(p)
    value = as_rational(r)
    if value == 0:
        return Valuation.infinite()
    return Valuation(split_valuation(p, value)[0])


def norm(p: int, r: Fraction | int | str) -> NormExponent:
    """Return |r|_p as an integer exponent.

    Examples:
        >>> norm(3, 63).render(3)
        '3^-2'
    """
    v = valuation(p, r)
    if v.value is None:
        return NormExponent(is_zero=True)
    return NormExponent(exponent=v.value)
