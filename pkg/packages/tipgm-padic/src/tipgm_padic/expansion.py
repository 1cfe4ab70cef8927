# SPDX-License-Identifier: MIT
"""Truncated canonical p-adic expansions with precision tracking.

A nonzero expansion is p^v * u where u is a unit known modulo p^N, N being the
relative precision. Its digits are the base-p digits of u, so d0 is never 0.
The zero element (from an exact zero) is exact: it has no valuation and acts
as an identity for addition.

Precision propagation:
- add/sub keep the smaller absolute precision and report only the digits
  that survive cancellation
- mul/div/pow keep the smaller relative precision
"""

from __future__ import annotations

import re
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .errors import (
    PadicZeroDivisionError,
    PrecisionExhaustedError,
    PrimeMismatchError,
)
from .rational import (
    Valuation,
    as_rational,
    check_prime,
    split_valuation,
    unit_residue,
)

DEFAULT_PRECISION = 64

ArithOp = Literal["add", "sub", "mul", "div", "pow"]

# p^v * (d0 + d1*p + d2*p^2) + O(p^w)
_DISPLAY_PATTERN = re.compile(
    r"^(?P<prime>\d+)\^(?P<valuation>-?\d+) \* \((?P<terms>[^)]*)\) "
    r"\+ O\((?P=prime)\^(?P<absolute>-?\d+)\)$"
)
_TERM_PATTERN = re.compile(r"^(?P<digit>\d+)(?:\*(?P<prime>\d+)(?:\^(?P<power>\d+))?)?$")


def _strip_p(p: int, n: int) -> tuple[int, int]:
    """Return (v, n / p^v) for a nonzero integer n."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


@dataclass(frozen=True, slots=True, eq=False)
class PadicExpansion:
    """A p-adic number p^v * (d0 + d1*p + ...) known modulo p^(v+N).

    Attributes:
        prime: The prime p
        valuation: v, or +inf for the zero element
        unit: Integer in [0, p^N) whose base-p digits are d0..d(N-1)
        precision: N, the number of known digits
    """

    prime: int
    valuation: Valuation
    unit: int
    precision: int

    @classmethod
    def zero(cls, p: int, precision: int = DEFAULT_PRECISION) -> PadicExpansion:
        """Return the exact zero element."""
        return cls(p, Valuation.infinite(), 0, precision)

    @property
    def is_zero(self) -> bool:
        return self.valuation.is_infinite

    @property
    def digits(self) -> tuple[int, ...]:
        """Base-p digits d0..d(N-1), least significant first."""
        out = []
        rest = self.unit
        for _ in range(self.precision):
            rest, digit = divmod(rest, self.prime)
            out.append(digit)
        return tuple(out)

    @property
    def absolute_precision(self) -> int | None:
        """Exponent w such that the value is known modulo p^w (None when exact zero)."""
        if self.valuation.value is None:
            return None
        return self.valuation.value + self.precision

    def to_rational(self) -> Fraction:
        """Reconstruct sum d_j p^(v+j) as an exact rational."""
        if self.valuation.value is None:
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.prime) ** self.valuation.value

    def truncate(self, precision: int) -> PadicExpansion:
        """Drop digits beyond ``precision`` (never adds digits)."""
        keep = min(self.precision, precision)
        if keep < 1:
            raise PrecisionExhaustedError("truncate", keep)
        return PadicExpansion(self.prime, self.valuation, self.unit % self.prime**keep, keep)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PadicExpansion):
            return NotImplemented
        if self.prime != other.prime or self.valuation != other.valuation:
            return False
        overlap = min(self.precision, other.precision)
        modulus = self.prime**overlap
        return self.unit % modulus == other.unit % modulus

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: PadicExpansion) -> PadicExpansion:
        return add(self, other)

    def __sub__(self, other: PadicExpansion) -> PadicExpansion:
        return sub(self, other)

    def __mul__(self, other: PadicExpansion) -> PadicExpansion:
        return mul(self, other)

    def __truediv__(self, other: PadicExpansion) -> PadicExpansion:
        return div(self, other)

    def __pow__(self, exponent: int) -> PadicExpansion:
        return power(self, exponent)

    def __neg__(self) -> PadicExpansion:
        if self.is_zero:
            return self
        modulus = self.prime**self.precision
        return PadicExpansion(self.prime, self.valuation, -self.unit % modulus, self.precision)

    def __str__(self) -> str:
        """Display as ``p^v * (d0 + d1*p + ...) + O(p^(v+N))``."""
        if self.valuation.value is None:
            return "0"
        p = self.prime
        terms = []
        for j, digit in enumerate(self.digits):
            if j == 0:
                terms.append(str(digit))
            elif j == 1:
                terms.append(f"{digit}*{p}")
            else:
                terms.append(f"{digit}*{p}^{j}")
        body = " + ".join(terms)
        return f"{p}^{self.valuation.value} * ({body}) + O({p}^{self.absolute_precision})"

    def compact(self) -> str:
        """Display the residue as a single number, e.g. ``81 + O(5^3)``."""
        v = self.valuation.value
        if v is None:
            return "0"
        p = self.prime
        if v >= 0:
            leading = str(self.unit * p**v)
        else:
            leading = f"{self.unit}/{p}^{-v}"
        return f"{leading} + O({p}^{self.absolute_precision})"


def expand(p: int, r: Fraction | int | str, precision: int = DEFAULT_PRECISION) -> PadicExpansion:
    """Return the canonical expansion of r with ``precision`` digits.

    Args:
        p: A prime
        r: The rational to expand
        precision: Number of digits N (at least 1)

    Returns:
        PadicExpansion whose digits reconstruct r modulo p^(v+N)

    Raises:
        InvalidPrimeError: If p is not prime
        ValueError: If precision < 1

    Examples:
        >>> expand(3, 64, 4).digits
        (1, 0, 1, 2)
        >>> expand(2, -1, 4).digits
        (1, 1, 1, 1)
    """
    check_prime(p)
    if precision < 1:
        raise ValueError(f"Precision must be at least 1, got {precision}")
    value = as_rational(r)
    if value == 0:
        return PadicExpansion.zero(p, precision)
    v, u = split_valuation(p, value)
    return PadicExpansion(p, Valuation(v), unit_residue(p, u, p**precision), precision)


def parse_expansion(text: str) -> PadicExpansion:
    """Parse the display format produced by ``str(PadicExpansion)``.

    Raises:
        ValueError: If the text is not in display format
    """
    match = _DISPLAY_PATTERN.match(text.strip())
    if not match:
        raise ValueError(f"Not a p-adic expansion: {text!r}")
    p = check_prime(int(match.group("prime")))
    v = int(match.group("valuation"))
    precision = int(match.group("absolute")) - v

    unit = 0
    terms = match.group("terms").split(" + ")
    for j, term in enumerate(terms):
        term_match = _TERM_PATTERN.match(term)
        if not term_match:
            raise ValueError(f"Malformed digit term {term!r}")
        unit += int(term_match.group("digit")) * p**j
    if len(terms) != precision:
        raise ValueError(f"Expected {precision} digits, found {len(terms)}")
    return PadicExpansion(p, Valuation(v), unit, precision)


def _same_prime(a: PadicExpansion, b: PadicExpansion) -> int:
    if a.prime != b.prime:
        raise PrimeMismatchError(a.prime, b.prime)
    return a.prime


def _combine(a: PadicExpansion, b: PadicExpansion, sign: int, operation: str) -> PadicExpansion:
    p = _same_prime(a, b)
    if b.is_zero:
        return a
    if a.is_zero:
        return b if sign > 0 else -b

    va, vb = int(a.valuation), int(b.valuation)
    absolute = min(va + a.precision, vb + b.precision)
    base = min(va, vb)
    modulus = p ** (absolute - base)
    total = (a.unit * p ** (va - base) + sign * b.unit * p ** (vb - base)) % modulus
    if total == 0:
        raise PrecisionExhaustedError(operation, absolute)

    shift, unit = _strip_p(p, total)
    v = base + shift
    return PadicExpansion(p, Valuation(v), unit, absolute - v)


def add(a: PadicExpansion, b: PadicExpansion) -> PadicExpansion:
    """Return a + b at the smaller absolute precision."""
    return _combine(a, b, 1, "add")


def sub(a: PadicExpansion, b: PadicExpansion) -> PadicExpansion:
    """Return a - b, raising PrecisionExhausted if every known digit cancels."""
    return _combine(a, b, -1, "sub")


def mul(a: PadicExpansion, b: PadicExpansion) -> PadicExpansion:
    """Return a * b at the smaller relative precision."""
    p = _same_prime(a, b)
    precision = min(a.precision, b.precision)
    if a.is_zero or b.is_zero:
        return PadicExpansion.zero(p, precision)
    modulus = p**precision
    return PadicExpansion(
        p,
        Valuation(int(a.valuation) + int(b.valuation)),
        a.unit * b.unit % modulus,
        precision,
    )


def div(a: PadicExpansion, b: PadicExpansion) -> PadicExpansion:
    """Return a / b at the smaller relative precision.

    Raises:
        PadicZeroDivisionError: If b is the zero element
    """
    p = _same_prime(a, b)
    if b.is_zero:
        raise PadicZeroDivisionError("Division by the zero expansion")
    precision = min(a.precision, b.precision)
    if a.is_zero:
        return PadicExpansion.zero(p, precision)
    modulus = p**precision
    return PadicExpansion(
        p,
        Valuation(int(a.valuation) - int(b.valuation)),
        a.unit * pow(b.unit, -1, modulus) % modulus,
        precision,
    )


def power(a: PadicExpansion, exponent: int) -> PadicExpansion:
    """Return a ** exponent for an integer exponent."""
    p = a.prime
    if exponent == 0:
        return PadicExpansion(p, Valuation(0), 1, a.precision)
    if exponent < 0:
        return div(PadicExpansion(p, Valuation(0), 1, a.precision), power(a, -exponent))
    if a.is_zero:
        return a
    modulus = p**a.precision
    return PadicExpansion(
        p,
        Valuation(int(a.valuation) * exponent),
        pow(a.unit, exponent, modulus),
        a.precision,
    )


_BINARY_OPS: dict[str, Callable[[PadicExpansion, PadicExpansion], PadicExpansion]] = {
    "add": add,
    "sub": sub,
    "mul": mul,
    "div": div,
}


def arith(op: ArithOp, a: PadicExpansion, b: PadicExpansion | int) -> PadicExpansion:
    """Apply a field operation to expansions.

    Args:
        op: One of add, sub, mul, div, pow
        a: Left operand
        b: Right operand, or the integer exponent for pow

    Returns:
        The result with propagated precision

    Raises:
        ValueError: For an unknown op or mismatched operand kinds
        PrimeMismatchError: If the operands use different primes
        PadicZeroDivisionError: On division by zero
        PrecisionExhaustedError: When cancellation consumes all known digits

    Examples:
        >>> arith("add", expand(3, 1), expand(3, 2)).valuation
        Valuation(value=1)
    """
    if op == "pow":
        if not isinstance(b, int) or isinstance(b, bool):
            raise ValueError("pow needs an integer exponent")
        return power(a, b)
    if op not in _BINARY_OPS:
        raise ValueError(f"Unknown operation: {op}")
    if not isinstance(b, PadicExpansion):
        raise ValueError(f"{op} needs two expansions")
    return _BINARY_OPS[op](a, b)
