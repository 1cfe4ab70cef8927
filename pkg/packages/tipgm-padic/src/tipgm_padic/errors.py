# SPDX-License-Identifier: MIT
"""Exception hierarchy for p-adic arithmetic."""

from __future__ import annotations

from typing import Any


class PadicError(Exception):
    """Base exception for p-adic arithmetic errors."""

    pass


class DomainError(PadicError):
    """Raised when an input lies outside the domain of an operation."""

    pass


class InvalidPrimeError(DomainError):
    """Raised when a modulus that must be prime is not."""

    def __init__(self, prime: Any, message: str = ""):
        self.prime = prime
        self.message = message or f"Not a prime: {prime}"
        super().__init__(self.message)


class InvalidRationalError(DomainError):
    """Raised when text cannot be parsed as a rational number."""

    def __init__(self, text: str, message: str = ""):
        self.text = text
        self.message = message or f"Invalid rational: {text!r} (expected 'a' or 'a/b')"
        super().__init__(self.message)


class ZeroInputError(DomainError):
    """Raised when an operation that needs a nonzero input receives zero."""

    def __init__(self, operation: str):
        self.operation = operation
        self.message = f"{operation} is undefined at zero"
        super().__init__(self.message)


class NoSquareRootError(DomainError):
    """Raised when a square root is requested for a non-square.

    Attributes:
        value: The rational whose root was requested
        verdict: The SqrtVerdict explaining why no root exists
    """

    def __init__(self, value: Any, verdict: Any):
        self.value = value
        self.verdict = verdict
        self.message = f"No square root of {value} in Q_p ({verdict.reason.value})"
        super().__init__(self.message)


class OutsideDomainError(DomainError):
    """Raised when a series is evaluated outside its convergence domain."""

    def __init__(self, value: Any, domain: Any):
        self.value = value
        self.domain = domain
        self.message = f"{value} lies outside {domain}"
        super().__init__(self.message)


class PrimeMismatchError(PadicError):
    """Raised when two expansions over different primes are combined."""

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        self.message = f"Cannot combine {left}-adic and {right}-adic expansions"
        super().__init__(self.message)


class PadicZeroDivisionError(PadicError, ZeroDivisionError):
    """Raised when dividing by an expansion that is zero."""

    pass


class PrecisionExhaustedError(PadicError):
    """Raised when a result would carry no known digits.

    Attributes:
        operation: Name of the operation that ran out of digits
        precision: Absolute precision that was available, if known
    """

    def __init__(self, operation: str, precision: int | None = None):
        self.operation = operation
        self.precision = precision
        detail = f" at absolute precision {precision}" if precision is not None else ""
        self.message = f"Precision exhausted in {operation}{detail}"
        super().__init__(self.message)
