# SPDX-License-Identifier: MIT
"""Exact p-adic arithmetic over the rationals.

This package provides valuations and norms of rationals, truncated canonical
p-adic expansions with precision tracking, square roots, and the p-adic
exponential and logarithm. Everything is exact: values are Fractions and norms
are integer exponents.

Example:
    >>> from tipgm_padic import expand, norm, sqrt_exists, exp_p
    >>>
    >>> expand(3, 64, 4).digits
    (1, 0, 1, 2)
    >>>
    >>> norm(3, 63).render(3)
    '3^-2'
    >>>
    >>> sqrt_exists(2, 17).exists
    True
    >>>
    >>> exp_p(5, 5, 3).compact()
    '81 + O(5^3)'
"""

__version__ = "0.1.0"

from .errors import (
    PadicError,
    DomainError,
    InvalidPrimeError,
    InvalidRationalError,
    ZeroInputError,
    NoSquareRootError,
    OutsideDomainError,
    PrimeMismatchError,
    PadicZeroDivisionError,
    PrecisionExhaustedError,
)
from .rational import (
    Rational,
    RATIONAL_PATTERN,
    Valuation,
    NormExponent,
    parse_rational,
    as_rational,
    is_prime,
    check_prime,
    split_valuation,
    int_valuation,
    unit_residue,
    valuation,
    norm,
)
from .expansion import (
    DEFAULT_PRECISION,
    ArithOp,
    PadicExpansion,
    expand,
    parse_expansion,
    add,
    sub,
    mul,
    div,
    power,
    arith,
)
from .functions import (
    SqrtReason,
    SqrtVerdict,
    DomainKind,
    ConvergenceDomain,
    sqrt_exists,
    sqrt,
    exp_p,
    log_p,
)

__all__ = [
    # Errors
    "PadicError",
    "DomainError",
    "InvalidPrimeError",
    "InvalidRationalError",
    "ZeroInputError",
    "NoSquareRootError",
    "OutsideDomainError",
    "PrimeMismatchError",
    "PadicZeroDivisionError",
    "PrecisionExhaustedError",
    # Rationals, valuations and norms
    "Rational",
    "RATIONAL_PATTERN",
    "Valuation",
    "NormExponent",
    "parse_rational",
    "as_rational",
    "is_prime",
    "check_prime",
    "split_valuation",
    "int_valuation",
    "unit_residue",
    "valuation",
    "norm",
    # Expansions
    "DEFAULT_PRECISION",
    "ArithOp",
    "PadicExpansion",
    "expand",
    "parse_expansion",
    "add",
    "sub",
    "mul",
    "div",
    "power",
    "arith",
    # Analytic functions
    "SqrtReason",
    "SqrtVerdict",
    "DomainKind",
    "ConvergenceDomain",
    "sqrt_exists",
    "sqrt",
    "exp_p",
    "log_p",
]
