# SPDX-License-Identifier: MIT
"""Exception hierarchy for the Potts model classifier.

Input-domain failures extend ``tipgm_padic.DomainError``; failures of the
computation itself extend ``PottsError``.
"""

from __future__ import annotations

from typing import Any

from tipgm_padic import DomainError, PadicError


class PottsError(PadicError):
    """Base exception for Potts model errors."""

    pass


class InvalidParamsError(DomainError):
    """Raised when model parameters fail validation.

    Attributes:
        field: Name of the offending parameter
        value: The rejected value
    """

    def __init__(self, field: str, value: Any, message: str = ""):
        self.field = field
        self.value = value
        self.message = message or f"Invalid {field}: {value!r}"
        super().__init__(self.message)


class InvalidSubsetSizeError(DomainError):
    """Raised when m lies outside the range an operation accepts."""

    def __init__(self, m: int, q: int, upper: int):
        self.m = m
        self.q = q
        self.upper = upper
        self.message = f"m must satisfy 1 <= m <= {upper} for q = {q}, got {m}"
        super().__init__(self.message)


class UnsupportedTreeOrderError(DomainError):
    """Raised when a classification is requested for k != 2."""

    def __init__(self, k: int):
        self.k = k
        self.message = f"Classification is only available for trees of order 2, got k = {k}"
        super().__init__(self.message)


class RootOutsideDomainError(DomainError):
    """Raised when a root outside E_p minus {1} is passed where one inside is required."""

    def __init__(self, root: Any):
        self.root = root
        self.message = f"Root {root} is not in E_p \\ {{1}}"
        super().__init__(self.message)


class PoleAtInputError(PottsError):
    """Raised when a rational map is evaluated at a pole.

    Attributes:
        expression: The denominator that vanished
        point: The input at which it vanished
    """

    def __init__(self, expression: str, point: Any):
        self.expression = expression
        self.point = point
        self.message = f"Pole at {point}: {expression} = 0"
        super().__init__(self.message)


class UnmatchedCaseError(PottsError):
    """Raised when the rule tree does not select exactly one case.

    Attributes:
        params: The model parameters
        m: Subset size being classified
        matched: Rule identifiers whose guards held (empty when none did)
    """

    def __init__(self, params: Any, m: int, matched: list[str], reason: str = ""):
        self.params = params
        self.m = m
        self.matched = matched
        if reason:
            detail = reason
        elif matched:
            detail = f"several cases matched: {', '.join(matched)}"
        else:
            detail = "no case matched"
        self.message = f"Rule tree failed for {params} at m = {m}: {detail}"
        super().__init__(self.message)


class RuleDirectMismatchError(PottsError):
    """Raised when the rule tree and the direct solver disagree.

    Attributes:
        rules: Classification from the rule tree
        direct: Classification from solving the quadratic
        roots: The full root set used by the direct solver
    """

    def __init__(self, rules: Any, direct: Any, roots: Any):
        self.rules = rules
        self.direct = direct
        self.roots = roots
        self.message = (
            f"Rule {rules.rule_fired} gives {rules.count} root(s) at m = {rules.m}, "
            f"direct solver gives {direct.count} ({roots})"
        )
        super().__init__(self.message)


class ClosedFormMismatchError(PottsError):
    """Raised when an exact closed-form count disagrees with the computed count."""

    def __init__(self, case: str, expected: int, actual: int):
        self.case = case
        self.expected = expected
        self.actual = actual
        self.message = f"Closed form {case} gives N_TI = {expected}, computed {actual}"
        super().__init__(self.message)


class SearchSpaceTooLargeError(PottsError):
    """Raised when an exhaustive residue search exceeds its candidate limit."""

    def __init__(self, candidates: int, limit: int):
        self.candidates = candidates
        self.limit = limit
        self.message = f"Search space of {candidates} candidates exceeds the limit of {limit}"
        super().__init__(self.message)


class OddValuationShortcutError(PottsError):
    """Raised by the brute-force square-root check when the valuation alone decides."""

    def __init__(self, p: int, value: Any, valuation: int):
        self.p = p
        self.value = value
        self.valuation = valuation
        self.message = f"{value} has odd {p}-adic valuation {valuation}; no residue search needed"
        super().__init__(self.message)


class ReportValidationError(PottsError):
    """Raised when a report document fails schema validation.

    Attributes:
        errors: List of validation errors with field paths and messages
    """

    def __init__(self, errors: list[Any]):
        self.errors = errors
        self.message = f"Report validation failed with {len(errors)} error(s)"
        if errors:
            self.message += f": {errors[0].field}: {errors[0].message}"
        super().__init__(self.message)
