# SPDX-License-Identifier: MIT
"""Translation-invariant p-adic Gibbs measures of the q-state Potts model.

This package works on the Cayley tree of order 2:
- Model parameters, boundary fields and the fixed-point recursion
- The reduced quadratic per subset size and its roots in E_p
- The norm-comparison rule tree and the direct solver, cross-checked
- N_TI counts, closed forms, boundedness and partition-function norms
- Brute-force residue oracles and JSON report documents

Example:
    >>> from fractions import Fraction
    >>> from tipgm_potts import ModelParams, count_tipgm, verify_fixed_point, BoundaryField
    >>>
    >>> report = count_tipgm(ModelParams(5, 5, Fraction(6)))
    >>> report.n_ti, report.mu0_bounded
    (16, False)
    >>>
    >>> params = ModelParams(3, 3, Fraction(-2), k=3)
    >>> verify_fixed_point(params, BoundaryField((Fraction(64), Fraction(-125)))).is_fixed
    True
"""

__version__ = "0.1.0"

from .errors import (
    PottsError,
    InvalidParamsError,
    InvalidSubsetSizeError,
    UnsupportedTreeOrderError,
    RootOutsideDomainError,
    PoleAtInputError,
    UnmatchedCaseError,
    RuleDirectMismatchError,
    ClosedFormMismatchError,
    SearchSpaceTooLargeError,
    OddValuationShortcutError,
    ReportValidationError,
)
from .model import (
    ModelParams,
    BoundaryField,
    FixedPointReport,
    ep_threshold,
    in_ep,
    check_subset_size,
    f_m_eval,
    recursion_rhs,
    verify_fixed_point,
)
from .quadratic import (
    QuadraticKV,
    RootKind,
    SymbolicRoot,
    KvRoot,
    RootSet,
    kv_coeffs,
    solve_kv,
)
from .rules import (
    DEGENERATE_RULE,
    RuleInputs,
    Rule,
    RuleOutcome,
    ODD_PRIME_RULES,
    TWO_ADIC_RULES,
    rules_for,
    evaluate_rules,
)
from .closed_form import (
    ClosedFormKind,
    ClosedForm,
    closed_form,
    check_closed_form,
    in_printed_balls,
)
from .classifier import (
    Method,
    METHODS,
    DIRECT_RULE,
    OUTSIDE_DOMAIN_RULE,
    MClassification,
    TipgmReport,
    MeasureClass,
    PartitionTrajectory,
    multiplicity,
    ball_size,
    sphere_size,
    classify_m,
    n_ti_from_counts,
    boundedness_report,
    count_tipgm,
    count_many,
    ordered_map,
    measure_classes,
    partition_norm_trajectory,
)
from .oracle import (
    SEARCH_LIMIT,
    ResidueSolutionSet,
    GridSpec,
    Mismatch,
    MismatchReport,
    brute_sqrt_residues,
    brute_sqrt_exists,
    brute_fixed_points_mod,
    pattern_violations,
    default_grid,
    check_point,
    crosscheck,
)
from .schema import REPORT_SCHEMA, EXPANSION_PATTERN
from .report import (
    ValidationErrorDetail,
    ValidationResult,
    report_to_document,
    validate_report,
    validate_report_strict,
    render_json,
    parse_report,
)

__all__ = [
    # Errors
    "PottsError",
    "InvalidParamsError",
    "InvalidSubsetSizeError",
    "UnsupportedTreeOrderError",
    "RootOutsideDomainError",
    "PoleAtInputError",
    "UnmatchedCaseError",
    "RuleDirectMismatchError",
    "ClosedFormMismatchError",
    "SearchSpaceTooLargeError",
    "OddValuationShortcutError",
    "ReportValidationError",
    # Model
    "ModelParams",
    "BoundaryField",
    "FixedPointReport",
    "ep_threshold",
    "in_ep",
    "check_subset_size",
    "f_m_eval",
    "recursion_rhs",
    "verify_fixed_point",
    # Quadratic
    "QuadraticKV",
    "RootKind",
    "SymbolicRoot",
    "KvRoot",
    "RootSet",
    "kv_coeffs",
    "solve_kv",
    # Rule tree
    "DEGENERATE_RULE",
    "RuleInputs",
    "Rule",
    "RuleOutcome",
    "ODD_PRIME_RULES",
    "TWO_ADIC_RULES",
    "rules_for",
    "evaluate_rules",
    # Closed forms
    "ClosedFormKind",
    "ClosedForm",
    "closed_form",
    "check_closed_form",
    "in_printed_balls",
    # Classification
    "Method",
    "METHODS",
    "DIRECT_RULE",
    "OUTSIDE_DOMAIN_RULE",
    "MClassification",
    "TipgmReport",
    "MeasureClass",
    "PartitionTrajectory",
    "multiplicity",
    "ball_size",
    "sphere_size",
    "classify_m",
    "n_ti_from_counts",
    "boundedness_report",
    "count_tipgm",
    "count_many",
    "ordered_map",
    "measure_classes",
    "partition_norm_trajectory",
    # Oracles
    "SEARCH_LIMIT",
    "ResidueSolutionSet",
    "GridSpec",
    "Mismatch",
    "MismatchReport",
    "brute_sqrt_residues",
    "brute_sqrt_exists",
    "brute_fixed_points_mod",
    "pattern_violations",
    "default_grid",
    "check_point",
    "crosscheck",
    # Reports
    "REPORT_SCHEMA",
    "EXPANSION_PATTERN",
    "ValidationErrorDetail",
    "ValidationResult",
    "report_to_document",
    "validate_report",
    "validate_report_strict",
    "render_json",
    "parse_report",
]
