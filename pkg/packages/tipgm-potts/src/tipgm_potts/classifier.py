# SPDX-License-Identifier: MIT
"""Counting translation-invariant p-adic Gibbs measures for k = 2.

For each subset size m <= q/2 the number of roots of the reduced quadratic in
E_p minus {1} comes from the rule tree, from solving the quadratic, or from
both with a cross-check. Each root yields C(q, m) boundary fields; a root for
m and its inverse for q - m describe the same measure, which halves the
middle class when q is even:

    N_TI = 1 + sum_{m < q/2} count(m) C(q, m) + [q even] count(q/2) C(q, q/2) / 2
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import comb
from typing import Any, Literal, TypeVar, get_args

from tipgm_padic import (
    DEFAULT_PRECISION,
    PadicExpansion,
    SqrtVerdict,
    as_rational,
    expand,
    log_p,
    valuation,
)

from .closed_form import ClosedForm, check_closed_form
from .errors import (
    PoleAtInputError,
    RootOutsideDomainError,
    RuleDirectMismatchError,
    UnmatchedCaseError,
    UnsupportedTreeOrderError,
)
from .model import ModelParams, check_subset_size, in_ep
from .quadratic import KvRoot, RootSet, solve_kv
from .rules import DEGENERATE_RULE, Rule, RuleOutcome, evaluate_rules

Method = Literal["rules", "direct", "both"]
METHODS: tuple[str, ...] = get_args(Method)

DIRECT_RULE = "direct"
OUTSIDE_DOMAIN_RULE = "outside-domain"

T = TypeVar("T")


@dataclass(frozen=True, slots=True)
class MClassification:
    """Root count for one subset size.

    Attributes:
        m: Subset size
        count: Roots in E_p minus {1} (0, 1 or 2)
        rule_fired: Rule identifier, ``direct``, ``degenerate`` or ``outside-domain``
        multiplicity: C(q, m), the boundary fields per root
        roots: The counted roots (empty for the rules-only method)
        conditional: The sqrt(D) verdict when one was needed
        root_set: Every root of the quadratic, when it was solved
        method: How the count was obtained
    """

    m: int
    count: int
    rule_fired: str
    multiplicity: int
    roots: tuple[KvRoot, ...] = ()
    conditional: SqrtVerdict | None = None
    root_set: RootSet | None = field(default=None, compare=False)
    method: str = "both"


@dataclass(frozen=True, slots=True)
class TipgmReport:
    """Classification of all translation-invariant Gibbs measures for one theta.

    Attributes:
        params: The model parameters
        per_m: One classification per m = 1..q//2
        n_ti: Number of translation-invariant Gibbs measures, mu_0 included
        mu0_bounded: True iff mu_0 is bounded (p does not divide q)
        nontrivial_bounded: True iff every other measure is bounded; vacuous
            when mu_0 is the only measure
        closed_form: The closed form covering (p, q), if any
        warnings: Notes from closed-form checks and domain overrides
    """

    params: ModelParams
    per_m: tuple[MClassification, ...]
    n_ti: int
    mu0_bounded: bool = False
    nontrivial_bounded: bool = False
    closed_form: ClosedForm | None = None
    warnings: tuple[str, ...] = ()

    @property
    def phase_transition(self) -> bool:
        """True if more than one translation-invariant measure exists."""
        return self.n_ti > 1


@dataclass(frozen=True, slots=True)
class MeasureClass:
    """A family of measures sharing a root, with its log boundary field.

    Attributes:
        size: m, the number of coordinates equal to the root
        complement_size: q - m
        multiplicity: C(q, m)
        root: The root z
        h: log_p(z), the boundary field on the m coordinates
        complement_h: -h, the field of the same measure seen from q - m
    """

    size: int
    complement_size: int
    multiplicity: int
    root: KvRoot
    h: PadicExpansion
    complement_h: PadicExpansion

    @property
    def self_paired(self) -> bool:
        return self.size == self.complement_size


@dataclass(frozen=True, slots=True)
class PartitionTrajectory:
    """Norms |Z_n|_p of the partition function on balls V_n, n = 1..n_max.

    |Z_n|_p = p^-e_n with e_(n+1) = 2 |V_n| v(a) for a = m(z - 1) + q + theta - 1.

    Attributes:
        m: Subset size of the root
        root: The root as text
        base_valuation: v(a)
        exponents: e_1..e_(n_max)
        ball_sizes: |V_0|..|V_(n_max - 1)|
    """

    m: int
    root: str
    base_valuation: int
    exponents: tuple[int, ...]
    ball_sizes: tuple[int, ...]

    @property
    def unbounded(self) -> bool:
        """True if |Z_n|_p tends to 0, so the measure is unbounded."""
        return self.base_valuation > 0


def _require_order_two(params: ModelParams) -> None:
    if params.k != 2:
        raise UnsupportedTreeOrderError(params.k)


def multiplicity(q: int, m: int) -> int:
    """Return C(q, m), the number of boundary fields per root for subset size m."""
    check_subset_size(q, m)
    return comb(q, m)


def ball_size(k: int, n: int) -> int:
    """Return |V_n|, the number of vertices within distance n of the root."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k == 1:
        return 1 + 2 * n
    return 1 + (k + 1) * (k**n - 1) // (k - 1)


def sphere_size(k: int, n: int) -> int:
    """Return |W_n|, the number of vertices at distance exactly n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return 1
    return (k + 1) * k ** (n - 1)


def _classify_direct(
    params: ModelParams, m: int, precision: int, multiplicity: int
) -> MClassification:
    root_set = solve_kv(params, m, precision)
    if params.is_degenerate:
        return MClassification(m, 0, DEGENERATE_RULE, multiplicity, (), None, root_set, "direct")
    roots = root_set.in_ep_minus_one
    count = len(roots)
    verdict = root_set.sqrt_verdict
    return MClassification(m, count, DIRECT_RULE, multiplicity, roots, verdict, root_set, "direct")


def _from_outcome(m: int, outcome: RuleOutcome, multiplicity: int) -> MClassification:
    return MClassification(
        m,
        outcome.count,
        outcome.rule_id,
        multiplicity,
        conditional=outcome.conditional,
        method="rules",
    )


def classify_m(
    params: ModelParams,
    m: int,
    method: Method = "both",
    precision: int = DEFAULT_PRECISION,
    rules: Sequence[Rule] | None = None,
) -> MClassification:
    """Count the roots in E_p minus {1} for subset size m.

    Args:
        params: Model parameters with k = 2
        m: Subset size, 1 <= m <= q // 2
        method: ``rules``, ``direct`` or ``both``
        precision: Digits of each root's expansion
        rules: Case list to use instead of the one for params.p

    Raises:
        UnsupportedTreeOrderError: If k != 2
        InvalidSubsetSizeError: If m is outside 1..q//2
        UnmatchedCaseError: If the rule tree fails on an in-domain theta
        RuleDirectMismatchError: If ``both`` finds the two counts differ

    Examples:
        >>> classify_m(ModelParams(5, 5, Fraction(6)), 1).count
        1
    """
    _require_order_two(params)
    check_subset_size(params.q, m, params.q // 2)
    if method not in METHODS:
        raise ValueError(f"method must be one of {', '.join(METHODS)}, got {method!r}")
    count_multiplicity = comb(params.q, m)

    if method == "rules":
        return _from_outcome(m, evaluate_rules(params, m, rules), count_multiplicity)

    direct = _classify_direct(params, m, precision, count_multiplicity)
    if method == "direct":
        return direct

    try:
        outcome = evaluate_rules(params, m, rules)
    except UnmatchedCaseError:
        if params.in_domain:
            raise
        return replace(direct, rule_fired=OUTSIDE_DOMAIN_RULE, method="both")

    from_rules = _from_outcome(m, outcome, count_multiplicity)
    if outcome.count != direct.count:
        raise RuleDirectMismatchError(from_rules, direct, direct.root_set)
    return MClassification(
        m,
        direct.count,
        outcome.rule_id,
        count_multiplicity,
        direct.roots,
        outcome.conditional or direct.conditional,
        direct.root_set,
        "both",
    )


def n_ti_from_counts(q: int, counts: Sequence[int]) -> int:
    """Return N_TI from the per-m counts for m = 1..q//2."""
    total = 1
    for m, count in enumerate(counts, start=1):
        if 2 * m == q:
            total += count * comb(q, m) // 2
        else:
            total += count * comb(q, m)
    return total


def boundedness_report(params: ModelParams, report: TipgmReport) -> TipgmReport:
    """Fill in the boundedness verdicts.

    mu_0 is bounded iff p does not divide q. Every other translation-invariant
    measure is unbounded, so nontrivial_bounded is True exactly when n_ti == 1,
    where it holds vacuously: there is no nontrivial measure to be unbounded.
    """
    return replace(
        report,
        mu0_bounded=params.q % params.p != 0,
        nontrivial_bounded=report.n_ti == 1,
    )


def count_tipgm(
    params: ModelParams,
    method: Method = "both",
    precision: int = DEFAULT_PRECISION,
    rules: Sequence[Rule] | None = None,
) -> TipgmReport:
    """Classify every subset size and count the translation-invariant measures.

    Raises:
        UnsupportedTreeOrderError: If k != 2
        PrecisionExhaustedError: If theta came from a coupling at too low precision
        RuleDirectMismatchError: If ``both`` finds a disagreement
        ClosedFormMismatchError: If an exact closed form disagrees with the count

    Examples:
        >>> count_tipgm(ModelParams(5, 5, Fraction(6))).n_ti
        16
    """
    _require_order_two(params)
    params.require_decidable()

    per_m = tuple(
        classify_m(params, m, method, precision, rules) for m in range(1, params.q // 2 + 1)
    )
    n_ti = n_ti_from_counts(params.q, [item.count for item in per_m])

    warnings: list[str] = []
    if params.is_degenerate:
        warnings.append("theta = 1 (zero coupling): mu_0 is the only measure")
    elif not params.in_domain:
        warnings.append(
            f"theta = {params.theta} is outside E_{params.p}; counts come from the quadratic alone"
        )

    form, closed_warnings = check_closed_form(params, n_ti)
    warnings.extend(closed_warnings)

    report = TipgmReport(params, per_m, n_ti, closed_form=form, warnings=tuple(warnings))
    return boundedness_report(params, report)


def ordered_map(
    func: Callable[..., T], arguments: Sequence[tuple[Any, ...]], workers: int | None = None
) -> list[T]:
    """Apply func to each argument tuple, in processes when workers > 1.

    Results come back in input order whatever the worker count; the first
    exception raised by func propagates.
    """
    if not workers or workers <= 1 or len(arguments) <= 1:
        return [func(*args) for args in arguments]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(func, *args) for args in arguments]
        return [future.result() for future in futures]


def count_many(
    points: Sequence[ModelParams],
    method: Method = "both",
    precision: int = DEFAULT_PRECISION,
    workers: int | None = None,
) -> list[TipgmReport]:
    """Run count_tipgm on every point, returning reports in input order."""
    return ordered_map(count_tipgm, [(params, method, precision) for params in points], workers)


def _root_value(root: KvRoot) -> PadicExpansion | Fraction:
    return root.exact if root.exact is not None else root.expansion


def measure_classes(
    report: TipgmReport, precision: int = DEFAULT_PRECISION
) -> tuple[MeasureClass, ...]:
    """Return one class per counted root with its boundary field h = log_p(z).

    Reports built with the rules-only method carry no roots and give no classes.
    """
    p, q = report.params.p, report.params.q
    classes = []
    for item in report.per_m:
        for root in item.roots:
            h = log_p(p, _root_value(root), precision)
            classes.append(MeasureClass(item.m, q - item.m, item.multiplicity, root, h, -h))
    return tuple(classes)


def partition_norm_trajectory(
    params: ModelParams,
    m: int,
    root: KvRoot | Fraction | int | str,
    n_max: int,
) -> PartitionTrajectory:
    """Return the exponents e_n of |Z_n|_p along the balls V_n for a root z.

    Args:
        params: Model parameters
        m: Subset size the root belongs to
        root: A root in E_p minus {1}
        n_max: Number of balls

    Raises:
        UnsupportedTreeOrderError: If k != 2
        RootOutsideDomainError: If the root is 1 or outside E_p
        PoleAtInputError: If m(z - 1) + q + theta - 1 vanishes

    Examples:
        >>> trajectory = partition_norm_trajectory(ModelParams(5, 5, Fraction(6)), 1, 16, 3)
        >>> trajectory.exponents
        (4, 16, 40)
    """
    _require_order_two(params)
    check_subset_size(params.q, m)
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    p, q, t = params.p, params.q, params.t

    if isinstance(root, KvRoot):
        if not root.in_ep_minus_one:
            raise RootOutsideDomainError(root)
        label = str(root)
        if root.exact is not None:
            base = m * (root.exact - 1) + q + t
            if base == 0:
                raise PoleAtInputError("m*(z - 1) + q + theta - 1", root.exact)
            base_valuation = int(valuation(p, base))
        else:
            digits = root.expansion.precision
            shifted = expand(p, m, digits) * (root.expansion - expand(p, 1, digits))
            base_valuation = int((shifted + expand(p, q + t, digits)).valuation)
    else:
        z = as_rational(root)
        if z == 1 or not in_ep(p, z):
            raise RootOutsideDomainError(z)
        label = str(z)
        base = m * (z - 1) + q + t
        if base == 0:
            raise PoleAtInputError("m*(z - 1) + q + theta - 1", z)
        base_valuation = int(valuation(p, base))

    sizes = tuple(ball_size(params.k, n) for n in range(n_max))
    exponents = tuple(2 * size * base_valuation for size in sizes)
    return PartitionTrajectory(m, label, base_valuation, exponents, sizes)
