# SPDX-License-Identifier: MIT
"""Closed-form values of N_TI for special (p, q) and their comparison with counts.

Exact forms (q not divisible by p; q = p > 2; p = 2 with |q|_2 > 1/4) must match
the computed count. The remaining printed forms are targets or upper bounds:
a disagreement becomes a report warning, never a failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from tipgm_padic import (
    Valuation,
    int_valuation,
    split_valuation,
    sqrt_exists,
    unit_residue,
    valuation,
)

from .errors import ClosedFormMismatchError
from .model import ModelParams


class ClosedFormKind(str, Enum):
    EXACT = "exact"
    TARGET = "target"
    UPPER_BOUND = "upper-bound"


@dataclass(frozen=True, slots=True)
class ClosedForm:
    """A closed-form value for N_TI.

    Attributes:
        case: ``case1`` .. ``case6``
        kind: How the value relates to N_TI
        value: The printed value
    """

    case: str
    kind: ClosedFormKind
    value: int

    def agrees(self, n_ti: int) -> bool:
        if self.kind is ClosedFormKind.UPPER_BOUND:
            return n_ti <= self.value
        return n_ti == self.value


def _multiples_sum(q: int, step: int, upper: int) -> int:
    """Return sum of C(q, step*s) for s = 1..upper."""
    return sum(comb(q, step * s) for s in range(1, upper + 1))


def _case3_value(p: int, n: int, pole: bool) -> int:
    q = p * n
    total = _multiples_sum(q, p, n // 2)
    middle = comb(q, q // 2) if q % 2 == 0 else 0
    if pole:
        return 2 ** (q - 1) + middle - total
    return 2**q - 1 + middle - 2 * total


def _case4_bound(p: int, s: int, n: int) -> int:
    q = p**s * n
    if n == 1:
        return 2**q - 1
    total = _multiples_sum(q, p**s, n // 2)
    middle = comb(q, q // 2) if n % 2 == 0 else 0
    return 2**q - 1 + middle - 2 * total


def closed_form(params: ModelParams) -> ClosedForm | None:
    """Return the closed form covering params, or None.

    theta = 1 and theta outside E_p have no closed form.

    Examples:
        >>> closed_form(ModelParams(5, 5, Fraction(11)))
        ClosedForm(case='case2', kind=<ClosedFormKind.EXACT: 'exact'>, value=31)
    """
    if params.is_degenerate or not params.in_domain:
        return None
    p, q = params.p, params.q

    if p == 2:
        if int_valuation(2, q) <= 1:
            return ClosedForm("case5", ClosedFormKind.EXACT, 1)
        if q == 4:
            return ClosedForm("case6", ClosedFormKind.UPPER_BOUND, 15)
        return None

    if q % p:
        return ClosedForm("case1", ClosedFormKind.EXACT, 1)
    if q == p:
        value = 2 ** (q - 1) if params.is_pole else 2**q - 1
        return ClosedForm("case2", ClosedFormKind.EXACT, value)

    s = int_valuation(p, q)
    n = q // p**s
    if n > p - 1:
        return None
    if s == 1:
        return ClosedForm("case3", ClosedFormKind.TARGET, _case3_value(p, n, params.is_pole))
    return ClosedForm("case4", ClosedFormKind.UPPER_BOUND, _case4_bound(p, s, n))


def _case4_exactness(params: ModelParams, n_ti: int) -> str | None:
    """For q = p^s (s > 1): N_TI = 2^q - 1 iff 0 < |t^2 - q^2| <= |q^2|."""
    p, q, t = params.p, params.q, params.t
    s = int_valuation(p, q)
    if q != p**s:
        return None
    difference = t * t - q * q
    predicted = difference != 0 and valuation(p, difference) >= Valuation(2 * s)
    if predicted == (n_ti == 2**q - 1):
        return None
    return (
        f"Closed form case4 predicts N_TI {'=' if predicted else '!='} 2^q - 1 "
        f"for v(t^2 - q^2) = {valuation(p, difference)}, computed N_TI = {n_ti}"
    )


def in_printed_balls(theta: Fraction) -> bool:
    """Return True if theta lies in the printed 2-adic balls for q = 4.

    The balls are B(29, 2^-7), B(93, 2^-8), B(165, 2^-8) and
    B(5 + 2^s, 2^-(s+3)) for s >= 1.
    """
    if valuation(2, theta - 29) >= Valuation(7):
        return True
    if valuation(2, theta - 93) >= Valuation(8) or valuation(2, theta - 165) >= Valuation(8):
        return True
    if theta == 5:
        return False
    s, unit = split_valuation(2, theta - 5)
    return s >= 1 and unit_residue(2, unit, 8) == 1


def _case6_checks(params: ModelParams, n_ti: int) -> list[str]:
    theta = params.theta
    product = (theta - 5) * (theta + 3)
    root_exists = product != 0 and sqrt_exists(2, product).exists

    warnings = []
    if root_exists and n_ti != 15:
        warnings.append(
            f"sqrt((theta-5)(theta+3)) exists for theta = {theta} but N_TI = {n_ti}, not 15"
        )
    printed = in_printed_balls(theta)
    if printed != root_exists:
        if product == 0:
            factored = "0"
        else:
            v, unit = split_valuation(2, product)
            factored = f"2^{v} * {unit}"
        warnings.append(
            f"Printed 2-adic ball list {'contains' if printed else 'excludes'} theta = {theta}, "
            f"but (theta-5)(theta+3) = {product} = {factored} "
            f"{'has a' if root_exists else 'has no'} square root in Q_2"
        )
    return warnings


def check_closed_form(params: ModelParams, n_ti: int) -> tuple[ClosedForm | None, tuple[str, ...]]:
    """Compare a computed N_TI with the closed form covering params.

    Returns:
        The closed form (or None) and the warnings the comparison produced

    Raises:
        ClosedFormMismatchError: If an exact closed form disagrees
    """
    form = closed_form(params)
    if form is None:
        return None, ()

    warnings: list[str] = []
    if not form.agrees(n_ti):
        if form.kind is ClosedFormKind.EXACT:
            raise ClosedFormMismatchError(form.case, form.value, n_ti)
        relation = "at most" if form.kind is ClosedFormKind.UPPER_BOUND else "exactly"
        warnings.append(
            f"Closed form {form.case} gives {relation} {form.value}, computed N_TI = {n_ti}"
        )
    if form.case == "case4":
        note = _case4_exactness(params, n_ti)
        if note:
            warnings.append(note)
    if form.case == "case6":
        warnings.extend(_case6_checks(params, n_ti))
    return form, tuple(warnings)
