# SPDX-License-Identifier: MIT
"""Norm-comparison rule tree counting roots in E_p minus {1}.

Each case compares integer valuations:

    a = v(m), b = v(theta - 1), c = v(q)

plus v(q - 2m) and v((theta - 1)^2 - q^2) where a case needs them. Each case has a
stable identifier (``pro13-case6``) that reports record as the rule fired. Every
input with theta in E_p, theta != 1, must satisfy exactly one guard; anything
else raises UnmatchedCaseError.

Conditional cases resolve through sqrt_exists(p, D): two roots if sqrt(D)
exists, none otherwise, one double root if D = 0.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from tipgm_padic import SqrtVerdict, Valuation, int_valuation, sqrt_exists, valuation

from .errors import UnmatchedCaseError
from .model import ModelParams

DEGENERATE_RULE = "degenerate"


@dataclass(frozen=True, slots=True)
class RuleInputs:
    """Exact valuations the rule guards compare.

    Attributes:
        p: The prime
        m: Subset size
        a: v(m)
        b: v(theta - 1)
        c: v(q)
        v_q_minus_2m: v(q - 2m), +inf when q = 2m
        v_t2_minus_q2: v((theta - 1)^2 - q^2), +inf at the poles theta = 1 +/- q
        discriminant: D = (theta - 1)^2 - 4m(q - m)
    """

    p: int
    m: int
    a: int
    b: int
    c: int
    v_q_minus_2m: Valuation
    v_t2_minus_q2: Valuation
    discriminant: Fraction

    @classmethod
    def from_params(cls, params: ModelParams, m: int) -> RuleInputs:
        p, q, t = params.p, params.q, params.t
        return cls(
            p=p,
            m=m,
            a=int_valuation(p, m),
            b=int_valuation(p, t),
            c=int_valuation(p, q),
            v_q_minus_2m=valuation(p, q - 2 * m),
            v_t2_minus_q2=valuation(p, t * t - q * q),
            discriminant=t * t - 4 * m * (q - m),
        )

    @property
    def pole(self) -> bool:
        return self.v_t2_minus_q2.is_infinite

    @property
    def q_is_2m(self) -> bool:
        return self.v_q_minus_2m.is_infinite


@dataclass(frozen=True, slots=True)
class Rule:
    """One case of the rule tree.

    Attributes:
        rule_id: Identifier such as ``pro12-4``
        guard: Predicate on RuleInputs
        count: Number of roots in E_p minus {1}, or None when it depends on sqrt(D)
        description: The guard in words
    """

    rule_id: str
    guard: Callable[[RuleInputs], bool]
    count: int | None
    description: str


@dataclass(frozen=True, slots=True)
class RuleOutcome:
    """The case that fired and its count.

    Attributes:
        rule_id: Identifier of the fired case
        count: Roots in E_p minus {1}
        conditional: The sqrt(D) verdict for conditional cases with D != 0
    """

    rule_id: str
    count: int
    conditional: SqrtVerdict | None = None


def _v(n: int) -> Valuation:
    return Valuation(n)


ODD_PRIME_RULES: tuple[Rule, ...] = (
    Rule("pro11", lambda i: i.c == 0, 0, "|q|_p = 1"),
    Rule("pro12-1", lambda i: i.c >= 1 and i.pole and i.a < i.c, 1, "pole, |m| > |q|"),
    Rule("pro12-2", lambda i: i.c >= 1 and i.pole and i.a > i.c, 0, "pole, |m| < |q|"),
    Rule(
        "pro12-3",
        lambda i: i.c >= 1
        and i.pole
        and i.a == i.c
        and (i.q_is_2m or i.v_q_minus_2m == _v(i.c)),
        0,
        "pole, |m| = |q|, q = 2m or |q - 2m| = |q|",
    ),
    Rule(
        "pro12-4",
        lambda i: i.c >= 1
        and i.pole
        and i.a == i.c
        and not i.q_is_2m
        and i.v_q_minus_2m > _v(i.c),
        1,
        "pole, |m| = |q|, 0 < |q - 2m| < |q|",
    ),
    Rule("pro13-case1", lambda i: i.c >= 1 and not i.pole and i.a < min(i.b, i.c), 2,
         "|m| > max(|theta - 1|, |q|)"),
    Rule("pro13-case2", lambda i: i.c >= 1 and not i.pole and i.b < min(i.a, i.c), 0,
         "|theta - 1| > max(|m|, |q|)"),
    Rule("pro13-case3", lambda i: i.c >= 1 and not i.pole and i.c < min(i.a, i.b), 0,
         "|q| > max(|m|, |theta - 1|)"),
    Rule("pro13-case4", lambda i: i.c >= 1 and not i.pole and i.c > i.a == i.b, 0,
         "|m| = |theta - 1| > |q|"),
    Rule("pro13-case5", lambda i: i.c >= 1 and not i.pole and i.b > i.a == i.c, 0,
         "|m| = |q| > |theta - 1|"),
    Rule(
        "pro13-case6",
        lambda i: i.c >= 1 and not i.pole and i.a > i.b == i.c and i.v_t2_minus_q2 > _v(2 * i.c),
        1,
        "|m| < |theta - 1| = |q|, |t^2 - q^2| < |q^2|",
    ),
    Rule(
        "pro13-case7",
        lambda i: i.c >= 1 and not i.pole and i.a > i.b == i.c and i.v_t2_minus_q2 == _v(2 * i.c),
        0,
        "|m| < |theta - 1| = |q|, |t^2 - q^2| = |q^2|",
    ),
    Rule(
        "pro13-case8",
        lambda i: i.c >= 1 and not i.pole and i.a == i.b == i.c
        and i.v_t2_minus_q2 == _v(2 * i.c),
        0,
        "|m| = |theta - 1| = |q|, |t^2 - q^2| = |q^2|",
    ),
    Rule(
        "pro13-case9",
        lambda i: i.c >= 1
        and not i.pole
        and i.a == i.b == i.c
        and i.v_t2_minus_q2 > _v(2 * i.c)
        and i.v_q_minus_2m == _v(i.c),
        1,
        "|m| = |theta - 1| = |q|, |t^2 - q^2| < |q^2|, |q - 2m| = |q|",
    ),
    Rule(
        "pro13-case10",
        lambda i: i.c >= 1
        and not i.pole
        and i.a == i.b == i.c
        and i.v_t2_minus_q2 > _v(2 * i.c)
        and i.v_q_minus_2m > _v(i.c),
        None,
        "|m| = |theta - 1| = |q|, |t^2 - q^2| < |q^2|, |q - 2m| < |q|",
    ),
)


TWO_ADIC_RULES: tuple[Rule, ...] = (
    Rule("pro21", lambda i: i.c <= 1, 0, "|q|_2 > 1/4"),
    Rule("pro22-1", lambda i: i.c >= 2 and i.pole and i.a < i.c and not i.q_is_2m, 1,
         "pole, |m| > |q|, q != 2m"),
    Rule("pro22-2", lambda i: i.c >= 2 and i.pole and (i.a >= i.c or i.q_is_2m), 0,
         "pole, |m| <= |q| or q = 2m"),
    Rule("pro23-case1", lambda i: i.c >= 2 and not i.pole and i.a + 2 < min(i.b, i.c), 2,
         "|4m| > max(|theta - 1|, |q|)"),
    Rule("pro23-case2", lambda i: i.c >= 2 and not i.pole and i.b < min(i.c, i.a + 2), 0,
         "|theta - 1| > max(|q|, |4m|)"),
    Rule("pro23-case3", lambda i: i.c >= 2 and not i.pole and i.c < min(i.b, i.a + 2), 0,
         "|q| > max(|theta - 1|, |4m|)"),
    Rule("pro23-case4", lambda i: i.c >= 2 and not i.pole and i.a + 2 == i.b < i.c, 0,
         "|4m| = |theta - 1| > |q|"),
    Rule("pro23-case5", lambda i: i.c >= 2 and not i.pole and i.a + 2 == i.c < i.b, 0,
         "|4m| = |q| > |theta - 1|"),
    Rule("pro23-case6", lambda i: i.c >= 2 and not i.pole and i.a + 2 == i.b == i.c, 2,
         "|4m| = |theta - 1| = |q|"),
    Rule("pro23-case7", lambda i: i.c >= 2 and not i.pole and i.a == i.b == i.c, 1,
         "|m| = |theta - 1| = |q|"),
    Rule("pro23-case8", lambda i: i.c >= 2 and not i.pole and i.a + 1 == i.b == i.c, None,
         "|2m| = |theta - 1| = |q|"),
    Rule("pro23-case9", lambda i: i.c >= 2 and not i.pole and i.b == i.c < i.a, 1,
         "|theta - 1| = |q| > |m|"),
)


def rules_for(p: int) -> tuple[Rule, ...]:
    """Return the case list for the prime p."""
    return TWO_ADIC_RULES if p == 2 else ODD_PRIME_RULES


def _resolve(rule: Rule, inputs: RuleInputs) -> RuleOutcome:
    if rule.count is not None:
        return RuleOutcome(rule.rule_id, rule.count)
    if inputs.discriminant == 0:
        return RuleOutcome(rule.rule_id, 1)
    verdict = sqrt_exists(inputs.p, inputs.discriminant)
    return RuleOutcome(rule.rule_id, 2 if verdict else 0, verdict)


def evaluate_rules(
    params: ModelParams, m: int, rules: Sequence[Rule] | None = None
) -> RuleOutcome:
    """Select the unique case for (params, m) and return its count.

    Args:
        params: Model parameters with theta in E_p
        m: Subset size
        rules: Case list to use instead of the one for params.p

    Raises:
        UnmatchedCaseError: If theta is outside E_p, or not exactly one guard holds
    """
    if params.is_degenerate:
        return RuleOutcome(DEGENERATE_RULE, 0)
    if not params.in_domain:
        raise UnmatchedCaseError(params, m, [], reason="theta is outside E_p")

    inputs = RuleInputs.from_params(params, m)
    matched = [rule for rule in (rules if rules is not None else rules_for(params.p))
               if rule.guard(inputs)]
    if len(matched) != 1:
        raise UnmatchedCaseError(params, m, [rule.rule_id for rule in matched])
    return _resolve(matched[0], inputs)
