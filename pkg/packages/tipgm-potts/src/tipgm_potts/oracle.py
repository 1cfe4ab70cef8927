# SPDX-License-Identifier: MIT
"""Brute-force verifiers for the square-root test, the fixed-point equation and the rule tree.

Everything here enumerates residues instead of reasoning about valuations, so
it is slow and shares no decision logic with ``tipgm_padic.functions`` or
``tipgm_potts.rules``.

Fixed points are searched in the congruence obtained by clearing denominators:

    z_i (theta + sum z)^k == ((theta - 1) z_i + sum z + 1)^k  (mod p^N)

A residue is stable if some lift of it also solves the congruence modulo
p^(N+1). Stability is necessary for lifting to a p-adic solution, not
sufficient. Since theta - 1 is divisible by p, the congruence only pins the
components down to a few digits, and stable residues with unequal non-1
components do occur (see pattern_violations).
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from tipgm_padic import ZeroInputError, as_rational, check_prime, split_valuation, unit_residue

from .classifier import MClassification, classify_m, ordered_map
from .errors import (
    InvalidParamsError,
    OddValuationShortcutError,
    SearchSpaceTooLargeError,
    UnmatchedCaseError,
)
from .model import BoundaryField, ModelParams, ep_threshold
from .quadratic import RootSet
from .rules import Rule

# Candidates p^(N(q-1)) an exhaustive fixed-point search may visit
SEARCH_LIMIT = 10**6


@lru_cache(maxsize=4096)
def brute_sqrt_residues(p: int, u: int, n: int) -> frozenset[int]:
    """Return every y mod p^n with y^2 == u (mod p^n).

    Residues are grown one digit at a time: each root modulo p^(j+1) reduces
    to a root modulo p^j, so trying all p digits on every surviving root
    enumerates them all.

    Examples:
        >>> sorted(brute_sqrt_residues(2, 17, 5))
        [7, 9, 23, 25]
    """
    check_prime(p)
    if n < 1:
        raise InvalidParamsError("N", n, f"N must be >= 1, got {n}")
    roots = {y for y in range(p) if (y * y - u) % p == 0}
    modulus = p
    for _ in range(1, n):
        next_modulus = modulus * p
        roots = {
            y + digit * modulus
            for y in roots
            for digit in range(p)
            if ((y + digit * modulus) ** 2 - u) % next_modulus == 0
        }
        modulus = next_modulus
    return frozenset(roots)


def brute_sqrt_exists(p: int, a: Fraction | int | str, n: int) -> bool:
    """Decide whether a is a square in Q_p by searching residues modulo p^n.

    Args:
        p: A prime
        a: Nonzero rational
        n: Modulus exponent (at least 3 for p = 2)

    Raises:
        ZeroInputError: If a is zero
        OddValuationShortcutError: If the valuation of a is odd
        InvalidParamsError: If n is too small to decide

    Examples:
        >>> brute_sqrt_exists(5, 6, 2)
        True
        >>> brute_sqrt_exists(2, 768, 5)
        False
    """
    check_prime(p)
    value = as_rational(a)
    if value == 0:
        raise ZeroInputError("brute_sqrt_exists")
    if p == 2 and n < 3:
        raise InvalidParamsError("N", n, "N must be >= 3 for p = 2")
    v, unit = split_valuation(p, value)
    if v % 2:
        raise OddValuationShortcutError(p, value, v)
    return bool(brute_sqrt_residues(p, unit_residue(p, unit, p**n), n))


@dataclass(frozen=True, slots=True)
class ResidueSolutionSet:
    """Residue vectors solving the cleared fixed-point congruence.

    Attributes:
        prime: The prime p
        exponent: N, the modulus is p^N
        solutions: Every solution modulo p^N, sorted
        stable: Solutions with a lift solving the congruence modulo p^(N+1)
    """

    prime: int
    exponent: int
    solutions: tuple[tuple[int, ...], ...]
    stable: tuple[tuple[int, ...], ...]

    @property
    def modulus(self) -> int:
        return self.prime**self.exponent

    def reduce(self, z: BoundaryField) -> tuple[int, ...]:
        """Return the residues of a p-integral boundary field modulo p^N."""
        residues = []
        for component in z:
            if split_valuation(self.prime, component)[0] < 0:
                raise InvalidParamsError("z", str(z), f"{component} is not {self.prime}-integral")
            residues.append(
                component.numerator * pow(component.denominator, -1, self.modulus) % self.modulus
            )
        return tuple(residues)

    def __contains__(self, z: object) -> bool:
        if isinstance(z, BoundaryField):
            z = self.reduce(z)
        return z in self.stable


def _theta_residue(p: int, theta: Fraction, modulus: int) -> int:
    if theta.denominator % p == 0:
        raise InvalidParamsError("theta", theta, f"theta must be {p}-integral for a residue search")
    return theta.numerator * pow(theta.denominator, -1, modulus) % modulus


def _solves(z: Sequence[int], theta: int, k: int, modulus: int) -> bool:
    total = sum(z)
    left = pow(theta + total, k, modulus)
    return all(
        (zi * left - pow((theta - 1) * zi + total + 1, k, modulus)) % modulus == 0 for zi in z
    )


def _search_slice(
    p: int, n: int, k: int, theta_fine: int, width: int, first: int
) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Search every vector whose first component is ``first``."""
    modulus = p**n
    fine_modulus = modulus * p
    theta = theta_fine % modulus
    solutions, stable = [], []
    for rest in product(range(modulus), repeat=width - 1):
        z = (first, *rest)
        if not _solves(z, theta, k, modulus):
            continue
        solutions.append(z)
        for digits in product(range(p), repeat=width):
            lift = tuple(zi + d * modulus for zi, d in zip(z, digits, strict=True))
            if _solves(lift, theta_fine, k, fine_modulus):
                stable.append(z)
                break
    return solutions, stable


def brute_fixed_points_mod(
    params: ModelParams, n: int, workers: int | None = None
) -> ResidueSolutionSet:
    """Enumerate residue solutions of the fixed-point congruence modulo p^n.

    The search is split by the first component; with ``workers`` > 1 the
    slices run in separate processes and are merged in sorted order.

    Raises:
        SearchSpaceTooLargeError: If p^(n(q-1)) exceeds SEARCH_LIMIT
        InvalidParamsError: If theta is not p-integral or n < 1
    """
    p, q, k = params.p, params.q, params.k
    if n < 1:
        raise InvalidParamsError("N", n, f"N must be >= 1, got {n}")
    candidates = p ** (n * (q - 1))
    if candidates > SEARCH_LIMIT:
        raise SearchSpaceTooLargeError(candidates, SEARCH_LIMIT)

    theta_fine = _theta_residue(p, params.theta, p ** (n + 1))
    firsts = range(p**n)
    slices = ordered_map(
        _search_slice,
        [(p, n, k, theta_fine, q - 1, first) for first in firsts],
        workers,
    )
    solutions = sorted(z for found, _ in slices for z in found)
    stable = sorted(z for _, kept in slices for z in kept)
    return ResidueSolutionSet(p, n, tuple(solutions), tuple(stable))


def pattern_violations(solution_set: ResidueSolutionSet) -> tuple[tuple[int, ...], ...]:
    """Return stable residues whose components other than 1 are not all equal."""
    violations = []
    for z in solution_set.stable:
        others = {zi for zi in z if zi != 1}
        if len(others) > 1:
            violations.append(z)
    return tuple(violations)


@dataclass(frozen=True, slots=True)
class GridSpec:
    """A grid of (p, q, theta) points for cross-checking.

    theta runs over 1 + p^v * u for the given valuations and units, plus the
    poles 1 +/- q when they lie in E_p. Empty valuations or units select the
    per-prime defaults.

    Attributes:
        primes: Primes to check
        qs: Numbers of states
        valuations: v(theta - 1) values
        units: Unit parts of theta - 1
        include_poles: Add theta = 1 +/- q
    """

    primes: tuple[int, ...]
    qs: tuple[int, ...]
    valuations: tuple[int, ...] = ()
    units: tuple[int, ...] = ()
    include_poles: bool = True

    def thetas(self, p: int, q: int) -> tuple[Fraction, ...]:
        valuations = self.valuations or ((2, 3, 4) if p == 2 else (1, 2, 3))
        units = self.units or ((1, -1, 3, -3) if p == 2 else (1, -1, 2, -2))
        values = [Fraction(1 + p**v * u) for v in valuations for u in units]
        if self.include_poles and split_valuation(p, Fraction(q))[0] >= ep_threshold(p):
            values += [Fraction(1 + q), Fraction(1 - q)]
        return tuple(dict.fromkeys(value for value in values if value != 0))

    def points(self) -> Iterable[ModelParams]:
        for p in self.primes:
            for q in self.qs:
                for theta in self.thetas(p, q):
                    yield ModelParams(p, q, theta, allow_out_of_domain=True)


def default_grid() -> GridSpec:
    """Return the full grid: p in {2, 3, 5, 7}, 2 <= q <= 12, three valuations by four units."""
    return GridSpec(primes=(2, 3, 5, 7), qs=tuple(range(2, 13)))


@dataclass(frozen=True, slots=True)
class Mismatch:
    """A subset size where the rule tree and the quadratic disagree.

    Attributes:
        params: The model parameters
        m: Subset size
        rules: The rule tree's classification, None if no case matched
        direct: The direct classification
        roots: Every root of the quadratic
        reason: What went wrong
    """

    params: ModelParams
    m: int
    rules: MClassification | None
    direct: MClassification
    roots: RootSet | None = field(default=None, compare=False)
    reason: str = ""


@dataclass(frozen=True, slots=True)
class MismatchReport:
    """Outcome of a cross-check run.

    Attributes:
        mismatches: Every disagreement, in grid order
        points: Number of (p, q, theta) points checked
        classifications: Number of (p, q, theta, m) comparisons
    """

    mismatches: tuple[Mismatch, ...] = ()
    points: int = 0
    classifications: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_point(
    params: ModelParams, rules: Sequence[Rule] | None = None
) -> tuple[Mismatch, ...]:
    """Compare the rule tree with the quadratic for every m <= q // 2."""
    mismatches = []
    for m in range(1, params.q // 2 + 1):
        direct = classify_m(params, m, "direct")
        try:
            from_rules = classify_m(params, m, "rules", rules=rules)
        except UnmatchedCaseError as exc:
            mismatches.append(Mismatch(params, m, None, direct, direct.root_set, exc.message))
            continue
        if from_rules.count != direct.count:
            mismatches.append(
                Mismatch(
                    params,
                    m,
                    from_rules,
                    direct,
                    direct.root_set,
                    f"{from_rules.rule_fired} counts {from_rules.count}, "
                    f"quadratic has {direct.count}",
                )
            )
    return tuple(mismatches)


def crosscheck(
    grid: GridSpec | Iterable[ModelParams],
    rules: Sequence[Rule] | None = None,
    workers: int | None = None,
) -> MismatchReport:
    """Run the rule tree against the quadratic over a grid or a list of points.

    Points are checked in parallel when ``workers`` > 1 and the default case
    lists are used; injected case lists run in-process. Mismatches are returned
    in grid order.

    Examples:
        >>> crosscheck(GridSpec(primes=(5,), qs=(5,), valuations=(1,), units=(1,))).ok
        True
    """
    candidates = grid.points() if isinstance(grid, GridSpec) else grid
    points = [params for params in candidates if params.in_domain and not params.is_degenerate]
    if rules is None:
        results = ordered_map(check_point, [(params,) for params in points], workers)
    else:
        results = [check_point(params, rules) for params in points]
    return MismatchReport(
        mismatches=tuple(mismatch for found in results for mismatch in found),
        points=len(points),
        classifications=sum(params.q // 2 for params in points),
    )
