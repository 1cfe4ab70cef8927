# SPDX-License-Identifier: MIT
"""Potts model parameters, boundary fields and the translation-invariant recursion.

A translation-invariant boundary field is a vector z in Q_p^(q-1) (z_i = exp_p(h_i),
z_q normalised to 1). It defines a Gibbs measure iff it is a fixed point of

    z_i = (((theta - 1) z_i + sum(z) + 1) / (theta + sum(z)))^k

and every component lies in E_p. On fields that equal z on m coordinates and 1
elsewhere the system reduces to the one-dimensional map f_m.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction

from tipgm_padic import (
    DEFAULT_PRECISION,
    PadicExpansion,
    PrecisionExhaustedError,
    ZeroInputError,
    as_rational,
    check_prime,
    exp_p,
    int_valuation,
    split_valuation,
)

from .errors import InvalidParamsError, InvalidSubsetSizeError, PoleAtInputError

# Decisions read the unit part mod 8 at most, so 3 digits past a valuation suffice
_DECISION_MARGIN = 3


def ep_threshold(p: int) -> int:
    """Return the minimal valuation of z - 1 for z in E_p."""
    return 2 if p == 2 else 1


def in_ep(p: int, z: Fraction | int | str | PadicExpansion) -> bool:
    """Return True if z lies in E_p, the image of exp_p.

    Args:
        p: A prime
        z: A nonzero rational or expansion

    Returns:
        True iff valuation(z - 1) >= 1 (p odd) or >= 2 (p = 2)

    Raises:
        ZeroInputError: If z is zero
        PrecisionExhaustedError: If an expansion is too short to decide

    Examples:
        >>> in_ep(3, 64)
        True
        >>> in_ep(2, 3)
        False
    """
    threshold = ep_threshold(p)
    if isinstance(z, PadicExpansion):
        if z.is_zero:
            raise ZeroInputError("in_ep")
        if int(z.valuation) != 0:
            return False
        modulus = p**z.precision
        difference = (z.unit - 1) % modulus
        if difference == 0:
            if z.precision >= threshold:
                return True
            raise PrecisionExhaustedError("in_ep", z.precision)
        return int_valuation(p, difference) >= threshold

    value = as_rational(z)
    if value == 0:
        raise ZeroInputError("in_ep")
    if value == 1:
        return True
    return split_valuation(p, value - 1)[0] >= threshold


def check_subset_size(q: int, m: int, upper: int | None = None) -> int:
    """Return m if 1 <= m <= upper (default q - 1)."""
    limit = q - 1 if upper is None else upper
    if isinstance(m, bool) or not isinstance(m, int) or not 1 <= m <= limit:
        raise InvalidSubsetSizeError(m, q, limit)
    return m


@dataclass(frozen=True, slots=True)
class ModelParams:
    """Parameters of the q-state p-adic Potts model on the Cayley tree of order k.

    Attributes:
        p: The prime
        q: Number of spin states (at least 2)
        theta: exp_p(J) for the coupling constant J, as an exact rational
        k: Order of the tree (classification requires k = 2)
        allow_out_of_domain: Accept theta outside E_p
        theta_precision: Absolute p-adic precision of theta when it was computed
            from a coupling; None when theta is exact

    Raises:
        InvalidPrimeError: If p is not prime
        InvalidParamsError: If q, k or theta are invalid
    """

    p: int
    q: int
    theta: Fraction
    k: int = 2
    allow_out_of_domain: bool = False
    theta_precision: int | None = None

    def __post_init__(self) -> None:
        check_prime(self.p)
        if isinstance(self.q, bool) or not isinstance(self.q, int) or self.q < 2:
            raise InvalidParamsError("q", self.q, f"q must be an integer >= 2, got {self.q!r}")
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise InvalidParamsError("k", self.k, f"k must be an integer >= 1, got {self.k!r}")
        object.__setattr__(self, "theta", as_rational(self.theta))
        if self.theta == 0:
            raise InvalidParamsError("theta", self.theta, "theta = exp_p(J) is never zero")
        if not self.allow_out_of_domain and not self.in_domain:
            raise InvalidParamsError(
                "theta",
                self.theta,
                f"theta = {self.theta} is not in E_{self.p} "
                f"(need v(theta - 1) >= {ep_threshold(self.p)}); "
                "use the out-of-domain override to proceed",
            )
        if self.theta_precision is not None and self.theta_precision < 1:
            raise InvalidParamsError("theta_precision", self.theta_precision)

    @classmethod
    def from_coupling(
        cls,
        p: int,
        q: int,
        coupling: Fraction | int | str,
        precision: int = DEFAULT_PRECISION,
        k: int = 2,
    ) -> ModelParams:
        """Build parameters from the coupling J via theta = exp_p(J).

        theta is stored as its integer representative modulo p^precision and
        the precision is recorded; classification then checks that every
        decision is reachable at that precision.

        Raises:
            OutsideDomainError: If J is outside the exp domain
        """
        value = as_rational(coupling)
        if value == 0:
            return cls(p, q, Fraction(1), k=k)
        theta = exp_p(p, value, precision)
        return cls(p, q, theta.to_rational(), k=k, theta_precision=theta.absolute_precision)

    @property
    def t(self) -> Fraction:
        """theta - 1."""
        return self.theta - 1

    @property
    def in_domain(self) -> bool:
        """True if theta lies in E_p (theta = 1 included)."""
        return in_ep(self.p, self.theta)

    @property
    def is_degenerate(self) -> bool:
        """True for theta = 1, i.e. zero coupling."""
        return self.theta == 1

    @property
    def is_pole(self) -> bool:
        """True for theta in {1 - q, 1 + q}."""
        return self.t * self.t == self.q * self.q

    def require_decidable(self) -> None:
        """Check that theta's precision suffices for every classification decision.

        Raises:
            PrecisionExhaustedError: If a deciding quantity is not known well enough
        """
        if self.theta_precision is None:
            return
        t, q = self.t, self.q
        quantities = [t, t - q, t + q]
        quantities += [t * t - 4 * m * (q - m) for m in range(1, q // 2 + 1)]
        for quantity in quantities:
            if quantity == 0:
                raise PrecisionExhaustedError("classification", self.theta_precision)
            if split_valuation(self.p, quantity)[0] + _DECISION_MARGIN >= self.theta_precision:
                raise PrecisionExhaustedError("classification", self.theta_precision)

    def __str__(self) -> str:
        return f"p={self.p}, q={self.q}, k={self.k}, theta={self.theta}"


@dataclass(frozen=True, slots=True)
class BoundaryField:
    """A translation-invariant boundary field z = (z_1, ..., z_(q-1)).

    Attributes:
        z: Nonzero rational components
    """

    z: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = tuple(as_rational(component) for component in self.z)
        if not values:
            raise InvalidParamsError("z", self.z, "Boundary field needs at least one component")
        if any(value == 0 for value in values):
            raise InvalidParamsError("z", self.z, "Boundary field components must be nonzero")
        object.__setattr__(self, "z", values)

    @classmethod
    def ones(cls, q: int) -> BoundaryField:
        """Return the field of mu_0."""
        return cls(tuple(Fraction(1) for _ in range(q - 1)))

    @classmethod
    def from_subset(
        cls, q: int, members: Iterable[int], value: Fraction | int | str
    ) -> BoundaryField:
        """Return the field equal to ``value`` on ``members`` (1-based) and 1 elsewhere."""
        chosen = set(members)
        if not chosen <= set(range(1, q)):
            raise InvalidParamsError("members", sorted(chosen), f"Indices must lie in 1..{q - 1}")
        z = as_rational(value)
        return cls(tuple(z if i in chosen else Fraction(1) for i in range(1, q)))

    def __len__(self) -> int:
        return len(self.z)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.z)

    def __str__(self) -> str:
        return "(" + ", ".join(str(component) for component in self.z) + ")"


@dataclass(frozen=True, slots=True)
class FixedPointReport:
    """Verdict of verify_fixed_point.

    Attributes:
        is_fixed: Exact equality of the field and its image
        in_ep_componentwise: E_p membership per component
        image: The right-hand side of the recursion at the field
    """

    is_fixed: bool
    in_ep_componentwise: tuple[bool, ...]
    image: BoundaryField | None = field(default=None, compare=False)

    @property
    def all_in_ep(self) -> bool:
        return all(self.in_ep_componentwise)

    @property
    def defines_measure(self) -> bool:
        """True iff the field is fixed and lies in E_p^(q-1)."""
        return self.is_fixed and self.all_in_ep


def f_m_eval(params: ModelParams, m: int, z: Fraction | int | str) -> Fraction:
    """Evaluate f_m(z) = (((theta + m - 1) z + q - m) / (m z + q - m - 1 + theta))^k.

    Raises:
        InvalidSubsetSizeError: If m is outside 1..q-1
        PoleAtInputError: If the denominator vanishes

    Examples:
        >>> f_m_eval(ModelParams(3, 3, Fraction(4)), 1, 4)
        Fraction(4, 1)
    """
    check_subset_size(params.q, m)
    value = as_rational(z)
    theta, q = params.theta, params.q
    denominator = m * value + q - m - 1 + theta
    if denominator == 0:
        raise PoleAtInputError("m*z + q - m - 1 + theta", value)
    return (((theta + m - 1) * value + q - m) / denominator) ** params.k


def recursion_rhs(params: ModelParams, z: BoundaryField) -> BoundaryField:
    """Apply the translation-invariant recursion to a boundary field.

    Raises:
        InvalidParamsError: If the field does not have q - 1 components
        PoleAtInputError: If theta + sum(z) vanishes
    """
    if len(z) != params.q - 1:
        raise InvalidParamsError(
            "z", str(z), f"Expected {params.q - 1} components for q = {params.q}, got {len(z)}"
        )
    theta = params.theta
    total = sum(z.z, Fraction(0))
    denominator = theta + total
    if denominator == 0:
        raise PoleAtInputError("theta + sum(z)", str(z))
    return BoundaryField(
        tuple((((theta - 1) * zi + total + 1) / denominator) ** params.k for zi in z.z)
    )


def verify_fixed_point(params: ModelParams, z: BoundaryField) -> FixedPointReport:
    """Check a boundary field exactly: fixed-point equality and E_p membership."""
    image = recursion_rhs(params, z)
    return FixedPointReport(
        is_fixed=image == z,
        in_ep_componentwise=tuple(in_ep(params.p, component) for component in z.z),
        image=image,
    )
