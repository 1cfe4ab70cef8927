# SPDX-License-Identifier: MIT
"""Parameter types and options shared by several commands."""

from __future__ import annotations

from collections.abc import Callable
from fractions import Fraction
from typing import Any, Optional, TypeVar

import click

from tipgm_padic import InvalidPrimeError, InvalidRationalError, check_prime, parse_rational

from .config import FORMATS

F = TypeVar("F", bound=Callable[..., Any])


class RationalType(click.ParamType):
    """A rational number written ``a`` or ``a/b``."""

    name = "rational"

    def convert(
        self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> Fraction:
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(str(value))
        except InvalidRationalError as e:
            self.fail(e.message, param, ctx)


class RationalListType(click.ParamType):
    """Comma-separated rationals; an empty string is an empty list."""

    name = "rationals"

    def convert(
        self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> tuple[Fraction, ...]:
        if isinstance(value, tuple):
            return value
        items = [item.strip() for item in str(value).split(",") if item.strip()]
        try:
            return tuple(parse_rational(item) for item in items)
        except InvalidRationalError as e:
            self.fail(e.message, param, ctx)


class IntListType(click.ParamType):
    """Comma-separated integers, with ``a..b`` ranges (``1..3,5``)."""

    name = "integers"

    def convert(
        self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> tuple[int, ...]:
        if isinstance(value, tuple):
            return value
        numbers: list[int] = []
        for item in str(value).split(","):
            item = item.strip()
            if not item:
                continue
            try:
                if ".." in item:
                    start, stop = item.split("..", 1)
                    numbers.extend(range(int(start), int(stop) + 1))
                else:
                    numbers.append(int(item))
            except ValueError:
                self.fail(f"{item!r} is not an integer or a range a..b", param, ctx)
        return tuple(numbers)


class PrimeType(click.ParamType):
    name = "prime"

    def convert(
        self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]
    ) -> int:
        try:
            return check_prime(int(value))
        except ValueError:
            self.fail(f"{value!r} is not an integer", param, ctx)
        except InvalidPrimeError as e:
            self.fail(e.message, param, ctx)


RATIONAL = RationalType()
RATIONAL_LIST = RationalListType()
INT_LIST = IntListType()
PRIME = PrimeType()


def prime_option(func: F) -> F:
    return click.option("-p", "--prime", "p", type=PRIME, required=True, help="The prime p.")(func)


def states_option(func: F) -> F:
    return click.option(
        "-q",
        "--states",
        "q",
        type=click.IntRange(min=2),
        required=True,
        help="Number of spin states q.",
    )(func)


def precision_option(func: F) -> F:
    return click.option(
        "--precision",
        type=int,
        default=None,
        help="Digits of p-adic expansions (default 64, or TIPGM_PRECISION).",
    )(func)


def format_option(func: F) -> F:
    return click.option(
        "--format",
        "output_format",
        type=click.Choice(FORMATS),
        default=None,
        help="Output format (default table, or TIPGM_FORMAT).",
    )(func)


def threads_option(func: F) -> F:
    return click.option(
        "--threads",
        type=click.IntRange(min=1),
        default=None,
        help="Worker processes (default one per CPU, or TIPGM_THREADS).",
    )(func)


def domain_option(func: F) -> F:
    return click.option(
        "--allow-out-of-domain",
        is_flag=True,
        help="Accept theta outside E_p.",
    )(func)
