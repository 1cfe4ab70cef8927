# SPDX-License-Identifier: MIT
"""Single p-adic computations: norms, expansions, square roots, exp and log."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Callable, Optional

import click

from tipgm_padic import (
    PadicError,
    PadicExpansion,
    exp_p,
    expand,
    log_p,
    norm,
    sqrt,
    sqrt_exists,
    valuation,
)

from ..main import Context, echo_detail, echo_info, fail, pass_context
from ..options import RATIONAL, format_option, prime_option

STYLES = ("compact", "digits")


def _precision_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--precision",
        type=click.IntRange(min=1),
        default=None,
        help="Digits to compute (default: the configured precision).",
    )(func)


def _style_option(default: str) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    return click.option(
        "--style",
        type=click.Choice(STYLES),
        default=default,
        show_default=True,
        help="Print the residue (compact) or the digit expansion.",
    )


def _emit(p: int, x: Fraction, result: PadicExpansion, style: str, output_format: str) -> None:
    if output_format == "json":
        document = {"p": p, "x": str(x), "result": str(result), "compact": result.compact()}
        echo_info(json.dumps(document))
    else:
        echo_info(result.compact() if style == "compact" else str(result))


@click.group()
def padic() -> None:
    """Exact p-adic arithmetic on rationals.

    \b
    Examples:
        tipgm padic norm -p 3 63
        tipgm padic expand -p 3 64 --precision 4
        tipgm padic exp -p 5 5 --precision 3
    """


@padic.command("norm")
@prime_option
@click.argument("x", type=RATIONAL)
@format_option
@pass_context
def norm_command(ctx: Context, p: int, x: Fraction, output_format: Optional[str]) -> None:
    """Print |x|_p as p^-v (or 0)."""
    config = ctx.run_config(format=output_format)
    try:
        rendered = norm(p, x).render(p)
    except PadicError as e:
        fail(e)
    if config.format == "json":
        v = valuation(p, x)
        echo_info(json.dumps({"p": p, "x": str(x), "valuation": v.value, "norm": rendered}))
    else:
        echo_info(rendered)


@padic.command("expand")
@prime_option
@click.argument("x", type=RATIONAL)
@_precision_option
@_style_option("digits")
@format_option
@pass_context
def expand_command(
    ctx: Context,
    p: int,
    x: Fraction,
    precision: Optional[int],
    style: str,
    output_format: Optional[str],
) -> None:
    """Print the canonical expansion of x."""
    config = ctx.run_config(format=output_format)
    try:
        result = expand(p, x, precision or config.precision)
    except PadicError as e:
        fail(e)
    _emit(p, x, result, style, config.format)


@padic.command("sqrt")
@prime_option
@click.argument("x", type=RATIONAL)
@_precision_option
@_style_option("compact")
@format_option
@pass_context
def sqrt_command(
    ctx: Context,
    p: int,
    x: Fraction,
    precision: Optional[int],
    style: str,
    output_format: Optional[str],
) -> None:
    """Print the canonical square root of x, or exit 2 if there is none."""
    config = ctx.run_config(format=output_format)
    try:
        if ctx.verbose:
            echo_detail(f"sqrt test: {sqrt_exists(p, x).reason.value}")
        result = sqrt(p, x, precision or config.precision)
    except PadicError as e:
        fail(e)
    _emit(p, x, result, style, config.format)


@padic.command("exp")
@prime_option
@click.argument("x", type=RATIONAL)
@_precision_option
@_style_option("compact")
@format_option
@pass_context
def exp_command(
    ctx: Context,
    p: int,
    x: Fraction,
    precision: Optional[int],
    style: str,
    output_format: Optional[str],
) -> None:
    """Print exp_p(x) for v(x) >= 1 (v(x) >= 2 when p = 2)."""
    config = ctx.run_config(format=output_format)
    try:
        result = exp_p(p, x, precision or config.precision)
    except PadicError as e:
        fail(e)
    _emit(p, x, result, style, config.format)


@padic.command("log")
@prime_option
@click.argument("x", type=RATIONAL)
@_precision_option
@_style_option("compact")
@format_option
@pass_context
def log_command(
    ctx: Context,
    p: int,
    x: Fraction,
    precision: Optional[int],
    style: str,
    output_format: Optional[str],
) -> None:
    """Print log_p(x) for |x - 1|_p < 1."""
    config = ctx.run_config(format=output_format)
    try:
        result = log_p(p, x, precision or config.precision)
    except PadicError as e:
        fail(e)
    _emit(p, x, result, style, config.format)
