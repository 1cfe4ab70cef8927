# SPDX-License-Identifier: MIT
"""Verify that a boundary field is a translation-invariant fixed point."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

import click

from tipgm_padic import PadicError, norm
from tipgm_potts import BoundaryField, FixedPointReport, ModelParams, verify_fixed_point

from ..main import Context, ExitCode, echo_info, echo_success, fail, pass_context
from ..options import (
    RATIONAL,
    RATIONAL_LIST,
    domain_option,
    format_option,
    prime_option,
    states_option,
)
from ..render import format_table


def _document(params: ModelParams, z: BoundaryField, result: FixedPointReport) -> dict:
    return {
        "params": {"p": params.p, "q": params.q, "k": params.k, "theta": str(params.theta)},
        "z": [str(component) for component in z],
        "image": [str(component) for component in result.image] if result.image else [],
        "is_fixed": result.is_fixed,
        "in_ep": list(result.in_ep_componentwise),
        "defines_measure": result.defines_measure,
    }


@click.command()
@prime_option
@states_option
@click.option("-k", "--order", "k", type=click.IntRange(min=1), default=2, show_default=True,
              help="Order of the Cayley tree.")
@click.option("--theta", type=RATIONAL, required=True, help="theta = exp_p(J) as a rational.")
@click.option("--z", "z", type=RATIONAL_LIST, required=True,
              help="The q - 1 components, comma-separated (e.g. 64,-125).")
@format_option
@domain_option
@pass_context
def verify(
    ctx: Context,
    p: int,
    q: int,
    k: int,
    theta: Fraction,
    z: tuple[Fraction, ...],
    output_format: Optional[str],
    allow_out_of_domain: bool,
) -> None:
    """Check a boundary field exactly against the fixed-point recursion.

    Exits 0 iff the field is fixed and every component lies in E_p, 1
    otherwise, and 5 if the recursion has a pole at the field.

    \b
    Examples:
        tipgm verify -p 3 -q 3 -k 3 --theta -2 --z 64,-125
        tipgm verify -p 3 -q 6 -k 3 --theta -37/20 --z 64,-125,1,1,1
    """
    config = ctx.run_config(format=output_format, allow_out_of_domain=allow_out_of_domain or None)
    try:
        params = ModelParams(p, q, theta, k=k, allow_out_of_domain=config.allow_out_of_domain)
        field = BoundaryField(z)
        result = verify_fixed_point(params, field)
    except PadicError as e:
        fail(e)

    if config.format == "json":
        echo_info(json.dumps(_document(params, field, result), indent=2))
    else:
        members = zip(field, result.in_ep_componentwise, strict=True)
        rows = [
            [f"z_{i}", str(component), norm(p, component - 1).render(p), "yes" if member else "no"]
            for i, (component, member) in enumerate(members, start=1)
        ]
        echo_info(str(params))
        echo_info(format_table(["", "value", "|z - 1|_p", "in E_p"], rows))
        echo_info(f"fixed: {'yes' if result.is_fixed else 'no'}")
        if not result.is_fixed and result.image is not None:
            echo_info(f"image: {result.image}")

    if not result.defines_measure:
        raise SystemExit(ExitCode.FAILURE)
    if config.format != "json":
        echo_success("The field defines a translation-invariant measure.")
