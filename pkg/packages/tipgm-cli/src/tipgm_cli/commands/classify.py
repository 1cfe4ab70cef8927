# SPDX-License-Identifier: MIT
"""Classify the translation-invariant measures for one theta."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Optional

import click

from tipgm_padic import PadicError
from tipgm_potts import (
    METHODS,
    ModelParams,
    TipgmReport,
    count_tipgm,
    render_json,
    report_to_document,
)

from ..main import Context, echo_detail, echo_info, echo_warning, fail, pass_context
from ..options import (
    RATIONAL,
    domain_option,
    format_option,
    precision_option,
    prime_option,
    states_option,
)
from ..render import render_report_table


def _echo_details(report: TipgmReport) -> None:
    for item in report.per_m:
        line = f"m = {item.m}: {item.rule_fired} gives {item.count} root(s)"
        if item.conditional is not None:
            line += f", sqrt(D) test: {item.conditional.reason.value}"
        echo_detail(line)


@click.command()
@prime_option
@states_option
@click.option("--theta", type=RATIONAL, help="theta = exp_p(J) as a rational, e.g. 11 or -37/20.")
@click.option("--coupling", type=RATIONAL, help="The coupling J; theta is computed as exp_p(J).")
@click.option(
    "--coupling-precision",
    type=click.IntRange(min=1),
    default=None,
    help="Digits of exp_p(J) to keep (default: --precision).",
)
@click.option(
    "--method",
    type=click.Choice(METHODS),
    default="both",
    show_default=True,
    help="Count with the rule tree, the quadratic, or both cross-checked.",
)
@precision_option
@format_option
@domain_option
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Also write the JSON report to this file.",
)
@pass_context
def classify(
    ctx: Context,
    p: int,
    q: int,
    theta: Optional[Fraction],
    coupling: Optional[Fraction],
    coupling_precision: Optional[int],
    method: str,
    precision: Optional[int],
    output_format: Optional[str],
    allow_out_of_domain: bool,
    out: Optional[Path],
) -> None:
    """Count and classify the measures for one (p, q, theta).

    Prints one row per subset size m: the root count, the rule that decided
    it, the multiplicity C(q, m) and the roots as p-adic expansions, then
    N_TI, boundedness and the closed-form check.

    \b
    Examples:
        tipgm classify -p 5 -q 5 --theta 11
        tipgm classify -p 2 -q 4 --theta 29 --format json
        tipgm classify -p 5 -q 5 --coupling 5 --coupling-precision 12
    """
    if (theta is None) == (coupling is None):
        raise click.UsageError("Give exactly one of --theta and --coupling.")
    config = ctx.run_config(
        precision=precision,
        format=output_format,
        allow_out_of_domain=allow_out_of_domain or None,
    )

    try:
        if coupling is not None:
            params = ModelParams.from_coupling(
                p, q, coupling, precision=coupling_precision or config.precision
            )
        else:
            params = ModelParams(p, q, theta, allow_out_of_domain=config.allow_out_of_domain)
        report = count_tipgm(params, method, config.precision)  # type: ignore[arg-type]
        document = report_to_document(report, method)
        text = render_json(document)
    except PadicError as e:
        fail(e)

    if ctx.verbose:
        echo_detail(f"Precision: {config.precision} digits")
        _echo_details(report)
    for warning in report.warnings:
        echo_warning(warning)

    if out is not None:
        out.write_text(text + "\n")
        if ctx.verbose:
            echo_detail(f"Wrote {out}")

    if config.format == "json":
        echo_info(text)
    else:
        echo_info(render_report_table(document))
