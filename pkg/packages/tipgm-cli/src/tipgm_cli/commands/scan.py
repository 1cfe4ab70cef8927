# SPDX-License-Identifier: MIT
"""Scan a list or grid of theta values, optionally cross-checking the rule tree."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

import click

from tipgm_padic import PadicError
from tipgm_potts import (
    METHODS,
    GridSpec,
    MismatchReport,
    ModelParams,
    count_tipgm,
    crosscheck,
    default_grid,
    ordered_map,
    report_to_document,
)

from ..main import (
    Context,
    ExitCode,
    echo_detail,
    echo_error,
    echo_info,
    echo_success,
    exit_code_for,
    fail,
    pass_context,
)
from ..options import (
    INT_LIST,
    PRIME,
    RATIONAL_LIST,
    domain_option,
    format_option,
    precision_option,
    threads_option,
)
from ..render import render_scan_table, summarize

Point = tuple[int, int, Fraction]


def scan_point(
    p: int, q: int, theta: Fraction, method: str, precision: int, allow_out_of_domain: bool
) -> dict[str, Any]:
    """Count one point; errors become part of the summary instead of stopping the scan."""
    try:
        params = ModelParams(p, q, theta, allow_out_of_domain=allow_out_of_domain)
        report = count_tipgm(params, method, precision)  # type: ignore[arg-type]
        return summarize(report_to_document(report, method))
    except PadicError as e:
        return {
            "p": p,
            "q": q,
            "theta": str(theta),
            "error": str(e),
            "exit_code": int(exit_code_for(e)),
        }


def _mismatch_lines(report: MismatchReport) -> list[str]:
    lines = []
    for mismatch in report.mismatches:
        rules = mismatch.rules.rule_fired if mismatch.rules else "no case"
        lines.append(
            f"{mismatch.params}, m = {mismatch.m}: {rules} vs direct count "
            f"{mismatch.direct.count}: {mismatch.reason}"
        )
    return lines


def _run_crosscheck(points: list[Point], workers: int, output_format: str) -> None:
    report = crosscheck(
        [ModelParams(p, q, theta, allow_out_of_domain=True) for p, q, theta in points],
        workers=workers,
    )
    lines = _mismatch_lines(report)
    if output_format == "json":
        document = {
            "points": report.points,
            "classifications": report.classifications,
            "mismatches": lines,
        }
        echo_info(json.dumps(document, indent=2))
    else:
        echo_info(f"{report.points} point(s), {report.classifications} classification(s)")

    if not report.ok:
        for line in lines:
            echo_error(line)
        raise SystemExit(ExitCode.MISMATCH)
    if output_format != "json":
        echo_success("Rule tree and quadratic agree on every point.")


def _grid_points(grid: GridSpec) -> list[Point]:
    return [(params.p, params.q, params.theta) for params in grid.points()]


@click.command()
@click.option("-p", "--prime", "p", type=PRIME, help="The prime p.")
@click.option("-q", "--states", "q", type=click.IntRange(min=2), help="Number of spin states q.")
@click.option("--theta", "thetas", type=RATIONAL_LIST, help="Comma-separated theta values.")
@click.option("--valuations", type=INT_LIST, help="v(theta - 1) values, e.g. 1..3.")
@click.option("--units", type=INT_LIST, help="Unit parts u of theta - 1 = p^v * u, e.g. 1,-1,2,-2.")
@click.option("--default-grid", "use_default_grid", is_flag=True,
              help="Scan p in {2, 3, 5, 7}, 2 <= q <= 12, three valuations by four units.")
@click.option("--crosscheck", "run_crosscheck", is_flag=True,
              help="Compare the rule tree with the quadratic instead of counting.")
@click.option("--method", type=click.Choice(METHODS), default="both", show_default=True,
              help="Counting method per point.")
@precision_option
@format_option
@threads_option
@domain_option
@pass_context
def scan(
    ctx: Context,
    p: Optional[int],
    q: Optional[int],
    thetas: Optional[tuple[Fraction, ...]],
    valuations: Optional[tuple[int, ...]],
    units: Optional[tuple[int, ...]],
    use_default_grid: bool,
    run_crosscheck: bool,
    method: str,
    precision: Optional[int],
    output_format: Optional[str],
    threads: Optional[int],
    allow_out_of_domain: bool,
) -> None:
    """Count the measures for many theta values, in input order.

    theta comes from --theta, or from 1 + p^v * u over --valuations and
    --units (per-prime defaults fill in whichever is omitted). Failed points
    are reported in place and make the exit code nonzero.

    \b
    Examples:
        tipgm scan -p 5 -q 5 --theta 6,11,16,-4
        tipgm scan -p 3 -q 6 --valuations 1..3 --units 1,-1,2,-2
        tipgm scan --default-grid --crosscheck --threads 4
    """
    config = ctx.run_config(
        precision=precision,
        format=output_format,
        threads=threads,
        allow_out_of_domain=allow_out_of_domain or None,
    )

    allow = config.allow_out_of_domain
    if use_default_grid:
        if p is not None or q is not None or thetas is not None or valuations or units:
            raise click.UsageError(
                "--default-grid cannot be combined with -p, -q or theta options."
            )
        points = _grid_points(default_grid())
        allow = True
    else:
        if p is None or q is None:
            raise click.UsageError("-p and -q are required without --default-grid.")
        if thetas is not None and (valuations or units):
            raise click.UsageError("Give either --theta or --valuations/--units, not both.")
        if thetas is None:
            grid = GridSpec((p,), (q,), valuations or (), units or (), include_poles=False)
            points = _grid_points(grid)
        else:
            points = [(p, q, theta) for theta in thetas]

    if ctx.verbose:
        echo_detail(f"{len(points)} point(s), {config.workers} worker(s)")
    if run_crosscheck:
        try:
            _run_crosscheck(points, config.workers, config.format)
        except PadicError as e:
            fail(e)
        return

    summaries = ordered_map(
        scan_point,
        [(pp, qq, theta, method, config.precision, allow) for pp, qq, theta in points],
        config.workers,
    )

    if config.format == "json":
        for summary in summaries:
            echo_info(json.dumps(summary))
    elif summaries:
        echo_info(render_scan_table(summaries))

    failed = [summary for summary in summaries if "error" in summary]
    for summary in failed:
        where = f"p = {summary['p']}, q = {summary['q']}, theta = {summary['theta']}"
        echo_error(f"{where}: {summary['error']}")
    if failed:
        raise SystemExit(failed[0]["exit_code"])
