# SPDX-License-Identifier: MIT
"""CLI entry point for the tipgm command."""

from __future__ import annotations

import sys
from enum import IntEnum
from pathlib import Path
from typing import NoReturn, Optional

import click

from tipgm_padic import DomainError, PrecisionExhaustedError
from tipgm_potts import (
    ClosedFormMismatchError,
    PoleAtInputError,
    RuleDirectMismatchError,
    UnmatchedCaseError,
)

from .config import ConfigError, RunConfig, load_config


class ExitCode(IntEnum):
    """Process exit status; the values are part of the command line contract."""

    OK = 0
    FAILURE = 1
    DOMAIN = 2
    PRECISION = 3
    MISMATCH = 4
    POLE = 5


def exit_code_for(error: Exception) -> ExitCode:
    """Map a library exception to its exit code."""
    if isinstance(error, PoleAtInputError):
        return ExitCode.POLE
    if isinstance(error, (RuleDirectMismatchError, ClosedFormMismatchError, UnmatchedCaseError)):
        return ExitCode.MISMATCH
    if isinstance(error, PrecisionExhaustedError):
        return ExitCode.PRECISION
    if isinstance(error, DomainError):
        return ExitCode.DOMAIN
    return ExitCode.FAILURE


class Context:
    """State shared by the group and its commands."""

    def __init__(self) -> None:
        self.config: Optional[RunConfig] = None
        self.verbose: bool = False
        self.project_dir: Optional[Path] = None

    def load_config(self) -> RunConfig:
        """Read the defaults, pyproject and environment layers once."""
        if self.config is None:
            try:
                self.config = load_config(self.project_dir)
            except ConfigError as e:
                echo_error(str(e))
                raise SystemExit(ExitCode.FAILURE) from e
        return self.config

    def run_config(self, **overrides: object) -> RunConfig:
        """Return the loaded configuration with command line flags applied."""
        try:
            return self.load_config().with_overrides(**overrides)
        except ConfigError as e:
            echo_error(str(e))
            raise SystemExit(ExitCode.FAILURE) from e


pass_context = click.make_pass_decorator(Context, ensure=True)


def echo_error(message: str) -> None:
    """Red ``Error:`` line on stderr."""
    click.secho(f"Error: {message}", fg="red", err=True)


def echo_success(message: str) -> None:
    click.secho(message, fg="green")


def echo_info(message: str) -> None:
    click.echo(message)


def echo_warning(message: str) -> None:
    """Yellow ``Warning:`` line on stderr."""
    click.secho(f"Warning: {message}", fg="yellow", err=True)


def echo_detail(message: str) -> None:
    """Print verbose progress detail to stderr."""
    click.secho(message, dim=True, err=True)


def fail(error: Exception) -> NoReturn:
    """Report a library error and exit with its code."""
    echo_error(str(error))
    raise SystemExit(exit_code_for(error))


@click.group()
@click.version_option(package_name="tipgm-cli")
@click.option(
    "-v",
    "--verbose",
    is_flag=True,
    help="Enable verbose output.",
)
@click.option(
    "-C",
    "--directory",
    type=click.Path(exists=True, file_okay=False, path_type=Path),
    help="Read [tool.tipgm] from this directory's pyproject.toml.",
)
@pass_context
def cli(ctx: Context, verbose: bool, directory: Optional[Path]) -> None:
    """Translation-invariant p-adic Gibbs measures of the Potts model.

    Count and classify the measures on the Cayley tree of order 2, verify
    boundary fields, scan grids of theta, and compute with p-adic numbers.

    \b
    Exit codes:
        0 success, 1 failure or negative verdict, 2 domain violation,
        3 precision exhausted, 4 rule/direct mismatch, 5 pole

    \b
    Examples:
        tipgm classify -p 5 -q 5 --theta 11
        tipgm verify -p 3 -q 3 -k 3 --theta -2 --z 64,-125
        tipgm scan -p 5 -q 5 --theta 6,11,16,-4
        tipgm padic norm -p 3 63
    """
    ctx.verbose = verbose
    ctx.project_dir = directory


# Commands import this module, so they are registered after the group exists.
from .commands import classify, padic, scan, verify  # noqa: E402

cli.add_command(classify.classify)
cli.add_command(verify.verify)
cli.add_command(scan.scan)
cli.add_command(padic.padic)


def main() -> None:
    """Console script entry point; maps configuration and stray errors to exit 1."""
    try:
        cli()
    except ConfigError as e:
        echo_error(str(e))
        sys.exit(ExitCode.FAILURE)
    except Exception as e:
        echo_error(f"Unexpected error: {e}")
        sys.exit(ExitCode.FAILURE)


if __name__ == "__main__":
    main()
