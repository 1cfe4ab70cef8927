# SPDX-License-Identifier: MIT
"""Run configuration: defaults, [tool.tipgm] in pyproject.toml, environment, flags."""

from __future__ import annotations

import os
import sys
from collections.abc import Mapping
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Optional

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from tipgm_padic import DEFAULT_PRECISION

FORMATS = ("table", "json")
MIN_PRECISION = 8

ENV_PRECISION = "TIPGM_PRECISION"
ENV_FORMAT = "TIPGM_FORMAT"
ENV_THREADS = "TIPGM_THREADS"


class ConfigError(Exception):
    """Raised when configuration loading fails."""

    pass


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by every command.

    Attributes:
        precision: Digits of p-adic expansions (at least 8)
        format: Output format, ``table`` or ``json``
        allow_out_of_domain: Accept theta outside E_p
        threads: Worker processes; None picks one per CPU
    """

    precision: int = DEFAULT_PRECISION
    format: str = "table"
    allow_out_of_domain: bool = False
    threads: Optional[int] = None

    def __post_init__(self) -> None:
        if isinstance(self.precision, bool) or not isinstance(self.precision, int):
            raise ConfigError(f"precision must be an integer, got {self.precision!r}")
        if self.precision < MIN_PRECISION:
            raise ConfigError(f"precision must be >= {MIN_PRECISION}, got {self.precision}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {', '.join(FORMATS)}, got {self.format!r}")
        if self.threads is not None and (
            isinstance(self.threads, bool) or not isinstance(self.threads, int) or self.threads < 1
        ):
            raise ConfigError(f"threads must be a positive integer or 'auto', got {self.threads!r}")

    @property
    def workers(self) -> int:
        return self.threads or os.cpu_count() or 1

    def with_overrides(self, **overrides: Any) -> RunConfig:
        """Return a copy with every override that is not None applied."""
        changes = {name: value for name, value in overrides.items() if value is not None}
        return replace(self, **changes) if changes else self

    @classmethod
    def from_pyproject_dict(
        cls, pyproject: dict[str, Any], base: Optional[RunConfig] = None
    ) -> RunConfig:
        """Apply the [tool.tipgm] table of a parsed pyproject.toml.

        Keys may use dashes or underscores (``allow-out-of-domain``).
        """
        base = base or cls()
        table = pyproject.get("tool", {}).get("tipgm", {})
        if not isinstance(table, dict):
            raise ConfigError("[tool.tipgm] must be a table")
        settings = {key.replace("-", "_"): value for key, value in table.items()}

        unknown = sorted(set(settings) - {"precision", "format", "allow_out_of_domain", "threads"})
        if unknown:
            raise ConfigError(f"Unknown [tool.tipgm] setting(s): {', '.join(unknown)}")

        if "threads" in settings:
            settings["threads"] = _parse_threads(settings["threads"], "[tool.tipgm] threads")
        allow = settings.get("allow_out_of_domain")
        if allow is not None and not isinstance(allow, bool):
            raise ConfigError("[tool.tipgm] allow-out-of-domain must be true or false")
        return replace(base, **settings)

    @classmethod
    def from_pyproject(cls, project_dir: str | Path, base: Optional[RunConfig] = None) -> RunConfig:
        """Apply pyproject.toml in project_dir, if there is one.

        Raises:
            ConfigError: If the file is not valid TOML or the settings are invalid
        """
        pyproject_path = Path(project_dir) / "pyproject.toml"
        if not pyproject_path.exists():
            return base or cls()

        try:
            with open(pyproject_path, "rb") as f:
                pyproject = tomllib.load(f)
        except tomllib.TOMLDecodeError as e:
            raise ConfigError(f"Invalid TOML syntax in {pyproject_path}: {e}") from e

        return cls.from_pyproject_dict(pyproject, base)

    def apply_environment(self, environ: Optional[Mapping[str, str]] = None) -> RunConfig:
        """Apply TIPGM_PRECISION, TIPGM_FORMAT and TIPGM_THREADS."""
        environ = os.environ if environ is None else environ
        config = self

        precision = environ.get(ENV_PRECISION)
        if precision:
            try:
                config = replace(config, precision=int(precision))
            except ValueError as e:
                raise ConfigError(f"{ENV_PRECISION} must be an integer, got {precision!r}") from e

        output_format = environ.get(ENV_FORMAT)
        if output_format:
            config = replace(config, format=output_format.lower())

        threads = environ.get(ENV_THREADS)
        if threads:
            config = replace(config, threads=_parse_threads(threads, ENV_THREADS))

        return config


def _parse_threads(value: Any, source: str) -> Optional[int]:
    if isinstance(value, str):
        if value.lower() == "auto":
            return None
        try:
            return int(value)
        except ValueError as e:
            raise ConfigError(
                f"{source} must be a positive integer or 'auto', got {value!r}"
            ) from e
    return value


def load_config(
    project_dir: Optional[str | Path] = None, environ: Optional[Mapping[str, str]] = None
) -> RunConfig:
    """Load the run configuration for project_dir (defaults to the working directory).

    Precedence, lowest first: defaults, [tool.tipgm], environment. Command line
    flags are applied afterwards with ``RunConfig.with_overrides``.

    Raises:
        ConfigError: If any layer holds an invalid value
    """
    project_path = Path(project_dir) if project_dir is not None else Path.cwd()
    return RunConfig.from_pyproject(project_path).apply_environment(environ)
