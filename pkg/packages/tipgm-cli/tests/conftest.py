# SPDX-License-Identifier: MIT
"""Pytest configuration and fixtures for CLI tests."""

from __future__ import annotations

from pathlib import Path
from typing import Generator

import pytest
from click.testing import CliRunner

from tipgm_cli.config import ENV_FORMAT, ENV_PRECISION, ENV_THREADS


@pytest.fixture
def cli_runner() -> CliRunner:
    """Create a Click CLI test runner."""
    return CliRunner()


@pytest.fixture(autouse=True)
def clean_environment(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    """Run every test from an empty directory without TIPGM_* variables."""
    for name in (ENV_PRECISION, ENV_FORMAT, ENV_THREADS):
        monkeypatch.delenv(name, raising=False)
    workdir = tmp_path / "work"
    workdir.mkdir()
    monkeypatch.chdir(workdir)


@pytest.fixture
def configured_project(tmp_path: Path) -> Generator[Path, None, None]:
    """Create a project directory whose pyproject.toml selects JSON output."""
    project_dir = tmp_path / "configured"
    project_dir.mkdir()
    (project_dir / "pyproject.toml").write_text(
        """[project]
name = "potts-study"
version = "0.1.0"

[tool.tipgm]
precision = 16
format = "json"
threads = 1
"""
    )
    yield project_dir
