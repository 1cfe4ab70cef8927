# SPDX-License-Identifier: MIT
"""CLI commands for tipgm."""
