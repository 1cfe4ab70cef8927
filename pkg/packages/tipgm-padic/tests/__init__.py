# SPDX-License-Identifier: MIT
"""Tests for tipgm-padic package."""
