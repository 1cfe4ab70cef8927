"""Tests for tipgm-cli package."""
