"""Tests for tipgm-potts package."""
