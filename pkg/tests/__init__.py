"""Tests for sample_space_entropy."""
