"""Tests for time-series fitting."""
