"""Tests for the brute-force oracles."""
