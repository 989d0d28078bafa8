"""Tests for the closed-form core."""
