"""Tests for model and series ingestion."""
