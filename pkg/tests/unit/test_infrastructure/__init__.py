"""Tests for infrastructure modules."""
