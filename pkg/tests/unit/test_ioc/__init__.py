"""Tests for IoC (Inversion of Control) module."""
