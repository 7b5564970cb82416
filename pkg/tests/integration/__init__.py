"""Integration tests: CLI-free checks across packages."""
