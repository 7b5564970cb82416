"""End-to-end acceptance tests."""
