"""Tests for the lie3 toolkit."""
