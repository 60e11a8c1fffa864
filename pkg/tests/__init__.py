"""Tests for free-links-cli."""
