"""Tests for the tool classes."""
