"""Test suite for the four-mode toolkit."""
