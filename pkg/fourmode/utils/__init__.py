"""Utility modules for the four-mode toolkit."""
