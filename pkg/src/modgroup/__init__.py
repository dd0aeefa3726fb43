"""Counting words over {U, S} that equal the identity in PSL2(Z)."""

__version__ = "0.1.0"
