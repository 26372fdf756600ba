"""Desk-scale symbolic engine for ultrapower and cylinder-ultrafilter experiments."""

__version__ = "0.1.0"
