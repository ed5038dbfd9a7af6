"""Invariants and enumeration for piecewise-linear virtual knots."""
