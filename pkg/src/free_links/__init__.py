"""Free Links CLI - free knots, parity brackets and non-invertibility certificates."""

__version__ = "0.1.0"
