"""pwpath - shortest feasible paths in multi-layer Pseudo-Wire networks."""

__version__ = "0.1.0"
