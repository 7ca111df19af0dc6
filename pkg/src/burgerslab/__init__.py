"""Finite-volume laboratory for decay and dispersion estimates of scalar conservation laws."""

__version__ = "0.1.0"
