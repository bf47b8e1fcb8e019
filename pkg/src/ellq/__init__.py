"""Exact elliptic fake degrees, exotic Fourier transforms, and formal degrees
for finite and affine Weyl groups."""

__version__ = "0.1.0"
