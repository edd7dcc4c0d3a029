"""AES as polynomial manipulations in GF(256)[x, y]/<x^4+1, y^4+1>."""

__version__ = "0.1.0"
