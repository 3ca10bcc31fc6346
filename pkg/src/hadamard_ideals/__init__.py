"""Hadamard products of projective varieties, computed exactly on ideals."""
__version__ = "0.1.0"
