"""Exact construction and verification of left-covariant differential
calculi on the quantum group of unimodular 2x2 quantum matrices."""

__version__ = "0.1.0"
