"""Exact verification of Lassalle's positivity conjecture at desk scale.

The specialization ``h_n -> 1/((t)_n n!)`` sends every skew Schur function to a
positive rational.  The modules here check that claim directly and check
each link of the argument behind it: Toeplitz minors, Karlin's criterion,
Jensen/Laguerre real-rootedness, and the integer sequences that started it.
"""

from .exactmath import DensePolynomial, parse_rational, rising_factorial
from .partitions import Partition, SkewShape, parse_shape
from .specialization import SpecializationContext, make_context, phi_skew_schur

__all__ = [
    "DensePolynomial",
    "Partition",
    "SkewShape",
    "SpecializationContext",
    "make_context",
    "parse_rational",
    "parse_shape",
    "phi_skew_schur",
    "rising_factorial",
]
