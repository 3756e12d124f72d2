"""Exact and numerical toolkit for superminimal almost complex 2-spheres in S^6.

The package constructs holomorphic superhorizontal curves in the 5-quadric,
pushes them down the twistor fibration, builds their harmonic sequences in
exact arithmetic over Q(i, sqrt2, sqrt3, sqrt5), and verifies the classical
invariants: cross-product tables, reality and norm-product identities,
singularity types, osculating-curve degrees and areas.
"""

from .field import AlgScalar
from .poly import BiPoly, Poly, RationalFn

__all__ = ["AlgScalar", "Poly", "BiPoly", "RationalFn"]

__version__ = "0.1.0"
