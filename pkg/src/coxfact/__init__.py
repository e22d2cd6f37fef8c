"""Factorization combinatorics of Coxeter elements in monomial reflection groups.

The package models the groups G(d,1,n) and G(d,d,n) (symmetric groups being
the d=1 case) as monomial matrices, enumerates reflection factorizations of
a Coxeter element organized by the flats their factors fix, and cross-checks
the counts against closed formulas, braid-move orbits, and (for the
symmetric group) numerically traced monodromy of the critical values of
centered degree-m polynomials.
"""

from .groups import (
    GroupConstructionError,
    GroupDescriptor,
    GroupElement,
    ReflectionGroup,
    build_group,
    compose,
    conjugate,
    inverse,
    product_of,
)

__version__ = "0.1.0"

__all__ = [
    "GroupConstructionError",
    "GroupDescriptor",
    "GroupElement",
    "ReflectionGroup",
    "build_group",
    "compose",
    "conjugate",
    "inverse",
    "product_of",
    "__version__",
]
