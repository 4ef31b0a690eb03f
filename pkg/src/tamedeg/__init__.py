"""Exact-rational toolkit for multidegrees of tame polynomial automorphisms.

Modules:
  poly        sparse multivariate polynomials over the rationals
  bracket     Poisson-bracket degree, reduced pairs, degree lower bounds
  maps        polynomial maps, certified generators, gallery, Nagata powers
  semigroup   two-generator numerical semigroups
  classify    multidegree decision engine for affine 3-space
  witness     constructive realizability witnesses
  plane       plane-automorphism decomposition, inverse, length predictions
  reductions  elementary-reduction checks and bounded search
  cli         command-line interface
"""

from .poly import NEG_INF, Polynomial, format_poly, parse_poly
from .maps import PolyMap, gallery, identity, nagata_power

__all__ = [
    "NEG_INF",
    "Polynomial",
    "PolyMap",
    "format_poly",
    "gallery",
    "identity",
    "nagata_power",
    "parse_poly",
]

__version__ = "0.1.0"
