"""Exact algebra layer: scalars, polynomials, resultants, factoring."""

from .eisenstein import Eisenstein, eis, rat, ZERO, ONE, ZETA, ZETA2
from .mpoly import MPoly, InexactDivision, linear_change, proportional, euler_holds

__all__ = [
    "Eisenstein",
    "eis",
    "rat",
    "ZERO",
    "ONE",
    "ZETA",
    "ZETA2",
    "MPoly",
    "InexactDivision",
    "linear_change",
    "proportional",
    "euler_holds",
]
