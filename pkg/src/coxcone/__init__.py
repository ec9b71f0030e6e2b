"""Exact computations with finite root systems, their Coxeter fans, and the
cone of submodular (deformation) support functions."""

from .coxfan import CoxeterFan, Ray, Wall
from .field import PHI, SQRT5, Quad, format_scalar, parse_scalar
from .rootsys import RootSystem, RootSystemError, RootSystemSpec, root_system
from .submod import (FacetInequality, SubmodularCone, SupportFunction, SupportFunctionError,
                     Verdict, facet_count_formula, is_discrete, setting)
from .weyl import WeylCapExceeded, WeylElement, WeylGroup

__version__ = "0.1.0"

__all__ = [
    "CoxeterFan", "Ray", "Wall",
    "PHI", "SQRT5", "Quad", "format_scalar", "parse_scalar",
    "RootSystem", "RootSystemError", "RootSystemSpec", "root_system",
    "FacetInequality", "SubmodularCone", "SupportFunction", "SupportFunctionError",
    "Verdict", "facet_count_formula", "is_discrete", "setting",
    "WeylCapExceeded", "WeylElement", "WeylGroup",
]
