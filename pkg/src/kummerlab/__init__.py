"""Exact computations on Kummer quartic surfaces and their double solids."""
from __future__ import annotations

from .exactnum import FieldDescriptor, FieldElement, fe_arith, fe_parse, fe_specialize, fe_sqrt
from .polygeom import MultiPoly, ProjPoint, ProjTransform, parse_poly, poly_apply_transform, poly_sqrt

__all__ = [
    "FieldDescriptor",
    "FieldElement",
    "MultiPoly",
    "ProjPoint",
    "ProjTransform",
    "fe_arith",
    "fe_parse",
    "fe_specialize",
    "fe_sqrt",
    "parse_poly",
    "poly_apply_transform",
    "poly_sqrt",
]
