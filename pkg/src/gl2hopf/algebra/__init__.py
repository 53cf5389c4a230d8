"""Exact commutative algebra: coefficient rings, sparse polynomials, carriers."""

from .carriers import (
    GL_VARS,
    Carrier,
    CarrierElem,
    IdempotentCarrier,
    LocalizedCarrier,
    LocalizedPoly,
    SL2Carrier,
    SL2Poly,
    SplitCarrier,
    SplitElem,
    ZElem,
    algebra_map_extend,
    exact_divide_by_D,
)
from .poly import SparsePoly
from .rings import CoeffRing, nullspace, primitive_integer_vector

__all__ = [
    "GL_VARS",
    "Carrier",
    "CarrierElem",
    "CoeffRing",
    "IdempotentCarrier",
    "LocalizedCarrier",
    "LocalizedPoly",
    "SL2Carrier",
    "SL2Poly",
    "SparsePoly",
    "SplitCarrier",
    "SplitElem",
    "ZElem",
    "algebra_map_extend",
    "exact_divide_by_D",
    "nullspace",
    "primitive_integer_vector",
]
