"""Hopf algebras of GL2, SL2 and their normaliser subschemes."""

__version__ = "0.1.0"

from .algebra import CoeffRing, LocalizedCarrier, SparsePoly  # noqa: E402
from .comodule import Comodule, dual, restrict, standard, sym_power, sym_tensor2, verify_comodule  # noqa: E402
from .hopf import (  # noqa: E402
    HopfAlgebra,
    HopfMap,
    build_hopf,
    gl2_hopf,
    normalizer_hopf,
    quotient_map,
    sl2_hopf,
    torus_hopf,
    verify_hopf_axioms,
    weyl_hopf,
)
from .report import Check, Report  # noqa: E402

__all__ = [
    "Check",
    "CoeffRing",
    "Comodule",
    "HopfAlgebra",
    "HopfMap",
    "LocalizedCarrier",
    "Report",
    "SparsePoly",
    "__version__",
    "build_hopf",
    "dual",
    "gl2_hopf",
    "normalizer_hopf",
    "quotient_map",
    "restrict",
    "sl2_hopf",
    "standard",
    "sym_power",
    "sym_tensor2",
    "torus_hopf",
    "verify_comodule",
    "verify_hopf_axioms",
    "weyl_hopf",
]
