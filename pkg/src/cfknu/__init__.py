"""Truncated-surgery concordance invariants nu_n computed from CFK^infty."""

from .builders import box, staircase, thin_model, torus, unknot
from .complex import (
    CfkComplex,
    DiffTerm,
    Generator,
    InvalidComplex,
    ValidationReport,
    Violation,
    direct_sum,
    mirror,
    tau,
    tensor,
    validate,
    vertical_complex,
)
from .f2 import F2Matrix, HomologySummary, InducedMap, homology, induced_map, rank
from .invariants import InvariantProfile, NuResult, StableValue, nu_n, nu_plus, nu_plus_prime, profile
from .regions import ChainMap, ColumnWindow, MaxWindow, MinWindow, RegionComplex, Window, chain_map_neg, chain_map_pos, extract

__all__ = [
    "CfkComplex", "ChainMap", "ColumnWindow", "DiffTerm", "F2Matrix", "Generator", "HomologySummary",
    "InducedMap", "InvalidComplex", "InvariantProfile", "MaxWindow", "MinWindow", "NuResult",
    "RegionComplex", "StableValue", "ValidationReport", "Violation", "Window", "box", "chain_map_neg",
    "chain_map_pos", "direct_sum", "extract", "homology", "induced_map", "mirror", "nu_n", "nu_plus",
    "nu_plus_prime", "profile", "rank", "staircase", "tau", "tensor", "thin_model", "torus", "unknot",
    "validate", "vertical_complex",
]
