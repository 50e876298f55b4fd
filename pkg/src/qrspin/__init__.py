"""Exact engine for q-orbifold r-spin Hurwitz numbers.

Submodules: ``algebra`` (exact polynomials and series), ``fock`` (wedge
space), ``hurwitz`` (the numbers and two oracles), ``aop`` (A-operators),
``polynomiality``, ``unstable`` ((0,1) and (0,2) sectors), ``tr``
(numerical topological recursion) and ``cli``.
"""
from .aop import a_inverse, a_operator, disconnected_a_correlator, residue_check, verify_hurw_aop
from .hurwitz import (
    HurwitzKey,
    character_oracle,
    completed_cycle_count,
    connected_hurwitz,
    disconnected_hurwitz,
    transposition_count_hurwitz,
)
from .kernels import BACKEND
from .polynomiality import admissible_tuples, sample_P, verify_polynomiality
from .report import Report

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "HurwitzKey", "Report", "a_inverse", "a_operator", "admissible_tuples",
    "character_oracle", "completed_cycle_count", "connected_hurwitz",
    "disconnected_a_correlator", "disconnected_hurwitz", "residue_check", "sample_P",
    "transposition_count_hurwitz", "verify_hurw_aop", "verify_polynomiality",
    "__version__",
]
