"""Rational cuspidal plane curves with three cusps.

Exact construction of the curves with cusps (d-2), (2_a), (2_b), their
certification by blowing up, and the numerical invariants of their
resolutions.
"""

from .branches import BranchGerm, parse_branch, resolve_sequence
from .family import CuspidalCurve, FamilyParams, certify, construct, enumerate_degree, implicit_equation
from .invariants import CurveSingularityData, invariant_report
from .multiplicity import MultiplicitySequence, canonicalize, invariants_of, validate_sequence
from .topology import cusp_dual_graph, curve_dual_graph, pi1_presentation

__version__ = "0.1.0"

__all__ = [
    "BranchGerm", "parse_branch", "resolve_sequence",
    "CuspidalCurve", "FamilyParams", "certify", "construct", "enumerate_degree",
    "implicit_equation",
    "CurveSingularityData", "invariant_report",
    "MultiplicitySequence", "canonicalize", "invariants_of", "validate_sequence",
    "cusp_dual_graph", "curve_dual_graph", "pi1_presentation",
]
