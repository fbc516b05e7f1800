"""Extremal plane graphs in which every vertex bounds a large face."""

from .circlepack import Augmentation, Circle, Packing, augment, coin_report, pack
from .construct import ConstructionPlan, EdgeBudget, construct, edge_budget, make_plan, realize
from .errors import (AdjacencyMismatch, BudgetExceeded, DegenerateRadius, InternalInvariantViolation,
                     InvalidParams, KgonError, MalformedInput, MalformedRotation, NoConvergence,
                     NotTwoConnected)
from .formula import ExtremalParams, e4, mu_formula, nf_upper_bound, params, t_formula
from .graph import Face, PlaneGraph, euler_check, trace_faces
from .ip_oracle import IPPoint, IPSolution, mu_bruteforce, mu_full_enumeration
from .search import SearchResult, search
from .verify import (FaceCensus, VerifyReport, census, check_extremal, check_kgon_property,
                     eq1_identity, flower_centers)

__version__ = "0.1.0"

__all__ = [
    "AdjacencyMismatch", "Augmentation", "BudgetExceeded", "Circle", "ConstructionPlan",
    "DegenerateRadius", "EdgeBudget", "ExtremalParams", "Face", "FaceCensus", "IPPoint",
    "IPSolution", "InternalInvariantViolation", "InvalidParams", "KgonError", "MalformedInput",
    "MalformedRotation", "NoConvergence", "NotTwoConnected", "Packing", "PlaneGraph",
    "SearchResult", "VerifyReport", "augment", "census", "check_extremal", "check_kgon_property",
    "coin_report", "construct", "e4", "edge_budget", "eq1_identity", "euler_check",
    "flower_centers", "make_plan", "mu_bruteforce", "mu_formula", "mu_full_enumeration",
    "nf_upper_bound", "pack", "params", "realize", "search", "t_formula", "trace_faces",
]
