from .base import BaseEngine, GhwResult
from .exhaustive import ExhaustiveEngine, ghw_exhaustive, weight_hierarchy
from .fastpath import FastpathEngine, cartesian_ghw, ghw_fastpath
from .maxcase import MaxcaseEngine, ghw_maxcase
from .oracle import OracleEngine
from .relative import RghwResult, ordering_condition, relative_hierarchy, rghw
from .staircase import StaircaseOptimizer

__all__ = [
    "BaseEngine",
    "ExhaustiveEngine",
    "FastpathEngine",
    "GhwResult",
    "MaxcaseEngine",
    "OracleEngine",
    "RghwResult",
    "StaircaseOptimizer",
    "cartesian_ghw",
    "ghw_exhaustive",
    "ghw_fastpath",
    "ghw_maxcase",
    "ordering_condition",
    "relative_hierarchy",
    "rghw",
    "weight_hierarchy",
]
