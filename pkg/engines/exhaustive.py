from typing import List, Optional

from algebra.errors import MonomialError
from algebra.monomial import MonomialSet
from utils.logs import logger

from .base import BaseEngine, CurveLike, GhwResult, as_params
from .search import DEFAULT_SCAN_BUDGET, max_delta_star
from .staircase import StaircaseOptimizer


def _validate(M: MonomialSet, r: int, bound_only: bool) -> None:
    if not len(M):
        raise MonomialError("empty monomial set")
    M.check_box()
    if not bound_only and not M.is_decreasing:
        logger.error(f"{M} is not decreasing")
        raise MonomialError("monomial set is not decreasing; pass bound_only for a lower bound")
    if not 1 <= r <= len(M):
        raise MonomialError(f"r={r} outside 1..{len(M)}")


def ghw_exhaustive(
    curve: CurveLike,
    M: MonomialSet,
    r: int,
    *,
    prune: bool = True,
    threads: int = 1,
    scan_budget: int = DEFAULT_SCAN_BUDGET,
    bound_only: bool = False,
    optimizer: Optional[StaircaseOptimizer] = None,
) -> GhwResult:
    """d_r = n - max delta_star(N) over r-subsets N of a decreasing M.

    Args:
        curve (CurveLike): curve or its (q, s, u)
        M (MonomialSet): decreasing monomial set
        r (int): subcode dimension
        prune (bool): skip subsets that cannot be maximizers
        threads (int): worker processes for the literal scan
        scan_budget (int): largest subset count scanned literally
        bound_only (bool): accept a non-decreasing M and report a lower bound

    Returns:
        GhwResult: value, witness and search strategy
    """
    params = as_params(curve)
    _validate(M, r, bound_only)
    exact = M.is_decreasing
    value, witness, search = max_delta_star(
        params,
        M.ordered,
        r,
        scan_budget=scan_budget,
        prune=prune and exact,
        threads=threads,
        optimizer=optimizer,
    )
    notes = [] if exact else ["lower bound: monomial set is not decreasing"]
    return GhwResult(
        r=r,
        value=params.n - value,
        witness=MonomialSet.of(params, witness),
        method="exhaustive",
        n=params.n,
        exact=exact,
        search=search,
        notes=notes,
    )


def weight_hierarchy(curve: CurveLike, M: MonomialSet, **kwargs) -> List[GhwResult]:
    """d_1, ..., d_k for k = |M|, sharing one staircase optimizer."""
    params = as_params(curve)
    _validate(M, 1, kwargs.get("bound_only", False))
    optimizer = StaircaseOptimizer(params, M.ordered)
    return [ghw_exhaustive(params, M, r, optimizer=optimizer, **kwargs) for r in range(1, len(M) + 1)]


class ExhaustiveEngine(BaseEngine):
    """n minus the largest delta_star over all r-subsets of M."""

    _name = "exhaustive"

    def compute(self, monomials: MonomialSet, r: int, degree: Optional[int] = None) -> GhwResult:
        result = ghw_exhaustive(self.params, monomials, r, **self.options)
        self.log(f"r={r} d_r={result.value} via {result.search}")
        return result

    def hierarchy(self, monomials: MonomialSet, degree: Optional[int] = None) -> List[GhwResult]:
        return weight_hierarchy(self.params, monomials, **self.options)
