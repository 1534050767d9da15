from typing import Optional

from algebra.errors import MonomialError
from algebra.monomial import MonomialSet, delta_star, lex_prefix, maxcase_candidate, shifted_region
from utils.logs import logger

from .base import BaseEngine, CurveLike, GhwResult, as_params
from .exhaustive import ghw_exhaustive
from .fastpath import check_degree


def ghw_maxcase(curve: CurveLike, d: int, r: int) -> GhwResult:
    """d_r of ev(M_{<=d}) for maximal u from one candidate per least x-exponent a1.

    For d < q^(s-1) the single y-dominant prefix of M_{<=d} is optimal. Otherwise
    every a1 contributes x^a1 times a y-dominant prefix, padded with the monomials
    right of a1 + u when those exist. At d = q^(s-1) the single prefix can miss a
    larger footprint, so the boundary goes through the candidate scan.
    """
    params = as_params(curve)
    if not params.is_maximal:
        raise MonomialError(f"u={params.u} is not maximal for {params}")
    M = check_degree(params, d, r, lowest=1)
    if d < params.y_bound:
        witness = lex_prefix(shifted_region(params, d, 0), r, "y")
        return GhwResult(
            r=r,
            value=params.n - delta_star(witness.members, params),
            witness=witness,
            method="maxcase",
            n=params.n,
            search="single-candidate",
        )

    best_value, best = -1, None
    for a1 in range(min(d, params.x_max) + 1):
        try:
            candidate = maxcase_candidate(params, d, r, a1)
        except MonomialError:
            candidate = None
        if candidate is None or not candidate.in_box:
            continue
        value = delta_star(candidate.members, params)
        if value > best_value:
            best_value, best = value, candidate

    if best is None:
        logger.warning(f"no admissible candidate for {params} d={d} r={r}, falling back to exhaustive search")
        result = ghw_exhaustive(params, M, r)
        result.notes.append("maxcase fallback")
        return result
    return GhwResult(
        r=r,
        value=params.n - best_value,
        witness=best,
        method="maxcase",
        n=params.n,
        search="candidates",
    )


class MaxcaseEngine(BaseEngine):
    """Candidate search for degree sets on the norm-trace curve (maximal u)."""

    _name = "maxcase"

    def compute(self, monomials: MonomialSet, r: int, degree: Optional[int] = None) -> GhwResult:
        if degree is None:
            raise MonomialError("the maxcase engine needs a degree set (deg<=D)")
        result = ghw_maxcase(self.params, degree, r)
        self.log(f"d={degree} r={r} d_r={result.value}")
        return result
