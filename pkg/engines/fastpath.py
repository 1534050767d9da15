from typing import Optional

from algebra.errors import MonomialError
from algebra.monomial import MonomialSet, build_degree_set, delta_star, footprint_count, lex_prefix
from algebra.params import CurveParams

from .base import BaseEngine, CurveLike, GhwResult, as_params


def check_degree(params: CurveParams, d: int, r: int, lowest: int = 0) -> MonomialSet:
    top = params.x_max * (params.y_bound - 1)
    if not lowest <= d <= top:
        raise MonomialError(f"degree {d} outside {lowest}..{top}")
    M = build_degree_set(params, d)
    if not 1 <= r <= len(M):
        raise MonomialError(f"r={r} outside 1..{len(M)}")
    return M


def cartesian_ghw(curve: CurveLike, d: int, r: int) -> int:
    """d_r of the affine Cartesian code on a (u(q-1)+1) x q^(s-1) grid.

    The optimal subset is a lex prefix of the degree set whose dominant
    variable runs along the shorter grid side; both prefixes are evaluated.
    """
    params = as_params(curve)
    M = check_degree(params, d, r)
    box_edges = [(0, params.y_bound), (params.x_max + 1, 0)]
    best = max(
        footprint_count(list(lex_prefix(M, r, dominant).members) + box_edges, params) for dominant in ("x", "y")
    )
    return params.n - best


def ghw_fastpath(curve: CurveLike, d: int, r: int) -> GhwResult:
    """d_r of ev(M_{<=d}) from the single candidate M(r) when u is not maximal."""
    params = as_params(curve)
    if params.is_maximal:
        raise MonomialError(f"u={params.u} is maximal, use the maxcase engine")
    M = check_degree(params, d, r)
    prefix = lex_prefix(M, r, "x")
    return GhwResult(
        r=r,
        value=params.n - delta_star(prefix.members, params),
        witness=prefix,
        method="fastpath_M_r",
        n=params.n,
        search="prefix",
        cartesian=cartesian_ghw(params, d, r),
    )


class FastpathEngine(BaseEngine):
    """Lex-prefix shortcut for degree sets with non-maximal u."""

    _name = "fastpath"

    def compute(self, monomials: MonomialSet, r: int, degree: Optional[int] = None) -> GhwResult:
        if degree is None:
            raise MonomialError("the fastpath engine needs a degree set (deg<=D)")
        result = ghw_fastpath(self.params, degree, r)
        self.log(f"d={degree} r={r} d_r={result.value} cartesian={result.cartesian}")
        return result
