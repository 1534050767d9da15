"""Asymmetric CSS parameters from nested one-point norm-trace codes.

C1 = ev(L_lambda1) contains C2 = ev(L_lambda2). The code corrects phase errors
up to M_1(C1, C2) and bit errors up to M_1(C2^perp, C1^perp); both duals are
evaluation codes of complement sets up to a coordinate twist, which leaves
supports unchanged.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Dict, List, Optional, Sequence, Tuple

from algebra.errors import MonomialError
from algebra.monomial import MonomialSet, build_onepoint_set, complement_set
from algebra.params import CurveParams
from engines.base import CurveLike, as_params
from engines.exhaustive import ghw_exhaustive
from engines.relative import rghw
from utils.logs import logger

PURITY_NOTE = (
    "impure means a relative distance strictly exceeds the plain minimum distance "
    "of the same code (delta_z > d1(C1) or delta_x > d1(C2^perp))"
)


@dataclass
class QuantumParams:
    """[[n, k, delta_z/delta_x]] over an alphabet of size q^s."""

    n: int
    k: int
    delta_z: int
    delta_x: int
    alphabet: int
    impure: bool
    d1_C1: int
    d1_C2perp: int
    lambda1: Optional[int] = None
    lambda2: Optional[int] = None
    exact: bool = True
    notes: List[str] = field(default_factory=list)

    @property
    def provenance(self) -> Dict[str, Dict[str, int]]:
        return {
            "delta_z": {"relative_value": self.delta_z, "plain_value": self.d1_C1},
            "delta_x": {"relative_value": self.delta_x, "plain_value": self.d1_C2perp},
        }

    def __str__(self) -> str:
        star = "*" if self.impure else ""
        return f"[[{self.n},{self.k},{self.delta_z}/{self.delta_x}]]_{self.alphabet}{star}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda1": self.lambda1,
            "lambda2": self.lambda2,
            "n": self.n,
            "k": self.k,
            "delta_z": self.delta_z,
            "delta_x": self.delta_x,
            "impure": self.impure,
            "d1_C1": self.d1_C1,
            "d1_C2perp": self.d1_C2perp,
            "alphabet": self.alphabet,
            "exact": self.exact,
            "provenance": self.provenance,
        }


def css_from_sets(params: CurveParams, M1: MonomialSet, M2: MonomialSet) -> QuantumParams:
    """Parameters of the CSS code of ev(M2) inside ev(M1), both decreasing."""
    if len(M1) == len(M2):
        raise MonomialError("the nested codes coincide, k would be 0")
    dual1, dual2 = complement_set(M1), complement_set(M2)
    z = rghw(params, M1, M2, 1)
    x = rghw(params, dual2, dual1, 1)
    d1_C1 = ghw_exhaustive(params, M1, 1).value
    d1_C2perp = ghw_exhaustive(params, dual2, 1).value
    result = QuantumParams(
        n=params.n,
        k=len(M1) - len(M2),
        delta_z=z.value,
        delta_x=x.value,
        alphabet=params.q**params.s,
        impure=z.value > d1_C1 or x.value > d1_C2perp,
        d1_C1=d1_C1,
        d1_C2perp=d1_C2perp,
        exact=z.exact and x.exact,
        notes=z.notes + x.notes,
    )
    if result.impure:
        result.notes.append(PURITY_NOTE)
    return result


def _lambda_sets(params: CurveParams, lam1: int, lam2: int) -> Tuple[MonomialSet, MonomialSet]:
    if not 0 <= lam2 < lam1:
        raise MonomialError(f"need 0 <= lambda2 < lambda1, got ({lam1}, {lam2})")
    M1, M2 = build_onepoint_set(params, lam1), build_onepoint_set(params, lam2)
    if len(M1) == len(M2):
        raise MonomialError(f"L_{lam1} and L_{lam2} coincide for {params}")
    return M1, M2


def css_params(curve: CurveLike, lam1: int, lam2: int) -> QuantumParams:
    """CSS parameters of the one-point pair ev(L_lam2) inside ev(L_lam1).

    Args:
        curve (CurveLike): curve or its (q, s, u)
        lam1 (int): weight bound of the larger code
        lam2 (int): weight bound of the smaller code, below lam1

    Returns:
        QuantumParams: n, k, both distances and the purity flag
    """
    params = as_params(curve)
    result = css_from_sets(params, *_lambda_sets(params, lam1, lam2))
    result.lambda1, result.lambda2 = lam1, lam2
    logger.debug(f"{params} ({lam1},{lam2}) -> {result}")
    return result


def dual_pair_params(curve: CurveLike, lam1: int, lam2: int) -> QuantumParams:
    """The same construction applied to C1^perp inside C2^perp; delta_z and delta_x swap."""
    params = as_params(curve)
    M1, M2 = _lambda_sets(params, lam1, lam2)
    result = css_from_sets(params, complement_set(M2), complement_set(M1))
    result.lambda1, result.lambda2 = lam1, lam2
    return result


def quantum_table(curve: CurveLike, rows: Sequence[Tuple[int, int]], threads: int = 1) -> List[QuantumParams]:
    """css_params for every (lambda1, lambda2) row, in row order."""
    params = as_params(curve)
    lam1s, lam2s = [r[0] for r in rows], [r[1] for r in rows]
    if threads > 1 and len(rows) > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(rows))) as pool:
            return list(pool.map(partial(css_params, params), lam1s, lam2s))
    return [css_params(params, l1, l2) for l1, l2 in zip(lam1s, lam2s)]
