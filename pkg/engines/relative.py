from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from algebra.codes import evaluate_code, zero_code
from algebra.curve import CurveInstance
from algebra.errors import BudgetExceededError, MonomialError
from algebra.monomial import MonomialSet, order_key
from oracle.bruteforce import DEFAULT_ORACLE_BUDGET, rghw_bruteforce
from utils.logs import logger

from .base import CurveLike, as_params
from .exhaustive import ghw_exhaustive
from .search import DEFAULT_SCAN_BUDGET, max_delta_star


@dataclass
class RghwResult:
    """One relative generalized Hamming weight M_r(ev(M1), ev(M2))."""

    r: int
    value: int
    exact: bool
    witness: Optional[MonomialSet]
    condition_held: bool
    n: int
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "r": self.r,
            "M_r": self.value,
            "exact": self.exact,
            "condition_held": self.condition_held,
            "witness": self.witness.labels() if self.witness is not None else [],
        }


def _check_pair(M1: MonomialSet, M2: MonomialSet) -> None:
    M1.check_box()
    M1.check_decreasing()
    M2.check_decreasing()
    if not M2.issubset(M1) or len(M2) == len(M1):
        logger.error(f"{M2} is not a proper subset of {M1}")
        raise MonomialError("need M2 strictly contained in M1")


def ordering_condition(M1: MonomialSet, M2: MonomialSet) -> bool:
    """Whether every monomial of M1 minus M2 exceeds every monomial of M2."""
    _check_pair(M1, M2)
    if not len(M2):
        return True
    params = M1.params
    top = max(order_key(m, params) for m in M2.members)
    return all(order_key(m, params) > top for m in M1.difference(M2).members)


def attainable_initials(M1: MonomialSet, M2: MonomialSet) -> MonomialSet:
    """Monomials of M1 that lead some polynomial of L(M1) outside L(M2).

    A polynomial outside L(M2) carries a term of M1 minus M2, so its initial is
    at least the smallest such monomial; conversely every such monomial is the
    initial of its sum with that term.
    """
    params = M1.params
    floor = min(order_key(m, params) for m in M1.difference(M2).members)
    return MonomialSet(frozenset(m for m in M1.members if order_key(m, params) >= floor), params)


def rghw(
    curve: CurveLike,
    M1: MonomialSet,
    M2: MonomialSet,
    r: int,
    *,
    oracle_budget: int = DEFAULT_ORACLE_BUDGET,
    scan_budget: int = DEFAULT_SCAN_BUDGET,
    threads: int = 1,
) -> RghwResult:
    """M_r(ev(M1), ev(M2)) for decreasing M2 strictly inside M1.

    When M1 minus M2 lies above M2 the value is exact. Otherwise the maximum is
    taken over the attainable initial monomials, which gives a lower bound; with
    a full curve and a small enough code the brute-force oracle settles it.

    Args:
        curve (CurveLike): curve, or just (q, s, u) for the footprint value
        M1 (MonomialSet): decreasing set of the larger code
        M2 (MonomialSet): decreasing proper subset of M1
        r (int): 1 <= r <= |M1| - |M2|
        oracle_budget (int): subspace budget of the exactness upgrade
        scan_budget (int): largest subset count scanned literally
        threads (int): worker processes for the subset scan

    Returns:
        RghwResult: value, exactness and witness
    """
    params = as_params(curve)
    held = ordering_condition(M1, M2)
    span = len(M1) - len(M2)
    if not 1 <= r <= span:
        raise MonomialError(f"r={r} outside 1..{span}")

    pool = M1.difference(M2) if held else attainable_initials(M1, M2)
    value, witness, _ = max_delta_star(params, pool.ordered, r, scan_budget=scan_budget, prune=False, threads=threads)
    result = RghwResult(
        r=r,
        value=params.n - value,
        exact=held,
        witness=MonomialSet.of(params, witness),
        condition_held=held,
        n=params.n,
    )

    floor = ghw_exhaustive(params, M1, r, scan_budget=scan_budget, threads=threads).value
    if result.value < floor:
        raise RuntimeError(f"M_{r}={result.value} below d_{r}={floor} for {M1} / {M2}")

    if not held:
        result.notes.append("lower bound: M1 minus M2 does not lie above M2")
        if isinstance(curve, CurveInstance):
            _confirm_with_oracle(curve, M1, M2, result, oracle_budget)
    return result


def _confirm_with_oracle(curve: CurveInstance, M1: MonomialSet, M2: MonomialSet, result: RghwResult, budget: int) -> None:
    C2 = evaluate_code(curve, M2) if len(M2) else zero_code(curve.field, curve.n)
    try:
        exact = rghw_bruteforce(evaluate_code(curve, M1), C2, result.r, budget)
    except BudgetExceededError:
        logger.info(f"M_{result.r} stays a lower bound, the oracle budget is too small")
        return
    if exact != result.value:
        logger.info(f"oracle raised M_{result.r} from {result.value} to {exact}")
        result.value = exact
        result.witness = None
    result.exact = True
    result.notes.append("confirmed by subspace enumeration")


def relative_hierarchy(curve: CurveLike, M1: MonomialSet, M2: MonomialSet, **kwargs) -> List[RghwResult]:
    """M_1, ..., M_m for m = |M1| - |M2|."""
    return [rghw(curve, M1, M2, r, **kwargs) for r in range(1, len(M1) - len(M2) + 1)]
