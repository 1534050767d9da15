"""Equality sweeps between the footprint engines and independent computations.

Every sweep returns a list of VerifyCheck, one per compared quantity. The CLI
``verify`` command groups them into a VerifyReport.
"""
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from algebra.codes import dual_nullspace, dual_structural, evaluate_code, row_space_equal
from algebra.curve import build_curve
from algebra.errors import BudgetExceededError
from algebra.monomial import (
    MonomialSet,
    StaircaseProfile,
    build_box,
    build_degree_set,
    build_onepoint_set,
    complement_set,
    delta_star,
    delta_star_closed_form,
)
from algebra.params import CurveParams
from engines.exhaustive import weight_hierarchy
from engines.fastpath import ghw_fastpath
from engines.maxcase import ghw_maxcase
from engines.relative import relative_hierarchy
from utils.logs import logger
from utils.schemas import VerifyCheck, VerifyReport

from .bruteforce import DEFAULT_ORACLE_BUDGET, ghw_bruteforce, rghw_bruteforce
from .wei import check_hierarchy
from .witness import common_zero_count, witness_family

Triple = Tuple[int, int, int]

ORACLE_CURVES: List[Triple] = [(2, 2, 1), (2, 2, 3), (3, 2, 1), (3, 2, 2)]
FASTPATH_CURVES: List[Triple] = [(2, 2, 1), (2, 3, 1), (3, 2, 1), (3, 2, 2), (4, 2, 1), (2, 4, 1), (2, 4, 3), (5, 2, 1), (3, 3, 1), (2, 4, 5), (5, 2, 2), (5, 2, 3)]
MAXCASE_CURVES: List[Triple] = [(2, 2, 3), (3, 2, 4), (2, 3, 7), (4, 2, 5)]
SMALL_CURVES: List[Triple] = [(2, 2, 1), (2, 2, 3), (3, 2, 1), (3, 2, 2), (3, 2, 4)]


def decreasing_sets(params: CurveParams, max_size: int, min_size: int = 1) -> Iterator[MonomialSet]:
    """All decreasing sets of the box with min_size..max_size members, by column heights."""

    def grow(col: int, cap: int, remaining: int, heights: List[int]) -> Iterator[List[int]]:
        if heights and sum(heights) >= min_size:
            yield heights
        if col > params.x_max:
            return
        for h in range(1, min(cap, remaining) + 1):
            yield from grow(col + 1, h, remaining - h, heights + [h])

    for heights in grow(0, params.y_bound, max_size, []):
        yield MonomialSet.of(params, ((a, b) for a, h in enumerate(heights) for b in range(h)))


def _check(name: str, expected, got) -> VerifyCheck:
    passed = expected == got
    if not passed:
        logger.warning(f"{name}: expected {expected}, got {got}")
    return VerifyCheck(name=name, passed=passed, detail=f"expected {expected}, got {got}")


def oracle_sweep(curves: Sequence[Triple] = ORACLE_CURVES, max_size: int = 5, budget: int = DEFAULT_ORACLE_BUDGET) -> List[VerifyCheck]:
    """Subspace enumeration against the footprint maximum for small decreasing sets."""
    checks = []
    for q, s, u in curves:
        curve = build_curve(q, s, u)
        for M in decreasing_sets(curve.params, max_size):
            code = evaluate_code(curve, M)
            for result in weight_hierarchy(curve.params, M):
                name = f"oracle {curve.params} {M} r={result.r}"
                try:
                    checks.append(_check(name, ghw_bruteforce(code, result.r, budget), result.value))
                except BudgetExceededError:
                    logger.info(f"{name} skipped, over budget")
    return checks


def fastpath_sweep(curves: Sequence[Triple] = FASTPATH_CURVES, max_degree: int = 9) -> List[VerifyCheck]:
    checks = []
    for q, s, u in curves:
        params = CurveParams(q, s, u)
        if params.is_maximal:
            continue
        for d in range(min(max_degree, params.x_max * (params.y_bound - 1)) + 1):
            M = build_degree_set(params, d)
            for result in weight_hierarchy(params, M):
                fast = ghw_fastpath(params, d, result.r)
                checks.append(_check(f"fastpath {params} d={d} r={result.r}", result.value, fast.value))
    return checks


def maxcase_sweep(curves: Sequence[Triple] = MAXCASE_CURVES, max_degree: int = 9) -> List[VerifyCheck]:
    checks = []
    for q, s, u in curves:
        params = CurveParams(q, s, u)
        for d in range(1, min(max_degree, params.x_max * (params.y_bound - 1)) + 1):
            M = build_degree_set(params, d)
            for result in weight_hierarchy(params, M):
                candidate = ghw_maxcase(params, d, result.r)
                checks.append(_check(f"maxcase {params} d={d} r={result.r}", result.value, candidate.value))
    return checks


def onepoint_thresholds(params: CurveParams, max_size: int) -> List[int]:
    """Distinct weights lam of box monomials whose one-point set has at most max_size members."""
    weights = sorted({params.weight(m.a, m.b) for m in build_box(params).members})
    return [lam for lam in weights if len(build_onepoint_set(params, lam)) <= max_size]


def rghw_sweep(curves: Sequence[Triple] = ORACLE_CURVES, max_size: int = 6, budget: int = DEFAULT_ORACLE_BUDGET) -> List[VerifyCheck]:
    """Relative weights of nested one-point codes against subspace enumeration.

    Pairs whose enumeration exceeds the budget are skipped with a logged reason.
    A lower bound only has to stay at or below the enumerated value.
    """
    checks = []
    for q, s, u in curves:
        curve = build_curve(q, s, u)
        thresholds = onepoint_thresholds(curve.params, max_size)
        for i, lam1 in enumerate(thresholds):
            M1 = build_onepoint_set(curve.params, lam1)
            C1 = evaluate_code(curve, M1)
            for lam2 in thresholds[:i]:
                M2 = build_onepoint_set(curve.params, lam2)
                C2 = evaluate_code(curve, M2)
                for result in relative_hierarchy(curve.params, M1, M2):
                    name = f"rghw {curve.params} lam1={lam1} lam2={lam2} r={result.r}"
                    try:
                        expected = rghw_bruteforce(C1, C2, result.r, budget)
                    except BudgetExceededError:
                        logger.info(f"{name} skipped, over budget")
                        continue
                    if result.exact:
                        checks.append(_check(name, expected, result.value))
                    else:
                        checks.append(_check(f"{name} bound", True, result.value <= expected))
    return checks


def random_staircase(params: CurveParams, rng: np.random.Generator) -> StaircaseProfile:
    """Random corners spanning fewer than u columns inside the box."""
    a1 = int(rng.integers(0, params.x_max + 1))
    last = min(a1 + params.u - 1, params.x_max)
    size = int(rng.integers(1, min(last - a1 + 1, params.y_bound) + 1))
    rest = rng.choice(np.arange(a1 + 1, last + 1), size=size - 1, replace=False) if size > 1 else []
    a_values = sorted([a1] + [int(a) for a in rest])
    b_values = sorted((int(b) for b in rng.choice(params.y_bound, size=size, replace=False)), reverse=True)
    return StaircaseProfile(tuple(zip(a_values, b_values)))


def closed_form_sweep(curves: Sequence[Triple] = SMALL_CURVES + [(5, 2, 3), (2, 3, 7)], count: int = 1000, seed: int = 0) -> List[VerifyCheck]:
    rng = np.random.default_rng(seed)
    params_list = [CurveParams(*t) for t in curves]
    checks = []
    for _ in range(count):
        params = params_list[int(rng.integers(len(params_list)))]
        profile = random_staircase(params, rng)
        checks.append(
            _check(
                f"closed-form {params} {profile.corners}",
                delta_star(profile.corners, params),
                delta_star_closed_form(profile, params),
            )
        )
    return checks


def dual_sweep(curves: Sequence[Triple] = SMALL_CURVES, max_size: int = 4) -> List[VerifyCheck]:
    """Twisted complement evaluation against the null space of the generator."""
    checks = []
    for q, s, u in curves:
        curve = build_curve(q, s, u)
        for M in decreasing_sets(curve.params, max_size):
            same = row_space_equal(dual_structural(curve, M), dual_nullspace(evaluate_code(curve, M)))
            checks.append(_check(f"dual {curve.params} {M}", True, same))
    return checks


def wei_sweep(curves: Sequence[Triple] = SMALL_CURVES) -> List[VerifyCheck]:
    """Footprint hierarchies of degree sets and their complements against the duality partition."""
    checks = []
    for q, s, u in curves:
        params = CurveParams(q, s, u)
        for d in range(params.x_max * (params.y_bound - 1)):
            M = build_degree_set(params, d)
            dual = complement_set(M)
            hierarchy = [res.value for res in weight_hierarchy(params, M)]
            dual_hierarchy = [res.value for res in weight_hierarchy(params, dual)] if len(dual) else []
            report = check_hierarchy(params.n, len(M), hierarchy, dual_hierarchy)
            checks.append(VerifyCheck(name=f"wei {params} d={d}", passed=report.ok, detail="; ".join(report.violations)))
    return checks


def witness_sweep(curves: Sequence[Triple] = SMALL_CURVES, count: int = 200, seed: int = 0, max_size: int = 4) -> List[VerifyCheck]:
    """Explicit polynomial families attaining delta_star on random monomial sets."""
    rng = np.random.default_rng(seed)
    built = [build_curve(*t) for t in curves]
    checks = []
    for _ in range(count):
        curve = built[int(rng.integers(len(built)))]
        box = build_box(curve.params).ordered
        size = int(rng.integers(1, min(max_size, len(box)) + 1))
        N = MonomialSet(frozenset(box[i] for i in rng.choice(len(box), size=size, replace=False)), curve.params)
        family = witness_family(N, curve)
        initials = {f.initial(curve.params) for f in family}
        checks.append(_check(f"witness initials {curve.params} {N}", N.members, frozenset(initials)))
        checks.append(_check(f"witness zeros {curve.params} {N}", delta_star(N.members, curve.params), common_zero_count(family, curve)))
    return checks


SUITES: Dict[str, Callable[[], List[VerifyCheck]]] = {
    "oracle": oracle_sweep,
    "fastpath": fastpath_sweep,
    "maxcase": maxcase_sweep,
    "rghw": rghw_sweep,
    "closed-form": closed_form_sweep,
    "dual": dual_sweep,
    "wei": wei_sweep,
    "witness": witness_sweep,
}


def run_suite(name: str, suites: Optional[Dict[str, Callable[[], List[VerifyCheck]]]] = None) -> VerifyReport:
    """Run one named sweep, or every sweep for ``all``."""
    suites = suites or SUITES
    names = list(suites) if name == "all" else [name]
    checks = []
    for key in names:
        logger.info(f"verify suite {key}")
        checks.extend(suites[key]())
    return VerifyReport(suite=name, checks=checks)
