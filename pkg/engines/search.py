from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, islice
from math import comb
from typing import FrozenSet, List, Optional, Sequence, Tuple

from algebra.monomial import Monomial, delta_star, order_key
from algebra.params import CurveParams
from utils.logs import logger

from .staircase import StaircaseOptimizer

DEFAULT_SCAN_BUDGET = 20_000

ScanOutcome = Tuple[int, Optional[Tuple[int, ...]]]


def skips_shifted_column(subset: Sequence[Monomial], pool: FrozenSet[Monomial], u: int) -> bool:
    """A maximizer with least x-exponent a1 contains x^(a1+u) whenever the pool does."""
    a1 = min(m.a for m in subset)
    shifted = Monomial(a1 + u, 0)
    return shifted in pool and shifted not in subset


def _scan_range(args: Tuple[CurveParams, List[Monomial], int, int, int, bool]) -> ScanOutcome:
    params, ordered, r, start, stop, prune = args
    pool = frozenset(ordered)
    best_value, best_index = -1, None
    for index in islice(combinations(range(len(ordered)), r), start, stop):
        subset = [ordered[i] for i in index]
        if prune and skips_shifted_column(subset, pool, params.u):
            continue
        value = delta_star(subset, params)
        if value > best_value:
            best_value, best_index = value, index
    return best_value, best_index


def subset_scan(
    params: CurveParams, ordered: List[Monomial], r: int, prune: bool = True, threads: int = 1
) -> Tuple[int, List[Monomial]]:
    """Literal scan of all r-subsets; the witness is the lex-least maximizer."""
    total = comb(len(ordered), r)
    workers = max(1, min(threads, total))
    step = -(-total // workers)
    ranges = [(params, ordered, r, lo, min(total, lo + step), prune) for lo in range(0, total, step)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_scan_range, ranges))
    else:
        outcomes = [_scan_range(task) for task in ranges]
    best_value, best_index = -1, None
    for value, index in outcomes:
        if value > best_value:
            best_value, best_index = value, index
    if best_index is None:
        raise RuntimeError(f"no admissible {r}-subset among {len(ordered)} monomials")
    return best_value, [ordered[i] for i in best_index]


def max_delta_star(
    params: CurveParams,
    available: Sequence[Monomial],
    r: int,
    scan_budget: int = DEFAULT_SCAN_BUDGET,
    prune: bool = True,
    threads: int = 1,
    optimizer: Optional[StaircaseOptimizer] = None,
) -> Tuple[int, List[Monomial], str]:
    """Max of delta_star over r-subsets of ``available``.

    Returns:
        Tuple[int, List[Monomial], str]: value, witness and the search used
    """
    ordered = sorted(available, key=lambda m: order_key(m, params))
    if comb(len(ordered), r) <= scan_budget:
        value, witness = subset_scan(params, ordered, r, prune=prune, threads=threads)
        return value, witness, "scan"
    logger.info(f"{comb(len(ordered), r)} subsets of size {r} exceed the scan budget, using the staircase optimizer")
    optimizer = optimizer or StaircaseOptimizer(params, ordered)
    solution = optimizer.solve(r)
    return solution.value, solution.witness, "staircase"
