from functools import reduce
from itertools import product
from typing import List

import numpy as np

from algebra.codes import LinearCode, code_rank
from algebra.errors import BudgetExceededError, CodeError
from algebra.field import FieldElement, FieldSpec
from utils.logs import logger

from .subspaces import SubspaceIterator

DEFAULT_ORACLE_BUDGET = 10**7

_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int64)


def pack_supports(words: np.ndarray) -> np.ndarray:
    """Supports of codewords (rows) as bit masks, shape (m, ceil(n / 64))."""
    m, n = words.shape
    width = -(-n // 64)
    bits = np.zeros((m, width * 64), dtype=np.uint64)
    bits[:, :n] = words != 0
    weights = np.left_shift(np.uint64(1), np.arange(64, dtype=np.uint64))
    return (bits.reshape(m, width, 64) * weights).sum(axis=2, dtype=np.uint64)


def popcount(masks: np.ndarray) -> np.ndarray:
    """Set bits per row of a (m, W) uint64 mask array."""
    halves = np.ascontiguousarray(masks).view(np.uint16)
    return _POP16[halves].sum(axis=1)


def _min_support(iterator: SubspaceIterator, basis: FieldElement, field: FieldSpec) -> int:
    best = basis.shape[1] + 1
    for pattern in iterator.pivot_patterns():
        masks = [pack_supports((field.gf(rows) @ basis).view(np.ndarray)) for rows in iterator.pattern_rows(pattern)]
        # vectorize over the row with most choices, loop over the others
        wide = max(range(len(masks)), key=lambda i: len(masks[i]))
        rest = [masks[i] for i in range(len(masks)) if i != wide]
        for picks in product(*(range(len(m)) for m in rest)):
            prefix = reduce(np.bitwise_or, (m[i] for m, i in zip(rest, picks)), np.zeros(masks[wide].shape[1], dtype=np.uint64))
            best = min(best, int(popcount(masks[wide] | prefix).min()))
    return best


def _stack(field: FieldSpec, *matrices: FieldElement) -> FieldElement:
    return field.gf(np.concatenate([m.view(np.ndarray) for m in matrices]))


def _check_budget(iterator: SubspaceIterator, budget: int, what: str) -> None:
    if iterator.count > budget:
        logger.warning(f"{what}: {iterator.count} subspaces exceed budget {budget}")
        raise BudgetExceededError("subspaces", iterator.count, budget)


def ghw_bruteforce(C: LinearCode, r: int, budget: int = DEFAULT_ORACLE_BUDGET) -> int:
    """d_r(C) as the least support size over all r-dimensional subcodes.

    Args:
        C (LinearCode): code with linearly independent generator rows
        r (int): subcode dimension
        budget (int): largest number of subspaces enumerated

    Returns:
        int: the r-th generalized Hamming weight
    """
    k = code_rank(C)
    if k != C.dimension:
        raise CodeError(f"generator has rank {k} but {C.dimension} rows")
    if not 1 <= r <= k:
        raise CodeError(f"r={r} outside 1..{k}")
    iterator = SubspaceIterator(C.field.order, k, r)
    _check_budget(iterator, budget, f"d_{r}")
    return _min_support(iterator, C.generator, C.field)


def complement_rows(C1: LinearCode, C2: LinearCode) -> List[int]:
    """Rows of C1's generator extending a basis of C2 to a basis of C1."""
    basis = C2.generator
    rank = code_rank(basis)
    chosen = []
    for i in range(C1.dimension):
        extended = _stack(C1.field, basis, C1.generator[i : i + 1])
        new_rank = code_rank(extended)
        if new_rank > rank:
            basis, rank = extended, new_rank
            chosen.append(i)
    return chosen


def rghw_bruteforce(C1: LinearCode, C2: LinearCode, r: int, budget: int = DEFAULT_ORACLE_BUDGET) -> int:
    """M_r(C1, C2): least support of an r-subspace of C1 meeting C2 only in 0."""
    k1, k2 = code_rank(C1), code_rank(C2)
    if k2 != C2.dimension or k1 != C1.dimension:
        raise CodeError("generators must have full row rank")
    stacked = _stack(C1.field, C1.generator, C2.generator)
    if code_rank(stacked) != k1:
        raise CodeError("C2 is not a subcode of C1")
    if not 1 <= r <= k1 - k2:
        raise CodeError(f"r={r} outside 1..{k1 - k2}")
    H = C1.generator[complement_rows(C1, C2)]
    basis = _stack(C1.field, H, C2.generator)
    iterator = SubspaceIterator(C1.field.order, k1, r, pivot_limit=k1 - k2)
    _check_budget(iterator, budget, f"M_{r}")
    return _min_support(iterator, basis, C1.field)
