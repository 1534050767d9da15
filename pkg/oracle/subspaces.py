"""r-dimensional subspaces of GF(Q)^k, one reduced row echelon matrix each.

A subspace is identified by its pivot columns p_1 < ... < p_r. Row i is
e_{p_i} plus an arbitrary combination of the non-pivot columns right of p_i,
so every subspace is produced exactly once.
"""
from functools import cached_property
from itertools import combinations, product
from typing import Iterator, List, Optional, Tuple

import numpy as np

from algebra.errors import CodeError

Pattern = Tuple[int, ...]


def gaussian_binomial(k: int, r: int, Q: int) -> int:
    """Number of r-dimensional subspaces of GF(Q)^k."""
    if r < 0 or r > k:
        return 0
    num, den = 1, 1
    for i in range(r):
        num *= Q ** (k - i) - 1
        den *= Q ** (i + 1) - 1
    return num // den


class SubspaceIterator:
    """Enumerates RREF coordinate matrices of r-subspaces of GF(Q)^k.

    ``pivot_limit`` restricts pivots to the first columns; with the coordinates
    of a complement H of C2 placed first, that yields exactly the subspaces
    meeting C2 trivially.
    """

    def __init__(self, Q: int, k: int, r: int, pivot_limit: Optional[int] = None):
        limit = k if pivot_limit is None else pivot_limit
        if not 1 <= r <= limit <= k:
            raise CodeError(f"no {r}-dimensional subspaces with pivots among {limit} of {k} coordinates")
        self.Q = Q
        self.k = k
        self.r = r
        self.pivot_limit = limit

    def pivot_patterns(self) -> Iterator[Pattern]:
        return combinations(range(self.pivot_limit), self.r)

    def free_columns(self, pattern: Pattern) -> List[List[int]]:
        pivots = set(pattern)
        return [[j for j in range(p + 1, self.k) if j not in pivots] for p in pattern]

    def pattern_size(self, pattern: Pattern) -> int:
        return self.Q ** sum(len(cols) for cols in self.free_columns(pattern))

    @cached_property
    def count(self) -> int:
        if self.pivot_limit == self.k:
            return gaussian_binomial(self.k, self.r, self.Q)
        return sum(self.pattern_size(pattern) for pattern in self.pivot_patterns())

    def __len__(self) -> int:
        return self.count

    def row_choices(self, pivot: int, free: List[int]) -> np.ndarray:
        """All rows e_pivot + sum c_j e_j over the free columns, as integer codes."""
        total = self.Q ** len(free)
        index = np.arange(total, dtype=np.int64)
        rows = np.zeros((total, self.k), dtype=np.int64)
        rows[:, pivot] = 1
        for i, col in enumerate(free):
            rows[:, col] = (index // self.Q**i) % self.Q
        return rows

    def pattern_rows(self, pattern: Pattern) -> List[np.ndarray]:
        return [self.row_choices(p, free) for p, free in zip(pattern, self.free_columns(pattern))]

    def __iter__(self) -> Iterator[np.ndarray]:
        for pattern in self.pivot_patterns():
            choices = self.pattern_rows(pattern)
            for picks in product(*(range(len(c)) for c in choices)):
                yield np.stack([c[i] for c, i in zip(choices, picks)])
