"""Exact maximization of delta_star over r-subsets of a monomial set.

For a fixed least x-exponent a1, an optimal subset only matters through the
up-closed region it shades inside the columns a1 <= a < v. Such a region is a
non-increasing sequence of column thresholds t_a (cell (a, b) is shaded iff
b >= t_a), the unshaded cells number sum(t_a), and the subset can use every
available monomial inside the region plus every available monomial right of v.
A column-by-column dynamic program over (threshold, available count) finds the
best region for every subset size at once.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from algebra.monomial import Monomial, order_key
from algebra.params import CurveParams

IMPOSSIBLE = -1


@dataclass
class ColumnPlan:
    """DP tables for one value of a1."""

    a1: int
    v: int
    far: List[Monomial]
    counts: np.ndarray  # counts[i, t]: available cells in column a1 + i with b >= t
    tables: List[np.ndarray]  # tables[i][t, c]: best unshaded total through column a1 + i

    @cached_property
    def best_by_count(self) -> np.ndarray:
        """best_by_count[c]: best unshaded cells using exactly c region monomials."""
        return self.tables[-1].max(axis=0)


@dataclass
class StaircaseSolution:
    value: int
    a1: int
    witness: List[Monomial]


class StaircaseOptimizer:
    """Best delta_star over r-subsets of ``available`` for any r."""

    def __init__(self, params: CurveParams, available: Iterable[Monomial]):
        self.params = params
        self.available = sorted(set(available), key=lambda m: order_key(m, params))
        self.size = len(self.available)
        self._plans: Dict[int, Optional[ColumnPlan]] = {}

    @property
    def columns(self) -> List[int]:
        return sorted({m.a for m in self.available})

    def plan(self, a1: int) -> Optional[ColumnPlan]:
        if a1 not in self._plans:
            self._plans[a1] = self._build_plan(a1)
        return self._plans[a1]

    def _build_plan(self, a1: int) -> Optional[ColumnPlan]:
        height = self.params.y_bound
        v = min(a1 + self.params.u, self.params.x_max + 1)
        region = [m for m in self.available if a1 <= m.a < v]
        if not any(m.a == a1 for m in region):
            return None
        far = [m for m in self.available if m.a >= v]
        width = v - a1
        counts = np.zeros((width, height + 1), dtype=np.int64)
        for m in region:
            counts[m.a - a1, : m.b + 1] += 1
        cap = self.size
        thresholds = np.arange(height + 1)

        first = np.full((height + 1, cap + 1), IMPOSSIBLE, dtype=np.int64)
        for t in range(height):
            if counts[0, t] > 0:
                first[t, counts[0, t]] = t
        tables = [first]
        for i in range(1, width):
            prev = tables[-1]
            # suffix max over previous thresholds t' >= t keeps the region up-closed
            reach = np.maximum.accumulate(prev[::-1], axis=0)[::-1]
            table = np.full_like(prev, IMPOSSIBLE)
            for t in thresholds:
                k = counts[i, t]
                shifted = reach[t, : cap + 1 - k]
                valid = shifted != IMPOSSIBLE
                table[t, k:][valid] = shifted[valid] + t
            tables.append(table)
        return ColumnPlan(a1=a1, v=v, far=far, counts=counts, tables=tables)

    def best_for(self, r: int, a1: int) -> Optional[Tuple[int, int, int]]:
        """(delta_star value, final threshold, region count) for the best subset with this a1."""
        plan = self.plan(a1)
        if plan is None:
            return None
        need = max(r - len(plan.far), 1)
        last = plan.tables[-1]
        if need >= last.shape[1]:
            return None
        window = last[:, need:]
        best = int(window.max())
        if best == IMPOSSIBLE:
            return None
        t, c = np.argwhere(window == best)[0]
        return a1 * self.params.y_bound + best, int(t), int(c) + need

    def solve(self, r: int, a1_values: Optional[Iterable[int]] = None) -> Optional[StaircaseSolution]:
        """Best subset of size r, ties resolved towards the smallest a1."""
        if not 1 <= r <= self.size:
            return None
        best: Optional[Tuple[int, int, int, int]] = None
        for a1 in sorted(self.columns if a1_values is None else a1_values):
            found = self.best_for(r, a1)
            if found is not None and (best is None or found[0] > best[0]):
                best = (found[0], a1, found[1], found[2])
        if best is None:
            return None
        value, a1, t, c = best
        return StaircaseSolution(value=value, a1=a1, witness=self._witness(r, a1, t, c))

    def _witness(self, r: int, a1: int, t_last: int, c_last: int) -> List[Monomial]:
        plan = self.plan(a1)
        width = plan.v - a1
        thresholds = [0] * width
        t, c = t_last, c_last
        for i in range(width - 1, -1, -1):
            thresholds[i] = t
            if i == 0:
                break
            k = int(plan.counts[i, t])
            target = plan.tables[i][t, c] - t
            prev = plan.tables[i - 1]
            c -= k
            t = next(tp for tp in range(t, self.params.y_bound + 1) if prev[tp, c] == target)
        shaded = [m for m in self.available if a1 <= m.a < plan.v and m.b >= thresholds[m.a - a1]]
        lead = min((m for m in shaded if m.a == a1), key=lambda m: m.b)
        rest = [m for m in self.available if m != lead and (m in plan.far or m in shaded)]
        return sorted([lead] + rest[: r - 1], key=lambda m: order_key(m, self.params))
