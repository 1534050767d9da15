from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from algebra.codes import LinearCode, code_rank, dual_nullspace
from utils.logs import logger

from .bruteforce import DEFAULT_ORACLE_BUDGET, ghw_bruteforce


@dataclass
class WeiReport:
    """Monotonicity, generalized Singleton and duality checks on a hierarchy pair."""

    n: int
    k: int
    hierarchy: List[int]
    dual_hierarchy: Optional[List[int]] = None
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "hierarchy": self.hierarchy,
            "dual_hierarchy": self.dual_hierarchy,
            "ok": self.ok,
            "violations": self.violations,
        }


def check_hierarchy(n: int, k: int, hierarchy: Sequence[int], dual_hierarchy: Optional[Sequence[int]] = None) -> WeiReport:
    """Check a weight hierarchy d_1..d_k of an [n, k] code, and its dual's if given."""
    report = WeiReport(n, k, list(hierarchy), list(dual_hierarchy) if dual_hierarchy is not None else None)
    if len(report.hierarchy) != k:
        report.violations.append(f"expected {k} weights, got {len(report.hierarchy)}")
    for r, d in enumerate(report.hierarchy, start=1):
        if not 1 <= d <= n:
            report.violations.append(f"d_{r}={d} outside 1..{n}")
        if d > n - k + r:
            report.violations.append(f"d_{r}={d} exceeds n-k+r={n - k + r}")
        if r > 1 and d <= report.hierarchy[r - 2]:
            report.violations.append(f"d_{r}={d} does not exceed d_{r - 1}={report.hierarchy[r - 2]}")
    if report.dual_hierarchy is not None:
        if len(report.dual_hierarchy) != n - k:
            report.violations.append(f"expected {n - k} dual weights, got {len(report.dual_hierarchy)}")
        mirrored = {n + 1 - d for d in report.dual_hierarchy}
        overlap = sorted(mirrored & set(report.hierarchy))
        if overlap:
            report.violations.append(f"hierarchy meets the mirrored dual hierarchy at {overlap}")
        if mirrored | set(report.hierarchy) != set(range(1, n + 1)):
            report.violations.append(f"hierarchy and mirrored dual do not cover 1..{n}")
    for text in report.violations:
        logger.warning(f"[{n},{k}] {text}")
    return report


def wei_checks(
    code: LinearCode,
    hierarchy: Optional[Sequence[int]] = None,
    dual_hierarchy: Optional[Sequence[int]] = None,
    budget: int = DEFAULT_ORACLE_BUDGET,
) -> WeiReport:
    """Run check_hierarchy on a code, brute-forcing any hierarchy not supplied."""
    n, k = code.length, code_rank(code)
    if hierarchy is None:
        hierarchy = [ghw_bruteforce(code, r, budget) for r in range(1, k + 1)]
    if dual_hierarchy is None:
        dual = dual_nullspace(code)
        dual_hierarchy = [ghw_bruteforce(dual, r, budget) for r in range(1, n - k + 1)]
    return check_hierarchy(n, k, hierarchy, dual_hierarchy)
