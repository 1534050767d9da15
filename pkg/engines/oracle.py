from typing import Optional

from algebra.codes import evaluate_code
from algebra.curve import CurveInstance
from algebra.errors import CurveError
from algebra.monomial import MonomialSet
from oracle.bruteforce import DEFAULT_ORACLE_BUDGET, ghw_bruteforce

from .base import BaseEngine, GhwResult


class OracleEngine(BaseEngine):
    """Subspace enumeration over the evaluation code itself."""

    _name = "oracle"

    def __init__(self, curve: CurveInstance, printlog: bool = False, budget: int = DEFAULT_ORACLE_BUDGET, **params):
        if not isinstance(curve, CurveInstance):
            raise CurveError("the oracle engine evaluates codes and needs the curve points")
        super().__init__(curve, printlog, **params)
        self.budget = budget

    def compute(self, monomials: MonomialSet, r: int, degree: Optional[int] = None) -> GhwResult:
        value = ghw_bruteforce(evaluate_code(self.curve, monomials), r, self.budget)
        self.log(f"r={r} d_r={value}")
        return GhwResult(r=r, value=value, witness=None, method="oracle", n=self.params.n, search="subspaces")
