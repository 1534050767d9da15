from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union

from algebra.curve import CurveInstance
from algebra.monomial import MonomialSet
from algebra.params import CurveParams
from utils.logs import logger

CurveLike = Union[CurveParams, CurveInstance]


def as_params(curve: CurveLike) -> CurveParams:
    """Footprint engines only need (q, s, u); accept a full curve as well."""
    return curve.params if isinstance(curve, CurveInstance) else curve


@dataclass
class GhwResult:
    """One generalized Hamming weight d_r with the subset attaining it."""

    r: int
    value: int
    witness: Optional[MonomialSet]
    method: str
    n: int
    exact: bool = True
    search: Optional[str] = None
    cartesian: Optional[int] = None
    notes: List[str] = field(default_factory=list)

    @property
    def delta_star(self) -> int:
        return self.n - self.value

    def to_dict(self) -> Dict[str, Any]:
        return {
            "r": self.r,
            "d_r": self.value,
            "witness": self.witness.labels() if self.witness is not None else [],
            "method": self.method,
            "exact": self.exact,
            "search": self.search,
            "cartesian": self.cartesian,
        }


class BaseEngine:
    """base engine"""

    _name = "base"

    def __init__(self, curve: CurveLike, printlog: bool = False, **params: Any):
        self.curve = curve
        self.params = as_params(curve)
        self.printlog = printlog
        self.options = params

    def log(self, txt: str, doprint: bool = False) -> None:
        """Logging function for this engine"""
        if self.printlog or doprint:
            logger.info("%s %s: %s" % (self._name, self.params, txt))

    def compute(self, monomials: MonomialSet, r: int, degree: Optional[int] = None) -> GhwResult:
        raise NotImplementedError

    def hierarchy(self, monomials: MonomialSet, degree: Optional[int] = None) -> List[GhwResult]:
        results = [self.compute(monomials, r, degree) for r in range(1, len(monomials) + 1)]
        self.log("hierarchy " + " ".join(str(res.value) for res in results))
        return results
