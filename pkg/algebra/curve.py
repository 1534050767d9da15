from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from utils.logs import logger

from .errors import CurveError
from .field import FieldElement, FieldSpec, build_extension, split_prime_power
from .params import CurveParams

Point = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class CurveInstance:
    """Affine rational points of x^u = Tr(y) over GF(q^s).

    Points are kept as two coordinate arrays sorted by (x code, y code).
    """

    field: FieldSpec
    u: int
    x: FieldElement
    y: FieldElement

    @cached_property
    def params(self) -> CurveParams:
        return CurveParams(self.field.q, self.field.s, self.u)

    @property
    def n(self) -> int:
        return len(self.x)

    @cached_property
    def x_codes(self) -> np.ndarray:
        return self.field.codes(self.x)

    @cached_property
    def y_codes(self) -> np.ndarray:
        return self.field.codes(self.y)

    @property
    def points(self) -> List[Point]:
        return list(zip(self.x_codes.tolist(), self.y_codes.tolist()))

    def to_json(self) -> List[List[int]]:
        return [list(p) for p in self.points]


def enumerate_points(field: FieldSpec, u: int) -> CurveInstance:
    """Build the point list as the union over gamma in GF(q) of
    {alpha : alpha^u = gamma} x {beta : Tr(beta) = gamma}.
    """
    if u < 1 or field.norm_exponent % u:
        logger.error(f"u={u} does not divide {field.norm_exponent}")
        raise CurveError(f"u={u} does not divide (q^s-1)/(q-1)={field.norm_exponent}")
    powers = field.codes(field.elements() ** u)
    traces = field.trace_table
    xs, ys = [], []
    for gamma in field.codes(field.subfield).tolist():
        alphas = np.flatnonzero(powers == gamma)
        betas = np.flatnonzero(traces == gamma)
        xs.append(np.repeat(alphas, len(betas)))
        ys.append(np.tile(betas, len(alphas)))
    x_codes = np.concatenate(xs)
    y_codes = np.concatenate(ys)
    order = np.lexsort((y_codes, x_codes))
    curve = CurveInstance(field=field, u=u, x=field.gf(x_codes[order]), y=field.gf(y_codes[order]))
    expected = curve.params.n
    if curve.n != expected:
        raise CurveError(f"enumerated {curve.n} points, expected {expected}")
    logger.debug(f"curve {curve.params}: {curve.n} points")
    return curve


def gamma_classes(curve: CurveInstance) -> Dict[int, List[Point]]:
    """Partition of the points by gamma = x^u = Tr(y), keyed by gamma's code."""
    gammas = curve.field.trace_table[curve.y_codes]
    classes: Dict[int, List[Point]] = {g: [] for g in curve.field.codes(curve.field.subfield).tolist()}
    for point, gamma in zip(curve.points, gammas.tolist()):
        classes[gamma].append(point)
    return classes


def curve_stats(curve: CurveInstance) -> Dict[str, int]:
    return {"n": curve.n, "genus": curve.params.genus}


def x_fiber(curve: CurveInstance, alpha: int) -> List[Point]:
    return [p for p in curve.points if p[0] == alpha]


def y_fiber(curve: CurveInstance, beta: int) -> List[Point]:
    return [p for p in curve.points if p[1] == beta]


def build_curve(q: int, s: int, u: int, modulus: Optional[Sequence[int]] = None) -> CurveInstance:
    p, a = split_prime_power(q)
    return enumerate_points(build_extension(p, a, s, modulus), u)
