from functools import reduce
from operator import mul
from typing import List, Optional, Sequence

import numpy as np

from algebra.codes import Polynomial
from algebra.curve import CurveInstance
from algebra.errors import CodeError, CurveError, MonomialError
from algebra.field import FieldSpec
from algebra.monomial import Monomial, MonomialSet


def common_zero_count(F: Sequence[Polynomial], curve: CurveInstance) -> int:
    """Points of the curve where every polynomial of F vanishes."""
    if not F:
        raise CodeError("common zeros of an empty family")
    values = np.stack([f.evaluate(curve).view(np.ndarray) for f in F])
    return int(np.count_nonzero(~np.any(values != 0, axis=0)))


def staircase_corners(N: MonomialSet) -> List[Monomial]:
    """Minimal members of N that x^(a1+u) does not divide."""
    limit = N.min_a + N.params.u
    members = [m for m in N.ordered if m.a < limit]
    return [m for m in members if not any(o != m and o.divides(m) for o in members)]


def _product(field: FieldSpec, factors: Sequence[Polynomial]) -> Polynomial:
    return reduce(mul, factors, Polynomial.constant(field))


def witness_family(N: MonomialSet, curve: CurveInstance, gamma: Optional[int] = None) -> List[Polynomial]:
    """Polynomials with initial monomials N and exactly delta_star(N) common zeros.

    Fix gamma in GF(q)*. The x-factors use first the x-coordinates with
    x^u != gamma, then those with x^u = gamma; the y-factors use elements of
    trace gamma. Members that are not staircase corners reuse a corner's
    polynomial with raised multiplicities, or the factor x^u - gamma when
    x^(a1+u) divides them.

    Args:
        N (MonomialSet): nonempty set inside the box
        curve (CurveInstance): the curve whose points are counted
        gamma (Optional[int]): code of a nonzero element of GF(q), default 1

    Returns:
        List[Polynomial]: one polynomial per member of N, in the weighted order
    """
    if not len(N):
        raise MonomialError("witness family of an empty set")
    N.check_box()
    field, u = curve.field, curve.u
    g = field.gf(1) if gamma is None else field.gf(gamma)
    if g == 0 or g**field.q != g:
        raise CurveError(f"gamma={int(g)} is not a nonzero element of GF({field.q})")

    xs = np.unique(curve.x_codes)
    on_gamma = field.codes(field.gf(xs) ** u) == int(g)
    others, shifted = xs[~on_gamma].tolist(), xs[on_gamma].tolist()
    betas = np.flatnonzero(field.trace_table == int(g)).tolist()

    a1 = N.min_a
    lead = min(a1, len(others))
    base = [Polynomial.x_minus(field, alpha) for alpha in others[:lead]]
    alpha1 = Polynomial.x_minus(field, others[0])
    beta1 = Polynomial.y_minus(field, betas[0])

    def corner_poly(m: Monomial) -> Polynomial:
        factors = base + [Polynomial.x_minus(field, alpha) for alpha in shifted[: m.a - lead]]
        factors += [Polynomial.y_minus(field, beta) for beta in betas[: m.b]]
        return _product(field, factors)

    corners = staircase_corners(N)
    by_corner = {m: corner_poly(m) for m in corners}
    x_u_minus_gamma = Polynomial.from_terms(field, {Monomial(u, 0): 1, Monomial(0, 0): int(-g)})

    family = []
    for m in N.ordered:
        if m in by_corner:
            family.append(by_corner[m])
            continue
        corner = next((c for c in corners if c.divides(m)), None)
        if corner is not None:
            family.append(by_corner[corner] * alpha1 ** (m.a - corner.a) * beta1 ** (m.b - corner.b))
        else:
            family.append(_product(field, [x_u_minus_gamma] + base + [alpha1 ** (m.a - a1 - u), beta1**m.b]))
    return family
